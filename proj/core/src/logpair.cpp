#include "toricmld/logpair.hpp"

#include <algorithm>
#include <set>

#include "toricmld/error.hpp"

namespace toricmld {

ToricLogPair ToricLogPair::make(Fan fan, std::vector<Rational> boundary) {
  if (boundary.size() != fan.rays().size()) {
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(fan.rays().size()) + " boundary coefficients, got " +
                                                  std::to_string(boundary.size()));
  }
  ToricLogPair pair;
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    if (boundary[i] < 0 || boundary[i] > 1) {
      throw Error(ErrorCode::CoefficientOutOfRange,
                  "ray " + std::to_string(i) + " " + to_string(fan.rays()[i]) + " has coefficient " + to_string(boundary[i]));
    }
    pair.log_disc_.push_back(Rational(1 - boundary[i]));
  }

  for (std::size_t m : fan.maximal_cones()) {
    const auto& ray_idx = fan.cone_ray_indices(m);
    std::vector<Rational> rhs;
    for (std::size_t r : ray_idx) rhs.push_back(pair.log_disc_[r]);
    auto phi = solve_rational(IntMatrix::from_rows(fan.cone(m).rays(), fan.rank()), rhs);
    if (!phi) {
      std::string rays;
      for (std::size_t r : ray_idx) rays += (rays.empty() ? "" : ",") + std::to_string(r);
      throw Error(ErrorCode::NotRCartier, "no linear form matches the log discrepancies on the cone with rays {" + rays + "}");
    }
    pair.forms_.emplace_back(std::move(*phi));
  }
  pair.form_slot_.resize(fan.cones().size());
  for (std::size_t i = 0; i < fan.cones().size(); ++i) {
    std::size_t m = fan.maximal_containing(i);
    auto it = std::find(fan.maximal_cones().begin(), fan.maximal_cones().end(), m);
    pair.form_slot_[i] = static_cast<std::size_t>(it - fan.maximal_cones().begin());
  }
  pair.fan_ = std::move(fan);
  pair.boundary_ = std::move(boundary);
  return pair;
}

const LinearForm& ToricLogPair::cartier_form(std::size_t cone_index) const { return forms_.at(form_slot_.at(cone_index)); }

Rational ToricLogPair::log_discrepancy_at(const LatticeVector& v) const {
  auto c = fan_.carrier(v);
  if (!c) throw Error(ErrorCode::NotInSupport, to_string(v) + " is not in the support of the fan");
  return cartier_form(*c)(v);
}

namespace {

std::size_t require_cone(const ToricLogPair& pair, const Cone& sigma) {
  auto idx = pair.fan().find(sigma);
  if (!idx) throw Error(ErrorCode::ConeNotInFan, "cone is not in the fan");
  return *idx;
}

// Simplicial cells whose relative interiors partition relint(σ): the faces of
// a triangulation of σ that are not contained in a proper face of σ.
std::vector<Cone> interior_cells(const Cone& sigma) {
  if (sigma.is_simplicial()) return {sigma};
  std::set<std::vector<LatticeVector>> seen;
  std::vector<Cone> out;
  for (const auto& cell : triangulate(sigma)) {
    for (std::uint64_t mask : cell.face_masks()) {
      Cone gamma = cell.face(mask);
      if (!seen.insert(gamma.rays()).second) continue;
      if (sigma.relint_contains(gamma.interior_point())) out.push_back(std::move(gamma));
    }
  }
  return out;
}

}  // namespace

OrbitMld mld_orbit(const ToricLogPair& pair, std::size_t cone_index) {
  if (cone_index >= pair.fan().cones().size()) throw Error(ErrorCode::ConeNotInFan, "cone index out of range");
  const Cone& sigma = pair.fan().cone(cone_index);
  if (sigma.is_zero()) return {Rational(0), LatticeVector(pair.rank())};
  const LinearForm& phi = pair.cartier_form(cone_index);

  std::optional<OrbitMld> best;
  for (const auto& gamma : interior_cells(sigma)) {
    // Lattice points with barycentric coordinates in (0,1]: shift each box
    // point by the rays along which its coordinate vanishes.
    BoxPoints box = box_points(gamma);
    for (std::size_t p = 0; p < box.points.size(); ++p) {
      LatticeVector candidate = box.points[p];
      for (std::size_t i = 0; i < gamma.rays().size(); ++i)
        if (box.barycentric[p][i] == 0) candidate += gamma.rays()[i];
      Rational value = phi(candidate);
      if (!best || value < best->value || (value == best->value && candidate < best->witness)) {
        best = OrbitMld{std::move(value), std::move(candidate)};
      }
    }
  }
  return *best;
}

OrbitMld mld_orbit(const ToricLogPair& pair, const Cone& sigma) { return mld_orbit(pair, require_cone(pair, sigma)); }

Rational mld_closed_point(const ToricLogPair& pair, std::size_t cone_index) {
  const Cone& sigma = pair.fan().cone(cone_index);
  return mld_orbit(pair, cone_index).value + static_cast<long>(pair.rank() - sigma.dim());
}

Rational mld_closed_point(const ToricLogPair& pair, const Cone& sigma) {
  return mld_closed_point(pair, require_cone(pair, sigma));
}

MldReport report(const ToricLogPair& pair) {
  MldReport out;
  const auto& cones = pair.fan().cones();
  for (std::size_t i = 0; i < cones.size(); ++i) {
    OrbitMld m = mld_orbit(pair, i);
    out.closed_point_mld.push_back(m.value + static_cast<long>(pair.rank() - cones[i].dim()));
    out.orbit_mld.push_back(std::move(m.value));
    out.witness.push_back(std::move(m.witness));
    out.strata[out.closed_point_mld.back()].push_back(i);
  }
  for (const auto& [value, members] : out.strata) out.spectrum.push_back(value);
  return out;
}

Classification classify(const Fan& fan, const MldReport& rep) {
  Classification c;
  for (std::size_t i = 0; i < fan.cones().size(); ++i) {
    const std::size_t dim = fan.cone(i).dim();
    const Rational& a = rep.orbit_mld[i];
    if (dim >= 1 && a <= 0 && c.klt) {
      c.klt = false;
      c.klt_violation = i;
    }
    if (dim >= 2 && a < 1 && c.canonical) {
      c.canonical = false;
      c.canonical_violation = i;
    }
    if (dim >= 2 && a <= 1 && c.terminal) {
      c.terminal = false;
      c.terminal_violation = i;
    }
  }
  return c;
}

Classification classify(const ToricLogPair& pair) { return classify(pair.fan(), report(pair)); }

ToricLogPair product(const ToricLogPair& p, const ToricLogPair& q) {
  Fan fan = product(p.fan(), q.fan());
  const LatticeVector zero_p(p.rank()), zero_q(q.rank());
  std::vector<Rational> boundary(fan.rays().size());
  for (std::size_t i = 0; i < p.fan().rays().size(); ++i)
    boundary[*fan.ray_index(direct_sum(p.fan().rays()[i], zero_q))] = p.boundary()[i];
  for (std::size_t i = 0; i < q.fan().rays().size(); ++i)
    boundary[*fan.ray_index(direct_sum(zero_p, q.fan().rays()[i]))] = q.boundary()[i];
  return ToricLogPair::make(std::move(fan), std::move(boundary));
}

}  // namespace toricmld
