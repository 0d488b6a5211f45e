#include "toricmld/fan.hpp"

#include <algorithm>
#include <set>

#include "toricmld/error.hpp"

namespace toricmld {

namespace {

std::string describe(const Cone& c) {
  std::string s = "cone{";
  for (std::size_t i = 0; i < c.rays().size(); ++i) s += (i ? "," : "") + to_string(c.rays()[i]);
  return s + "}";
}

Integer simplicial_index(const Cone& c) {
  std::vector<LatticeVector> columns;
  for (const auto& u : c.rays()) columns.push_back(c.span().coordinates(u));
  return abs(determinant(IntMatrix::from_columns(columns, c.dim())));
}

}  // namespace

Fan Fan::from_cones(std::size_t rank, std::vector<Cone> cones, FanCheck check) {
  Fan fan;
  fan.rank_ = rank;

  std::set<std::vector<LatticeVector>> seen;
  std::vector<Cone> all;
  auto add = [&](const Cone& c) {
    if (seen.insert(c.rays()).second) all.push_back(c);
  };
  add(Cone::zero(rank));
  for (const auto& c : cones) {
    if (c.rank() != rank) throw Error(ErrorCode::DimensionMismatch, describe(c) + " is not in a rank-" + std::to_string(rank) + " lattice");
    add(c);
  }
  // Close under faces; only construct faces that are new.
  for (const auto& c : cones) {
    for (std::uint64_t mask : c.face_masks()) {
      std::vector<LatticeVector> rays;
      for (std::size_t i = 0; i < c.rays().size(); ++i)
        if (mask >> i & 1) rays.push_back(c.rays()[i]);
      if (seen.count(rays)) continue;
      add(c.face(mask));
    }
  }
  std::sort(all.begin(), all.end());
  fan.cones_ = std::move(all);

  for (const auto& c : fan.cones_)
    if (c.dim() == 1) fan.rays_.push_back(c.rays().front());

  fan.cone_rays_.reserve(fan.cones_.size());
  for (std::size_t i = 0; i < fan.cones_.size(); ++i) {
    std::vector<std::size_t> idx;
    for (const auto& r : fan.cones_[i].rays()) {
      auto it = std::lower_bound(fan.rays_.begin(), fan.rays_.end(), r);
      idx.push_back(static_cast<std::size_t>(it - fan.rays_.begin()));
    }
    fan.by_rays_.emplace(idx, i);
    fan.cone_rays_.push_back(std::move(idx));
  }

  for (std::size_t i = 0; i < fan.cones_.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < fan.cones_.size() && maximal; ++j) {
      if (fan.cones_[j].dim() > fan.cones_[i].dim() &&
          std::includes(fan.cone_rays_[j].begin(), fan.cone_rays_[j].end(), fan.cone_rays_[i].begin(), fan.cone_rays_[i].end())) {
        maximal = false;
      }
    }
    if (maximal) fan.maximal_.push_back(i);
  }

  if (check == FanCheck::Validate) {
    for (std::size_t a = 0; a < fan.maximal_.size(); ++a)
      for (std::size_t b = a + 1; b < fan.maximal_.size(); ++b) {
        const Cone& s = fan.cones_[fan.maximal_[a]];
        const Cone& t = fan.cones_[fan.maximal_[b]];
        Cone meet = intersect(s, t);
        if (!s.has_face(meet) || !t.has_face(meet)) {
          throw Error(ErrorCode::NotAFan, describe(s) + " and " + describe(t) + " meet in " + describe(meet) + ", which is not a common face");
        }
      }
  }

  fan.maximal_containing_.resize(fan.cones_.size());
  for (std::size_t i = 0; i < fan.cones_.size(); ++i) {
    for (std::size_t m : fan.maximal_) {
      const auto& big = fan.cone_rays_[m];
      const auto& small = fan.cone_rays_[i];
      if (std::includes(big.begin(), big.end(), small.begin(), small.end())) {
        fan.maximal_containing_[i] = m;
        break;
      }
    }
  }
  return fan;
}

Fan Fan::make(std::size_t rank, const std::vector<std::vector<LatticeVector>>& maximal_generators, FanCheck check) {
  std::vector<Cone> cones;
  cones.reserve(maximal_generators.size());
  for (const auto& gens : maximal_generators) cones.push_back(Cone::make(rank, gens));
  return from_cones(rank, std::move(cones), check);
}

std::optional<std::size_t> Fan::ray_index(const LatticeVector& ray) const {
  auto it = std::lower_bound(rays_.begin(), rays_.end(), ray);
  if (it == rays_.end() || !(*it == ray)) return std::nullopt;
  return static_cast<std::size_t>(it - rays_.begin());
}

std::optional<std::size_t> Fan::find(const Cone& c) const {
  if (c.rank() != rank_) return std::nullopt;
  std::vector<std::size_t> idx;
  for (const auto& r : c.rays()) {
    auto i = ray_index(r);
    if (!i) return std::nullopt;
    idx.push_back(*i);
  }
  auto found = find_by_rays(std::move(idx));
  if (found && !(cones_[*found] == c)) return std::nullopt;
  return found;
}

std::optional<std::size_t> Fan::find_by_rays(std::vector<std::size_t> ray_indices) const {
  std::sort(ray_indices.begin(), ray_indices.end());
  auto it = by_rays_.find(ray_indices);
  if (it == by_rays_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> Fan::faces_of(std::size_t i) const {
  std::vector<std::size_t> out;
  const auto& big = cone_rays_.at(i);
  for (std::size_t j = 0; j <= i; ++j) {
    const auto& small = cone_rays_[j];
    if (std::includes(big.begin(), big.end(), small.begin(), small.end())) out.push_back(j);
  }
  return out;
}

std::optional<std::size_t> Fan::carrier(const LatticeVector& v) const {
  if (v.size() != rank_) return std::nullopt;
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].relint_contains(v)) return i;
  return std::nullopt;
}

bool Fan::is_smooth() const {
  return std::all_of(maximal_.begin(), maximal_.end(), [&](std::size_t i) { return is_smooth_cone(cones_[i]); });
}

bool Fan::is_simplicial() const {
  return std::all_of(maximal_.begin(), maximal_.end(), [&](std::size_t i) { return cones_[i].is_simplicial(); });
}

Fan product(const Fan& f, const Fan& g) {
  const std::size_t rank = f.rank() + g.rank();
  const LatticeVector zero_f(f.rank()), zero_g(g.rank());
  std::vector<Cone> cones;
  for (std::size_t a : f.maximal_cones())
    for (std::size_t b : g.maximal_cones()) {
      std::vector<LatticeVector> gens;
      for (const auto& r : f.cone(a).rays()) gens.push_back(direct_sum(r, zero_g));
      for (const auto& r : g.cone(b).rays()) gens.push_back(direct_sum(zero_f, r));
      cones.push_back(Cone::make(rank, gens));
    }
  return Fan::from_cones(rank, std::move(cones), FanCheck::Skip);
}

namespace {

std::vector<std::size_t> containment_map(const Fan& source, const Fan& target) {
  std::vector<std::size_t> out;
  for (std::size_t m : target.maximal_cones()) {
    auto c = source.carrier(target.cone(m).interior_point());
    if (!c) throw Error(ErrorCode::NotInSupport, "target cone leaves the source support");
    out.push_back(*c);
  }
  return out;
}

Fan subdivide_fan(const Fan& f, const LatticeVector& w, FanCheck check) {
  std::vector<Cone> cones;
  for (std::size_t m : f.maximal_cones()) {
    const Cone& sigma = f.cone(m);
    if (!sigma.contains(w)) {
      cones.push_back(sigma);
      continue;
    }
    // Joins of w with the facets of σ that miss w; their faces cover every
    // face of σ not containing w.
    for (std::uint64_t mask : sigma.face_masks()) {
      Cone tau = sigma.face(mask);
      if (tau.dim() + 1 != sigma.dim() || tau.contains(w)) continue;
      std::vector<LatticeVector> gens = tau.rays();
      gens.push_back(w);
      cones.push_back(Cone::make(f.rank(), gens));
    }
  }
  return Fan::from_cones(f.rank(), std::move(cones), check);
}

}  // namespace

Subdivision stellar_subdivide(const Fan& f, const LatticeVector& v, FanCheck check) {
  LatticeVector w = primitive(v);
  if (w.size() != f.rank() || !f.support_contains(w)) {
    throw Error(ErrorCode::NotInSupport, to_string(v) + " is not in the support of the fan");
  }
  Subdivision out{f, f, {}, {}};
  if (!f.ray_index(w)) {
    out.target = subdivide_fan(f, w, check);
    out.new_rays.push_back(w);
  }
  out.containment = containment_map(f, out.target);
  return out;
}

Subdivision resolve(const Fan& f) {
  Fan current = f;
  std::vector<LatticeVector> added;
  while (true) {
    std::optional<LatticeVector> center;
    for (const auto& c : current.cones()) {
      if (!c.is_simplicial()) {
        center = primitive(c.interior_point());
        break;
      }
    }
    if (!center) {
      std::optional<std::size_t> worst;
      Integer worst_index = 1;
      for (std::size_t i = 0; i < current.cones().size(); ++i) {
        Integer idx = simplicial_index(current.cone(i));
        if (idx > worst_index) {
          worst_index = idx;
          worst = i;
        }
      }
      if (!worst) break;
      BoxPoints box = box_points(current.cone(*worst));
      std::optional<std::size_t> pick;
      Rational best_sum;
      for (std::size_t p = 0; p < box.points.size(); ++p) {
        if (box.points[p].is_zero()) continue;
        Rational s = 0;
        for (const auto& t : box.barycentric[p]) s += t;
        if (!pick || s < best_sum) {
          pick = p;
          best_sum = s;
        }
      }
      center = primitive(box.points[*pick]);
    }
    current = subdivide_fan(current, *center, FanCheck::Skip);
    added.push_back(*center);
  }
  Subdivision out{f, std::move(current), {}, std::move(added)};
  out.containment = containment_map(f, out.target);
  return out;
}

}  // namespace toricmld
