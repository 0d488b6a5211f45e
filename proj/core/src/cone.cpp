#include "toricmld/cone.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "double_description.hpp"
#include "toricmld/error.hpp"

namespace toricmld {

namespace {

constexpr std::size_t kMaxRays = 64;

std::uint64_t bit(std::size_t i) { return std::uint64_t{1} << i; }

std::vector<std::size_t> mask_indices(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i);
  return out;
}

bool mask_order(std::uint64_t a, std::uint64_t b) {
  int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  auto ia = mask_indices(a), ib = mask_indices(b);
  return ia < ib;
}

}  // namespace

Cone Cone::make(std::size_t rank, std::span<const LatticeVector> generators) {
  std::vector<LatticeVector> gens;
  for (const auto& g : generators) {
    if (g.size() != rank) {
      throw Error(ErrorCode::DimensionMismatch, "generator " + to_string(g) + " is not in a rank-" + std::to_string(rank) + " lattice");
    }
    if (!g.is_zero()) gens.push_back(primitive(g));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  Cone cone;
  cone.rank_ = rank;
  cone.span_ = saturated_span(gens, rank);
  const std::size_t d = cone.span_.dim;
  if (d == 0) return cone;

  std::vector<LatticeVector> coords;
  coords.reserve(gens.size());
  for (const auto& g : gens) coords.push_back(cone.span_.coordinates(g));

  std::vector<LatticeVector> normals;
  try {
    normals = detail::extreme_rays(coords, d);
  } catch (const Error&) {
    throw Error(ErrorCode::NotPointed, "cone contains a line");
  }
  if (toricmld::rank(normals) < d) throw Error(ErrorCode::NotPointed, "cone contains a line");

  // Extreme generators are exactly those lying on d-1 independent facets.
  std::vector<std::size_t> extreme;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<LatticeVector> tight;
    for (const auto& y : normals)
      if (dot(y, coords[i]) == 0) tight.push_back(y);
    if (toricmld::rank(tight) + 1 == d) extreme.push_back(i);
  }
  if (extreme.size() > kMaxRays) throw Error(ErrorCode::DimensionMismatch, "cones with more than 64 rays are not supported");

  for (std::size_t i : extreme) cone.rays_.push_back(gens[i]);

  // Lift facet normals from span coordinates to M, keeping the ray masks.
  std::vector<std::pair<LatticeVector, std::uint64_t>> lifted;
  for (const auto& y : normals) {
    LatticeVector m(rank);
    for (std::size_t j = 0; j < d; ++j) m += y[j] * cone.span_.to_coordinates.row(j);
    std::uint64_t mask = 0;
    for (std::size_t r = 0; r < extreme.size(); ++r)
      if (dot(y, coords[extreme[r]]) == 0) mask |= bit(r);
    lifted.emplace_back(primitive(m), mask);
  }
  std::sort(lifted.begin(), lifted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [m, mask] : lifted) {
    cone.facet_normals_.push_back(std::move(m));
    cone.facet_ray_masks_.push_back(mask);
  }

  // Faces are the intersections of facet families.
  const std::uint64_t all = cone.rays_.size() == 64 ? ~std::uint64_t{0} : bit(cone.rays_.size()) - 1;
  std::set<std::uint64_t> seen{all};
  std::vector<std::uint64_t> queue{all};
  while (!queue.empty()) {
    std::uint64_t f = queue.back();
    queue.pop_back();
    for (std::uint64_t facet : cone.facet_ray_masks_) {
      std::uint64_t g = f & facet;
      if (seen.insert(g).second) queue.push_back(g);
    }
  }
  cone.face_masks_.assign(seen.begin(), seen.end());
  std::sort(cone.face_masks_.begin(), cone.face_masks_.end(), mask_order);
  return cone;
}

std::vector<LinearForm> Cone::facets() const {
  std::vector<LinearForm> out;
  for (const auto& m : facet_normals_) {
    std::vector<Rational> coords(m.coords().begin(), m.coords().end());
    out.emplace_back(std::move(coords));
  }
  return out;
}

bool Cone::in_span(const LatticeVector& v) const {
  if (v.size() != rank_) return false;
  return std::all_of(span_.equations.begin(), span_.equations.end(), [&](const auto& e) { return dot(e, v) == 0; });
}

bool Cone::contains(const LatticeVector& v) const {
  if (!in_span(v)) return false;
  return std::all_of(facet_normals_.begin(), facet_normals_.end(), [&](const auto& m) { return dot(m, v) >= 0; });
}

bool Cone::relint_contains(const LatticeVector& v) const {
  if (!in_span(v)) return false;
  return std::all_of(facet_normals_.begin(), facet_normals_.end(), [&](const auto& m) { return dot(m, v) > 0; });
}

LatticeVector Cone::interior_point() const {
  LatticeVector s(rank_);
  for (const auto& r : rays_) s += r;
  return s;
}

Cone Cone::face(std::uint64_t mask) const {
  std::vector<LatticeVector> gens;
  for (std::size_t i : mask_indices(mask)) gens.push_back(rays_.at(i));
  return make(rank_, gens);
}

std::vector<Cone> Cone::faces() const {
  std::vector<Cone> out;
  out.reserve(face_masks_.size());
  for (std::uint64_t mask : face_masks_) out.push_back(face(mask));
  return out;
}

bool Cone::has_face(const Cone& other) const {
  if (other.rank_ != rank_) return false;
  std::uint64_t mask = 0;
  for (const auto& r : other.rays_) {
    auto it = std::lower_bound(rays_.begin(), rays_.end(), r);
    if (it == rays_.end() || !(*it == r)) return false;
    mask |= bit(static_cast<std::size_t>(it - rays_.begin()));
  }
  return std::binary_search(face_masks_.begin(), face_masks_.end(), mask, mask_order);
}

bool cone_order(const Cone& a, const Cone& b) {
  if (a.dim() != b.dim()) return a.dim() < b.dim();
  return std::lexicographical_compare(a.rays().begin(), a.rays().end(), b.rays().begin(), b.rays().end());
}

bool operator<(const Cone& a, const Cone& b) { return cone_order(a, b); }

bool is_simplicial(const Cone& c) { return c.is_simplicial(); }

BoxPoints box_points(const Cone& c) {
  if (!c.is_simplicial()) throw Error(ErrorCode::NotSimplicial, "box points need a simplicial cone");
  const std::size_t d = c.dim();
  BoxPoints out;
  if (d == 0) {
    out.points.push_back(LatticeVector(c.rank()));
    out.barycentric.emplace_back();
    out.index = 1;
    return out;
  }

  std::vector<LatticeVector> columns;
  for (const auto& u : c.rays()) columns.push_back(c.span().coordinates(u));
  SmithForm snf = smith_normal_form(IntMatrix::from_columns(columns, d));
  std::vector<Integer> divisors = snf.invariant_factors();

  out.index = 1;
  for (const auto& di : divisors) out.index *= di;

  // Coset representatives of Z^d / R Z^d are U^{-1} k with 0 <= k_i < d_i;
  // their barycentric coordinates are R^{-1} U^{-1} k = V D^{-1} k.
  std::vector<Integer> k(d, 0);
  std::vector<std::pair<LatticeVector, std::vector<Rational>>> found;
  while (true) {
    std::vector<Rational> t(d, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < d; ++j) {
        if (k[j] == 0) continue;
        s += Rational(snf.right.at(i, j)) * make_rational(k[j], divisors[j]);
      }
      t[i] = floor_fraction(s);
    }
    LatticeVector p(c.rank());
    std::vector<Rational> pc(c.rank(), Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
      if (t[i] == 0) continue;
      for (std::size_t x = 0; x < c.rank(); ++x) pc[x] += t[i] * c.rays()[i][x];
    }
    for (std::size_t x = 0; x < c.rank(); ++x) p[x] = pc[x].get_num();
    found.emplace_back(std::move(p), std::move(t));

    std::size_t j = 0;
    while (j < d) {
      ++k[j];
      if (k[j] < divisors[j]) break;
      k[j] = 0;
      ++j;
    }
    if (j == d) break;
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [p, t] : found) {
    out.points.push_back(std::move(p));
    out.barycentric.push_back(std::move(t));
  }
  return out;
}

bool is_smooth_cone(const Cone& c) { return c.is_simplicial() && box_points(c).index == 1; }

std::vector<Cone> triangulate(const Cone& c) {
  if (c.is_simplicial()) return {c};
  const auto& rays = c.rays();
  std::vector<LatticeVector> coords;
  for (const auto& r : rays) coords.push_back(c.span().coordinates(r));

  using Cell = std::vector<std::size_t>;
  std::vector<Cell> cells;
  std::vector<LatticeVector> placed;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    std::size_t before = rank(placed);
    placed.push_back(coords[i]);
    if (cells.empty()) {
      cells.push_back({i});
      continue;
    }
    if (rank(placed) > before) {
      for (auto& cell : cells) cell.push_back(i);
      continue;
    }
    // Boundary facets of the current triangulation visible from the new ray.
    std::map<Cell, std::pair<int, std::size_t>> facet_count;  // facet -> (count, opposite ray)
    for (const auto& cell : cells) {
      for (std::size_t drop = 0; drop < cell.size(); ++drop) {
        Cell facet;
        for (std::size_t j = 0; j < cell.size(); ++j)
          if (j != drop) facet.push_back(cell[j]);
        auto& entry = facet_count[facet];
        entry.first += 1;
        entry.second = cell[drop];
      }
    }
    std::vector<Cell> added;
    for (const auto& [facet, entry] : facet_count) {
      if (entry.first != 1) continue;
      std::vector<LatticeVector> rows;
      std::vector<Rational> rhs;
      for (std::size_t f : facet) {
        rows.push_back(coords[f]);
        rhs.emplace_back(0);
      }
      rows.push_back(coords[entry.second]);
      rhs.emplace_back(1);
      auto ell = solve_rational(IntMatrix::from_rows(rows, c.dim()), rhs);
      Rational side = 0;
      for (std::size_t x = 0; x < c.dim(); ++x) side += (*ell)[x] * coords[i][x];
      if (side < 0) {
        Cell cell = facet;
        cell.push_back(i);
        added.push_back(std::move(cell));
      }
    }
    cells.insert(cells.end(), added.begin(), added.end());
  }

  std::vector<Cone> out;
  for (const auto& cell : cells) {
    std::vector<LatticeVector> gens;
    for (std::size_t j : cell) gens.push_back(rays[j]);
    out.push_back(Cone::make(c.rank(), gens));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.rank() != b.rank()) throw Error(ErrorCode::DimensionMismatch, "intersection of cones in different lattices");
  const std::size_t n = a.rank();
  std::vector<LatticeVector> eqs = a.span_equations();
  eqs.insert(eqs.end(), b.span_equations().begin(), b.span_equations().end());

  std::vector<LatticeVector> kernel;
  if (eqs.empty()) {
    for (std::size_t i = 0; i < n; ++i) kernel.push_back(IntMatrix::identity(n).column(i));
  } else {
    kernel = kernel_basis(IntMatrix::from_rows(eqs, n));
  }
  const std::size_t k = kernel.size();
  if (k == 0) return Cone::zero(n);

  std::vector<LatticeVector> constraints;
  for (const auto* cone : {&a, &b})
    for (const auto& m : cone->facet_normals()) {
      LatticeVector c(k);
      for (std::size_t j = 0; j < k; ++j) c[j] = dot(m, kernel[j]);
      if (!c.is_zero()) constraints.push_back(std::move(c));
    }
  std::vector<LatticeVector> rays;
  for (const auto& z : detail::extreme_rays(constraints, k)) {
    LatticeVector v(n);
    for (std::size_t j = 0; j < k; ++j) v += z[j] * kernel[j];
    rays.push_back(std::move(v));
  }
  return Cone::make(n, rays);
}

}  // namespace toricmld
