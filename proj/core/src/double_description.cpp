#include "double_description.hpp"

#include <algorithm>

#include "toricmld/error.hpp"

namespace toricmld::detail {

LatticeVector clear_denominators(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& q : v) l = lcm(l, q.get_den());
  LatticeVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i] * l).get_num();
  return out.is_zero() ? out : primitive(out);
}

namespace {

struct DdRay {
  LatticeVector vec;
  std::vector<bool> tight;  // indexed by constraint, meaningful for processed ones
};

}  // namespace

std::vector<LatticeVector> extreme_rays(const std::vector<LatticeVector>& constraints, std::size_t dim) {
  if (dim == 0) return {};
  const std::size_t m = constraints.size();

  // Greedy choice of dim independent constraints for the initial simplex cone.
  std::vector<std::size_t> basis_rows;
  std::vector<LatticeVector> basis_vecs;
  for (std::size_t k = 0; k < m && basis_rows.size() < dim; ++k) {
    basis_vecs.push_back(constraints[k]);
    if (rank(basis_vecs) == basis_vecs.size()) {
      basis_rows.push_back(k);
    } else {
      basis_vecs.pop_back();
    }
  }
  if (basis_rows.size() < dim) throw Error(ErrorCode::NotPointed, "constraint system has a lineality space");

  std::vector<bool> processed(m, false);
  for (std::size_t k : basis_rows) processed[k] = true;

  // Columns of the inverse of the basis matrix: ray j is tight on every
  // basis constraint except the j-th.
  IntMatrix a = IntMatrix::from_rows(basis_vecs, dim);
  std::vector<DdRay> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<Rational> e(dim, Rational(0));
    e[j] = 1;
    auto sol = solve_rational(a, e);
    DdRay ray{clear_denominators(*sol), std::vector<bool>(m, false)};
    for (std::size_t k = 0; k < m; ++k) ray.tight[k] = processed[k] && dot(constraints[k], ray.vec) == 0;
    rays.push_back(std::move(ray));
  }

  auto adjacent = [&](const DdRay& p, const DdRay& q) {
    std::vector<LatticeVector> common;
    for (std::size_t k = 0; k < m; ++k)
      if (processed[k] && p.tight[k] && q.tight[k]) common.push_back(constraints[k]);
    if (common.size() + 2 < dim) return false;
    return rank(common) + 2 == dim;
  };

  for (std::size_t k = 0; k < m; ++k) {
    if (processed[k]) continue;
    const LatticeVector& c = constraints[k];
    std::vector<Integer> value(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) value[i] = dot(c, rays[i].vec);

    std::vector<DdRay> next;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (value[i] >= 0) next.push_back(rays[i]);
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (value[i] <= 0) continue;
      for (std::size_t j = 0; j < rays.size(); ++j) {
        if (value[j] >= 0 || !adjacent(rays[i], rays[j])) continue;
        LatticeVector combo = value[i] * rays[j].vec - value[j] * rays[i].vec;
        DdRay ray{primitive(combo), std::vector<bool>(m, false)};
        for (std::size_t t = 0; t < m; ++t) ray.tight[t] = processed[t] && rays[i].tight[t] && rays[j].tight[t];
        next.push_back(std::move(ray));
      }
    }
    processed[k] = true;
    for (auto& ray : next) ray.tight[k] = dot(c, ray.vec) == 0;
    rays = std::move(next);
  }

  std::vector<LatticeVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.vec));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace toricmld::detail
