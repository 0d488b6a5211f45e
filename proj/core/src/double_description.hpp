#pragma once

#include <vector>

#include "toricmld/lattice.hpp"

namespace toricmld::detail {

/// Extreme rays of the pointed cone {y ∈ Q^dim : c·y >= 0 for every c in
/// constraints}, via the double description method with the algebraic
/// adjacency test. The constraints must span Q^dim (pointedness). Rays are
/// returned primitive and sorted lexicographically.
std::vector<LatticeVector> extreme_rays(const std::vector<LatticeVector>& constraints, std::size_t dim);

/// LatticeVector with rational entries cleared to a primitive integer vector
/// of the same direction.
LatticeVector clear_denominators(const std::vector<Rational>& v);

}  // namespace toricmld::detail
