#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "toricmld/cone.hpp"

namespace toricmld {

enum class FanCheck { Validate, Skip };

/// Finite face-closed collection of cones in a fixed lattice.
///
/// Rays are numbered lexicographically; cones are stored in canonical order
/// (dimension, then ray list), so cone 0 is always {0}.
class Fan {
 public:
  Fan() = default;

  /// Builds the fan whose cones are the given cones and all their faces.
  /// With FanCheck::Validate every pair of maximal cones must meet in a
  /// common face, otherwise ErrorCode::NotAFan.
  static Fan from_cones(std::size_t rank, std::vector<Cone> cones, FanCheck check = FanCheck::Validate);

  /// make_fan: one generator list per maximal cone.
  static Fan make(std::size_t rank, const std::vector<std::vector<LatticeVector>>& maximal_generators,
                  FanCheck check = FanCheck::Validate);

  /// The fan {0} in a rank-n lattice.
  static Fan point(std::size_t rank) { return from_cones(rank, {}); }

  std::size_t rank() const noexcept { return rank_; }
  const std::vector<LatticeVector>& rays() const noexcept { return rays_; }
  const std::vector<Cone>& cones() const noexcept { return cones_; }
  const Cone& cone(std::size_t i) const { return cones_.at(i); }
  const std::vector<std::size_t>& maximal_cones() const noexcept { return maximal_; }

  /// Fan ray indices of the rays of cone i (sorted).
  const std::vector<std::size_t>& cone_ray_indices(std::size_t i) const { return cone_rays_.at(i); }
  std::optional<std::size_t> ray_index(const LatticeVector& ray) const;
  std::optional<std::size_t> find(const Cone& c) const;
  /// Cone whose ray list is exactly the given fan ray indices.
  std::optional<std::size_t> find_by_rays(std::vector<std::size_t> ray_indices) const;

  /// Indices of the faces of cone i (including {0} and i itself).
  std::vector<std::size_t> faces_of(std::size_t i) const;
  /// The first maximal cone (in canonical order) having cone i as a face.
  std::size_t maximal_containing(std::size_t i) const { return maximal_containing_.at(i); }

  /// The unique cone whose relative interior contains v, if v ∈ |fan|.
  std::optional<std::size_t> carrier(const LatticeVector& v) const;
  bool support_contains(const LatticeVector& v) const { return carrier(v).has_value(); }

  bool is_smooth() const;
  bool is_simplicial() const;

  friend bool operator==(const Fan& a, const Fan& b) { return a.rank_ == b.rank_ && a.cones_ == b.cones_; }

 private:
  std::size_t rank_ = 0;
  std::vector<LatticeVector> rays_;
  std::vector<Cone> cones_;
  std::vector<std::vector<std::size_t>> cone_rays_;
  std::vector<std::size_t> maximal_;
  std::vector<std::size_t> maximal_containing_;
  std::map<std::vector<std::size_t>, std::size_t> by_rays_;
};

/// Product fan in N ⊕ N': cones σ × τ.
Fan product(const Fan& f, const Fan& g);

/// A refinement of `source`. For each maximal cone of `target`, `containment`
/// holds the index of the source cone whose relative interior contains the
/// target cone's relative interior.
struct Subdivision {
  Fan source;
  Fan target;
  std::vector<std::size_t> containment;
  std::vector<LatticeVector> new_rays;  // in insertion order
};

/// Stellar subdivision at primitive(v). Throws ErrorCode::NotInSupport if v
/// is not in |f|. Subdividing at an existing ray returns target == source.
Subdivision stellar_subdivide(const Fan& f, const LatticeVector& v, FanCheck check = FanCheck::Skip);

/// Resolution by iterated stellar subdivision. Non-simplicial cones are first
/// pulled at the primitive sum of their rays (lowest dimension first); then
/// the non-smooth cone of largest index is subdivided at its nonzero box point
/// of least barycentric sum, until every cone is smooth.
Subdivision resolve(const Fan& f);

}  // namespace toricmld
