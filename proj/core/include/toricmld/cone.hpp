#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "toricmld/lattice.hpp"

namespace toricmld {

/// Lattice points of a simplicial cone with barycentric coordinates in [0,1)
/// with respect to its rays (the fundamental parallelepiped).
struct BoxPoints {
  std::vector<LatticeVector> points;              // sorted lexicographically, 0 first
  std::vector<std::vector<Rational>> barycentric;  // aligned with points
  Integer index;                                  // [N ∩ span : Z<rays>]
};

/// Pointed rational polyhedral cone in N_R = Q^rank.
///
/// Rays are primitive, extreme and sorted lexicographically. Facet normals
/// are primitive integer vectors of M, nonnegative on the cone, and together
/// with the span equations give the H-representation. All of this is
/// computed once at construction.
class Cone {
 public:
  /// The zero cone of rank 0. Mostly useful as a placeholder.
  Cone() = default;

  /// Cone generated by `generators`. Zero generators are ignored and the rest
  /// normalized to primitive vectors; non-extreme generators are dropped.
  /// Throws ErrorCode::NotPointed if the cone contains a line.
  static Cone make(std::size_t rank, std::span<const LatticeVector> generators);
  static Cone zero(std::size_t rank) { return make(rank, {}); }

  std::size_t rank() const noexcept { return rank_; }
  std::size_t dim() const noexcept { return span_.dim; }
  const std::vector<LatticeVector>& rays() const noexcept { return rays_; }
  const std::vector<LatticeVector>& facet_normals() const noexcept { return facet_normals_; }
  std::vector<LinearForm> facets() const;
  const std::vector<LatticeVector>& span_equations() const noexcept { return span_.equations; }
  const SaturatedSpan& span() const noexcept { return span_; }

  bool is_zero() const noexcept { return rays_.empty(); }
  bool is_simplicial() const noexcept { return rays_.size() == dim(); }

  bool contains(const LatticeVector& v) const;
  bool relint_contains(const LatticeVector& v) const;
  bool in_span(const LatticeVector& v) const;

  /// Sum of the rays; a lattice point of the relative interior.
  LatticeVector interior_point() const;

  /// Ray subsets (bitmask over rays()) of all faces, including the empty set
  /// for {0} and the full set for the cone itself, ordered by dimension and
  /// then canonically.
  const std::vector<std::uint64_t>& face_masks() const noexcept { return face_masks_; }
  std::vector<Cone> faces() const;
  Cone face(std::uint64_t mask) const;

  /// True if `other` is a face of this cone (both in the same lattice).
  bool has_face(const Cone& other) const;

  friend bool operator==(const Cone& a, const Cone& b) { return a.rank_ == b.rank_ && a.rays_ == b.rays_; }
  friend bool operator<(const Cone& a, const Cone& b);

 private:
  std::size_t rank_ = 0;
  std::vector<LatticeVector> rays_;
  std::vector<LatticeVector> facet_normals_;
  std::vector<std::uint64_t> facet_ray_masks_;  // rays lying on each facet
  std::vector<std::uint64_t> face_masks_{0};
  SaturatedSpan span_;
};

/// Canonical cone order: by dimension, then lexicographically by ray list.
bool cone_order(const Cone& a, const Cone& b);

bool is_simplicial(const Cone& c);

/// Throws ErrorCode::NotSimplicial for non-simplicial cones.
BoxPoints box_points(const Cone& c);

/// Simplicial with index 1, i.e. rays form part of a basis of N.
bool is_smooth_cone(const Cone& c);

/// Placing triangulation in canonical ray order; uses only the rays of c.
std::vector<Cone> triangulate(const Cone& c);

/// σ ∩ τ for two cones of the same rank.
Cone intersect(const Cone& a, const Cone& b);

}  // namespace toricmld
