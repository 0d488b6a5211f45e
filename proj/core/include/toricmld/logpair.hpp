#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "toricmld/fan.hpp"

namespace toricmld {

/// A toric log variety (X, B): a fan with boundary coefficients b_i ∈ [0,1]
/// on its rays (aligned with Fan::rays()). The log discrepancy of the i-th
/// invariant divisor is a_i = 1 - b_i, and on each maximal cone σ there is a
/// linear form φ_σ with φ_σ(v_i) = a_i for the rays v_i of σ.
class ToricLogPair {
 public:
  /// Throws CoefficientOutOfRange for b_i ∉ [0,1] and NotRCartier if some
  /// maximal cone admits no φ_σ.
  static ToricLogPair make(Fan fan, std::vector<Rational> boundary);

  const Fan& fan() const noexcept { return fan_; }
  std::size_t rank() const noexcept { return fan_.rank(); }
  const std::vector<Rational>& boundary() const noexcept { return boundary_; }
  const std::vector<Rational>& log_discrepancies() const noexcept { return log_disc_; }

  /// φ on cone i (taken from a maximal cone containing it).
  const LinearForm& cartier_form(std::size_t cone_index) const;
  const std::vector<LinearForm>& maximal_forms() const noexcept { return forms_; }

  /// φ evaluated on a point of the support; this is a(E_v; B) for the
  /// divisor E_v of a subdivision that has primitive(v) as a ray.
  Rational log_discrepancy_at(const LatticeVector& v) const;

 private:
  Fan fan_;
  std::vector<Rational> boundary_;
  std::vector<Rational> log_disc_;
  std::vector<LinearForm> forms_;       // one per maximal cone, in Fan order
  std::vector<std::size_t> form_slot_;  // cone index -> index into forms_
};

struct OrbitMld {
  Rational value;
  LatticeVector witness;
};

/// a_σ: the minimum of φ_σ over lattice points of relint(σ), and the
/// lexicographically smallest minimizer among the enumerated candidates.
/// Throws ErrorCode::ConeNotInFan.
OrbitMld mld_orbit(const ToricLogPair& pair, const Cone& sigma);
OrbitMld mld_orbit(const ToricLogPair& pair, std::size_t cone_index);

/// a_σ + codim σ, the mld of every closed point of orb(σ).
Rational mld_closed_point(const ToricLogPair& pair, const Cone& sigma);
Rational mld_closed_point(const ToricLogPair& pair, std::size_t cone_index);

struct MldReport {
  std::vector<Rational> orbit_mld;         // indexed like Fan::cones()
  std::vector<Rational> closed_point_mld;  // indexed like Fan::cones()
  std::vector<LatticeVector> witness;      // indexed like Fan::cones()
  std::vector<Rational> spectrum;          // sorted, distinct
  std::map<Rational, std::vector<std::size_t>> strata;
};

MldReport report(const ToricLogPair& pair);

struct Classification {
  bool log_canonical = true;
  bool klt = true;
  bool canonical = true;
  bool terminal = true;
  // First violating cone in canonical order for each false flag.
  std::optional<std::size_t> klt_violation;
  std::optional<std::size_t> canonical_violation;
  std::optional<std::size_t> terminal_violation;
};

Classification classify(const ToricLogPair& pair);
Classification classify(const Fan& fan, const MldReport& report);

/// Product log pair (X × Y, B_X × Y + X × B_Y).
ToricLogPair product(const ToricLogPair& p, const ToricLogPair& q);

}  // namespace toricmld
