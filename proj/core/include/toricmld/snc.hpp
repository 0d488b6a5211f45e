#pragma once

// Log pairs with log nonsingular support, modelled combinatorially: the
// boundary components E_i with their log discrepancies a_i, and the nerve of
// nonempty intersections E_J. Points are (I(η), codim η).

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "toricmld/lattice.hpp"

namespace toricmld::snc {

using ComponentSet = std::vector<std::size_t>;  // sorted, distinct

/// A log discrepancy that may be -∞.
class LogDiscrepancy {
 public:
  LogDiscrepancy(Rational value) : value_(std::move(value)) {}  // NOLINT: implicit by intent
  static LogDiscrepancy minus_infinity() { return LogDiscrepancy(); }

  bool is_finite() const noexcept { return finite_; }
  /// Only valid when finite.
  const Rational& value() const;

  friend bool operator==(const LogDiscrepancy& a, const LogDiscrepancy& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend LogDiscrepancy operator+(const LogDiscrepancy& a, const LogDiscrepancy& b);

 private:
  LogDiscrepancy() : finite_(false) {}
  bool finite_ = true;
  Rational value_;
};

std::string to_string(const LogDiscrepancy& a);

struct SncPoint {
  ComponentSet incident;
  std::size_t codim = 0;
};

class SncPair {
 public:
  /// `nerve` is closed under subsets here (∅ is always added); throws
  /// ErrorCode::InvalidPoint for out-of-range components or |J| > dim.
  SncPair(std::size_t ambient_dim, std::vector<Rational> log_discrepancies, std::vector<ComponentSet> nerve);

  /// Every subset of the components is a stratum (|I| <= dim required).
  static SncPair full(std::size_t ambient_dim, std::vector<Rational> log_discrepancies);

  std::size_t ambient_dim() const noexcept { return dim_; }
  std::size_t components() const noexcept { return a_.size(); }
  const std::vector<Rational>& log_discrepancies() const noexcept { return a_; }
  const std::set<ComponentSet>& nerve() const noexcept { return nerve_; }

  bool is_valid(const SncPoint& pt) const;
  /// All valid points (J, c) with J in the nerve and |J| <= c <= dim.
  std::vector<SncPoint> points() const;

 private:
  std::size_t dim_;
  std::vector<Rational> a_;
  std::set<ComponentSet> nerve_;
};

/// a(η;B) = a_J + codim η - |J| for J = I(η) when a_i >= 0 on J; -∞ when some
/// a_i < 0 on J and η is a proper point of E_i (codim >= 2). Throws
/// ErrorCode::InvalidPoint.
LogDiscrepancy snc_mld(const SncPair& pair, const SncPoint& pt);

struct HypothesisSlack {
  bool minus_infinity = false;  // a(η) = -∞: nothing to check
  Rational slack;               // a(η) - a(ξ) - codim(η, ξ)
};

/// Slack of a(η) <= a(ξ) + codim(η, ξ) for a specialization η ∈ closure(ξ).
/// Throws ErrorCode::NotSpecialization unless I(ξ) ⊆ I(η) and
/// codim ξ <= codim η.
HypothesisSlack check_hypothesis(const SncPair& pair, const SncPoint& eta, const SncPoint& xi);

SncPair product(const SncPair& p, const SncPair& q);
/// The point η × ξ of the product of the pairs carrying η and ξ.
SncPoint product_point(const SncPair& p, const SncPoint& eta, const SncPoint& xi);

/// a(E_{k+1}; B) = k·a(E; B) + a(E_1; B) for the iterated blow-ups along a
/// proper point of E.
Rational blowup_divergence(const Rational& a_e, const Rational& a_e1, std::uint64_t k);

}  // namespace toricmld::snc
