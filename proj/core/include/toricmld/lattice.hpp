#pragma once

// Exact integer and rational linear algebra on N = Z^n and M = Hom(N, Z).
// Everything here is backed by GMP; nothing in the computation path uses
// floating point.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace toricmld {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p" or "p/q" (optional leading '-'). Anything else, including
/// decimal points and exponents, is rejected with ErrorCode::Parse.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

Rational floor_fraction(const Rational& value);  // value - floor(value)

class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t rank) : coords_(rank, 0) {}
  explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<long> coords);

  std::size_t size() const noexcept { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Integer>& coords() const noexcept { return coords_; }

  bool is_zero() const;

  LatticeVector& operator+=(const LatticeVector& other);
  LatticeVector& operator-=(const LatticeVector& other);

  friend LatticeVector operator+(LatticeVector lhs, const LatticeVector& rhs) { return lhs += rhs; }
  friend LatticeVector operator-(LatticeVector lhs, const LatticeVector& rhs) { return lhs -= rhs; }
  friend LatticeVector operator-(const LatticeVector& v);
  friend LatticeVector operator*(const Integer& k, const LatticeVector& v);

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) { return a.coords_ == b.coords_; }
  // Lexicographic on coordinates: this is the canonical order used for
  // rays, cones and witnesses throughout the library.
  friend bool operator<(const LatticeVector& a, const LatticeVector& b);

 private:
  std::vector<Integer> coords_;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& v);
std::string to_string(const LatticeVector& v);

Integer dot(const LatticeVector& a, const LatticeVector& b);

/// Concatenation a ⊕ b, used for product lattices.
LatticeVector direct_sum(const LatticeVector& a, const LatticeVector& b);

/// Greatest common divisor of the coordinates (0 for the zero vector).
Integer content(const LatticeVector& v);

/// v / gcd(v). Throws ErrorCode::ZeroVector on v = 0.
LatticeVector primitive(const LatticeVector& v);

/// A rational linear form on N_R, i.e. an element of M_Q.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  std::size_t size() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }

  Rational operator()(const LatticeVector& v) const;

  friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<Rational> coords_;
};

std::string to_string(const LinearForm& form);

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(std::span<const LatticeVector> rows, std::size_t cols);
  static IntMatrix from_columns(std::span<const LatticeVector> columns, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  LatticeVector row(std::size_t r) const;
  LatticeVector column(std::size_t c) const;
  IntMatrix transpose() const;

  LatticeVector operator*(const LatticeVector& v) const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// left * input * right == diagonal, with left and right unimodular and the
/// diagonal entries d_1 | d_2 | ... all non-negative.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;

  std::size_t rank() const;
  /// The nonzero diagonal entries in order.
  std::vector<Integer> invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);
std::size_t rank(std::span<const LatticeVector> vectors);

/// One exact solution of A x = b or nullopt if the system is inconsistent.
/// Gaussian elimination takes the first nonzero entry of each column as the
/// pivot; free variables are set to zero, so the result is deterministic.
std::optional<std::vector<Rational>> solve_rational(const IntMatrix& a, std::span<const Rational> b);

/// Saturated sublattice N ∩ span(generators), described through the left
/// factor U of a Smith form of the generator matrix:
///   - basis: columns of U^{-1}, a Z-basis of N ∩ span
///   - coordinates(v) = first `dim` entries of U v (integral for lattice v)
///   - equations: remaining rows of U, a Z-basis of span^⊥ ∩ M
struct SaturatedSpan {
  std::size_t ambient_rank = 0;
  std::size_t dim = 0;
  IntMatrix to_coordinates;              // dim × ambient_rank
  std::vector<LatticeVector> basis;      // dim vectors in N
  std::vector<LatticeVector> equations;  // (ambient_rank - dim) vectors in M

  LatticeVector coordinates(const LatticeVector& v) const { return to_coordinates * v; }
  LatticeVector from_coordinates(const LatticeVector& c) const;
};

SaturatedSpan saturated_span(std::span<const LatticeVector> generators, std::size_t ambient_rank);

/// Z-basis of {x ∈ Z^cols : m x = 0}.
std::vector<LatticeVector> kernel_basis(const IntMatrix& m);

}  // namespace toricmld
