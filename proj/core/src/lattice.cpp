#include "toricmld/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "toricmld/error.hpp"

namespace toricmld {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::Parse, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Integer parse_integer_strict(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw Error(ErrorCode::Parse, "not an exact rational: '" + std::string(whole) + "'");
  Integer value(std::string(s), 10);
  return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer_strict(text, text));
  auto den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) throw Error(ErrorCode::Parse, "not an exact rational: '" + std::string(text) + "'");
  Integer num = parse_integer_strict(text.substr(0, slash), text);
  Integer den(std::string(den_text), 10);
  if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::string to_string(const Integer& value) { return value.get_str(); }
std::string to_string(const Rational& value) { return value.get_str(); }

Rational floor_fraction(const Rational& value) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return Rational(value - Rational(fl));
}

// LatticeVector ---------------------------------------------------------------

LatticeVector::LatticeVector(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other) {
  if (other.size() != size()) throw Error(ErrorCode::DimensionMismatch, "vector sum of different ranks");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other) {
  if (other.size() != size()) throw Error(ErrorCode::DimensionMismatch, "vector difference of different ranks");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

LatticeVector operator-(const LatticeVector& v) {
  LatticeVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

LatticeVector operator*(const Integer& k, const LatticeVector& v) {
  LatticeVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = k * v[i];
  return out;
}

bool operator<(const LatticeVector& a, const LatticeVector& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

std::string to_string(const LatticeVector& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product of different ranks");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

LatticeVector direct_sum(const LatticeVector& a, const LatticeVector& b) {
  std::vector<Integer> coords = a.coords();
  coords.insert(coords.end(), b.coords().begin(), b.coords().end());
  return LatticeVector(std::move(coords));
}

Integer content(const LatticeVector& v) {
  Integer g = 0;
  for (const auto& c : v.coords()) g = gcd(g, c);
  return g;
}

LatticeVector primitive(const LatticeVector& v) {
  Integer g = content(v);
  if (g == 0) throw Error(ErrorCode::ZeroVector, "primitive() of the zero vector");
  if (g == 1) return v;
  LatticeVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

// LinearForm ------------------------------------------------------------------

Rational LinearForm::operator()(const LatticeVector& v) const {
  if (v.size() != size()) throw Error(ErrorCode::DimensionMismatch, "linear form evaluated on wrong rank");
  Rational s = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (v[i] != 0) s += coords_[i] * v[i];
  }
  return s;
}

std::string to_string(const LinearForm& form) {
  std::string out = "(";
  for (std::size_t i = 0; i < form.size(); ++i) {
    if (i) out += ",";
    out += form[i].get_str();
  }
  return out + ")";
}

// IntMatrix -------------------------------------------------------------------

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const LatticeVector> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "row has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(std::span<const LatticeVector> columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw Error(ErrorCode::DimensionMismatch, "column has wrong length");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = columns[c][r];
  }
  return m;
}

LatticeVector IntMatrix::row(std::size_t r) const {
  LatticeVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

LatticeVector IntMatrix::column(std::size_t c) const {
  LatticeVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

LatticeVector IntMatrix::operator*(const LatticeVector& v) const {
  if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
  LatticeVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Integer s = 0;
    for (std::size_t c = 0; c < cols_; ++c) s += at(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product size mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) os << (r ? "," : "") << m.row(r);
  return os << ']';
}

// Smith normal form -----------------------------------------------------------

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
}

// row[target] -= q * row[source]
void add_row_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) m.at(target, c) -= q * m.at(source, c);
}

void add_col_multiple(IntMatrix& m, std::size_t target, std::size_t source, const Integer& q) {
  for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, target) -= q * m.at(r, source);
}

}  // namespace

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  while (r < std::min(diagonal.rows(), diagonal.cols()) && diagonal.at(r, r) != 0) ++r;
  return r;
}

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank(); ++i) out.push_back(diagonal.at(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(m.rows());
  IntMatrix right = IntMatrix::identity(m.cols());
  const std::size_t steps = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < steps; ++t) {
    bool settled = false;
    while (!settled) {
      // Smallest |entry| in the trailing block, first in row-major order.
      std::size_t pr = 0, pc = 0;
      bool found = false;
      for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
          if (a.at(i, j) == 0) continue;
          if (!found || abs(a.at(i, j)) < abs(a.at(pr, pc))) {
            pr = i;
            pc = j;
            found = true;
          }
        }
      if (!found) return {std::move(left), std::move(a), std::move(right)};

      swap_rows(a, t, pr);
      swap_rows(left, t, pr);
      swap_cols(a, t, pc);
      swap_cols(right, t, pc);

      settled = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a.at(i, t) == 0) continue;
        Integer q = a.at(i, t) / a.at(t, t);
        add_row_multiple(a, i, t, q);
        add_row_multiple(left, i, t, q);
        if (a.at(i, t) != 0) settled = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a.at(t, j) == 0) continue;
        Integer q = a.at(t, j) / a.at(t, t);
        add_col_multiple(a, j, t, q);
        add_col_multiple(right, j, t, q);
        if (a.at(t, j) != 0) settled = false;
      }
      if (!settled) continue;

      // Divisibility: fold an offending row into the pivot row and retry.
      for (std::size_t i = t + 1; i < a.rows() && settled; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j) {
          if (a.at(i, j) % a.at(t, t) != 0) {
            add_row_multiple(a, t, i, Integer(-1));
            add_row_multiple(left, t, i, Integer(-1));
            settled = false;
            break;
          }
        }
    }
    if (a.at(t, t) < 0) {
      for (std::size_t c = 0; c < a.cols(); ++c) a.at(t, c) = -a.at(t, c);
      for (std::size_t c = 0; c < left.cols(); ++c) left.at(t, c) = -left.at(t, c);
    }
  }
  return {std::move(left), std::move(a), std::move(right)};
}

// Elimination helpers ---------------------------------------------------------

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
      }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a.at(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    swap_rows(a, r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a.at(i, c) == 0) continue;
      Integer f = a.at(i, c);
      Integer g = a.at(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) = a.at(i, j) * g - a.at(r, j) * f;
    }
    ++r;
  }
  return r;
}

std::size_t rank(std::span<const LatticeVector> vectors) {
  if (vectors.empty()) return 0;
  return rank(IntMatrix::from_rows(vectors, vectors.front().size()));
}

std::optional<std::vector<Rational>> solve_rational(const IntMatrix& a, std::span<const Rational> b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side has wrong length");
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::vector<Rational>> aug(rows, std::vector<Rational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) aug[r][c] = a.at(r, c);
    aug[r][cols] = b[r];
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && aug[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(aug[r], aug[p]);
    Rational inv = 1 / aug[r][c];
    for (std::size_t j = c; j <= cols; ++j) aug[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      Rational f = aug[i][c];
      for (std::size_t j = c; j <= cols; ++j) aug[i][j] -= f * aug[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (aug[i][cols] != 0) return std::nullopt;
  }
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = aug[i][cols];
  return x;
}

namespace {

// Inverse of a unimodular matrix, exact.
IntMatrix inverse_unimodular(const IntMatrix& u) {
  const std::size_t n = u.rows();
  IntMatrix inv(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<Rational> e(n, Rational(0));
    e[c] = 1;
    auto x = solve_rational(u, e);
    for (std::size_t r = 0; r < n; ++r) inv.at(r, c) = (*x)[r].get_num();
  }
  return inv;
}

}  // namespace

LatticeVector SaturatedSpan::from_coordinates(const LatticeVector& c) const {
  LatticeVector v(ambient_rank);
  for (std::size_t j = 0; j < dim; ++j) v += c[j] * basis[j];
  return v;
}

SaturatedSpan saturated_span(std::span<const LatticeVector> generators, std::size_t ambient_rank) {
  SaturatedSpan out;
  out.ambient_rank = ambient_rank;
  IntMatrix g = IntMatrix::from_columns(generators, ambient_rank);
  SmithForm snf = smith_normal_form(g);
  out.dim = snf.rank();
  IntMatrix left_inv = inverse_unimodular(snf.left);
  out.to_coordinates = IntMatrix(out.dim, ambient_rank);
  for (std::size_t r = 0; r < out.dim; ++r) {
    for (std::size_t c = 0; c < ambient_rank; ++c) out.to_coordinates.at(r, c) = snf.left.at(r, c);
    out.basis.push_back(left_inv.column(r));
  }
  for (std::size_t r = out.dim; r < ambient_rank; ++r) out.equations.push_back(snf.left.row(r));
  return out;
}

std::vector<LatticeVector> kernel_basis(const IntMatrix& m) {
  SmithForm snf = smith_normal_form(m);
  std::vector<LatticeVector> out;
  for (std::size_t c = snf.rank(); c < m.cols(); ++c) out.push_back(snf.right.column(c));
  return out;
}

}  // namespace toricmld
