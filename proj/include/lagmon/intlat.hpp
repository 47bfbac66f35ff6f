#pragma once

// Exact integer linear algebra: matrices over Z (GMP integers), Hermite and
// Smith normal forms, saturated kernel lattices and finite matrix orders.
// Nothing in here touches floating point.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lagmon {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

class IntegerMatrix {
public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntegerMatrix from_rows(const std::vector<IntVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector column(std::size_t j) const;
  const std::vector<Integer>& entries() const { return entries_; }

  IntegerMatrix transpose() const;
  IntVector apply(const IntVector& v) const;  // this * v

  // Row operations used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& k);
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& k);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  std::string to_string() const;  // [[a,b],[c,d]]

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b);
  friend IntegerMatrix operator-(const IntegerMatrix& a);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator!=(const IntegerMatrix& a, const IntegerMatrix& b) { return !(a == b); }
  // Shape first, then entries lexicographically.
  friend bool operator<(const IntegerMatrix& a, const IntegerMatrix& b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

Integer determinant(const IntegerMatrix& m);
std::size_t rank(const IntegerMatrix& m);
IntegerMatrix power(const IntegerMatrix& m, std::size_t k);

// Inverse of a unimodular matrix; throws NON_UNIMODULAR otherwise.
IntegerMatrix unimodular_inverse(const IntegerMatrix& m);

struct HermiteForm {
  IntegerMatrix h;  // row echelon, positive pivots, entries above pivots in [0, pivot)
  IntegerMatrix u;  // unimodular with h = u * m
};

struct SmithForm {
  IntegerMatrix u;  // unimodular
  IntegerMatrix d;  // d = u * m * v, diagonal, d_1 | d_2 | ..., all >= 0
  IntegerMatrix v;  // unimodular
};

HermiteForm hermite_normal_form(const IntegerMatrix& m);
SmithForm smith_normal_form(const IntegerMatrix& m);

// Diagonal of a Smith form, truncated to min(rows, cols).
IntVector elementary_divisors(const IntegerMatrix& m);

// A sublattice of Z^N stored by its row-style HNF basis. Two values are equal
// iff they span the same sublattice.
class LatticeBasis {
public:
  explicit LatticeBasis(std::size_t ambient_rank = 0);
  LatticeBasis(std::size_t ambient_rank, const std::vector<IntVector>& generators);

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntegerMatrix& basis() const { return basis_; }  // rank x ambient_rank, HNF
  IntVector vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const IntVector& v) const;

  friend bool operator==(const LatticeBasis& a, const LatticeBasis& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

private:
  std::size_t ambient_;
  IntegerMatrix basis_;
};

// {a in Z^N : a^T m = 0} for an N x n matrix m; always saturated.
LatticeBasis kernel_lattice(const IntegerMatrix& m);

bool lattice_equal(const LatticeBasis& a, const LatticeBasis& b);

// Least k <= cap with g^k = I; nullopt means the order exceeds the cap.
std::optional<std::size_t> matrix_order(const IntegerMatrix& g, std::size_t cap);
std::optional<std::size_t> matrix_order(const IntegerMatrix& g);  // cap = 12 * dim

// Exact rational linear algebra helpers.
using RatMatrix = std::vector<RatVector>;

RatMatrix to_rational(const IntegerMatrix& m);
std::size_t rational_rank(RatMatrix m);
// Basis of {x : a x = 0} over Q (one vector per free column).
std::vector<RatVector> rational_kernel(RatMatrix a, std::size_t cols);
// Some solution of a x = b, or nullopt when inconsistent.
std::optional<RatVector> solve_rational(RatMatrix a, RatVector b, std::size_t cols);

Integer floor_div(const Integer& a, const Integer& b);
// Clears denominators and divides out the content; zero stays zero.
IntVector primitive_integer_vector(const RatVector& v);
Integer content(const IntVector& v);

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);

} // namespace lagmon
