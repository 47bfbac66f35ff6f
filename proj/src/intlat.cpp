#include "lagmon/intlat.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "lagmon/error.hpp"

namespace lagmon {

namespace {

int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

} // namespace

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_)
      fail(ErrorCode::DimensionMismatch, "ragged matrix literal");
    for (long x : r)
      entries_.emplace_back(x);
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      fail(ErrorCode::DimensionMismatch, "row length mismatch");
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = rows[i][j];
  }
  return m;
}

IntegerMatrix IntegerMatrix::from_rows(const std::vector<IntVector>& rows) {
  return from_rows(rows, rows.empty() ? 0 : rows.front().size());
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

IntVector IntegerMatrix::row(std::size_t i) const {
  return IntVector(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
}

IntVector IntegerMatrix::column(std::size_t j) const {
  IntVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    c[i] = (*this)(i, j);
  return c;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

IntVector IntegerMatrix::apply(const IntVector& v) const {
  if (v.size() != cols_)
    fail(ErrorCode::DimensionMismatch, "matrix-vector size mismatch");
  IntVector out(rows_, Integer(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out[i] += (*this)(i, j) * v[j];
  return out;
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& k) {
  if (k == 0)
    return;
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(target, j) += k * (*this)(source, j);
}

void IntegerMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& k) {
  if (k == 0)
    return;
  for (std::size_t i = 0; i < rows_; ++i)
    (*this)(i, target) += k * (*this)(i, source);
}

void IntegerMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(i, j) = -(*this)(i, j);
}

void IntegerMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i)
    (*this)(i, j) = -(*this)(i, j);
}

std::string IntegerMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? "," : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_)
    fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  IntegerMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0)
        continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        c(i, j) += aik * b(k, j);
    }
  return c;
}

IntegerMatrix operator+(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    fail(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
  IntegerMatrix c = a;
  for (std::size_t i = 0; i < c.entries_.size(); ++i)
    c.entries_[i] += b.entries_[i];
  return c;
}

IntegerMatrix operator-(const IntegerMatrix& a, const IntegerMatrix& b) {
  return a + (-b);
}

IntegerMatrix operator-(const IntegerMatrix& a) {
  IntegerMatrix c = a;
  for (auto& x : c.entries_)
    x = -x;
  return c;
}

bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

bool operator<(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.rows_ != b.rows_)
    return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_)
    return a.cols_ < b.cols_;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    int c = cmp(a.entries_[i], b.entries_[i]);
    if (c != 0)
      return c < 0;
  }
  return false;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Fraction-free Gaussian elimination; every division is exact.
Integer determinant(const IntegerMatrix& m) {
  if (!m.is_square())
    fail(ErrorCode::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0)
    return 1;
  IntegerMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0)
        ++p;
      if (p == n)
        return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntegerMatrix& m) {
  return rational_rank(to_rational(m));
}

IntegerMatrix power(const IntegerMatrix& m, std::size_t k) {
  IntegerMatrix result = IntegerMatrix::identity(m.rows());
  IntegerMatrix base = m;
  while (k) {
    if (k & 1)
      result = result * base;
    k >>= 1;
    if (k)
      base = base * base;
  }
  return result;
}

HermiteForm hermite_normal_form(const IntegerMatrix& m) {
  IntegerMatrix h = m;
  IntegerMatrix u = IntegerMatrix::identity(m.rows());
  const std::size_t rows = m.rows();
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < rows; ++col) {
    bool have_pivot = false;
    for (;;) {
      std::size_t p = rows;
      for (std::size_t i = row; i < rows; ++i)
        if (h(i, col) != 0 && (p == rows || cmpabs(h(i, col), h(p, col)) < 0))
          p = i;
      if (p == rows)
        break;
      have_pivot = true;
      h.swap_rows(row, p);
      u.swap_rows(row, p);
      bool clean = true;
      for (std::size_t i = row + 1; i < rows; ++i) {
        if (h(i, col) == 0)
          continue;
        Integer q = floor_div(h(i, col), h(row, col));
        h.add_row_multiple(i, row, -q);
        u.add_row_multiple(i, row, -q);
        if (h(i, col) != 0)
          clean = false;
      }
      if (clean)
        break;
    }
    if (!have_pivot)
      continue;
    if (h(row, col) < 0) {
      h.negate_row(row);
      u.negate_row(row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      Integer q = floor_div(h(i, col), h(row, col));
      h.add_row_multiple(i, row, -q);
      u.add_row_multiple(i, row, -q);
    }
    ++row;
  }
  return {std::move(h), std::move(u)};
}

namespace {

// Moves the smallest nonzero entry of row t / column t (from index t on) to (t, t).
bool bring_small_pivot(IntegerMatrix& d, IntegerMatrix& u, IntegerMatrix& v, std::size_t t) {
  std::size_t bi = t, bj = t;
  bool found = false;
  const Integer* best = nullptr;
  auto consider = [&](std::size_t i, std::size_t j) {
    if (d(i, j) == 0)
      return;
    if (!found || cmpabs(d(i, j), *best) < 0) {
      found = true;
      best = &d(i, j);
      bi = i;
      bj = j;
    }
  };
  for (std::size_t i = t; i < d.rows(); ++i)
    consider(i, t);
  for (std::size_t j = t + 1; j < d.cols(); ++j)
    consider(t, j);
  if (!found)
    return false;
  d.swap_rows(t, bi);
  u.swap_rows(t, bi);
  d.swap_cols(t, bj);
  v.swap_cols(t, bj);
  return true;
}

} // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
  IntegerMatrix d = m;
  IntegerMatrix u = IntegerMatrix::identity(m.rows());
  IntegerMatrix v = IntegerMatrix::identity(m.cols());
  const std::size_t lim = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < lim; ++t) {
    // global pivot search over the trailing block
    std::size_t pi = d.rows(), pj = d.cols();
    for (std::size_t i = t; i < d.rows(); ++i)
      for (std::size_t j = t; j < d.cols(); ++j)
        if (d(i, j) != 0 && (pi == d.rows() || cmpabs(d(i, j), d(pi, pj)) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi == d.rows())
      break;
    d.swap_rows(t, pi);
    u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    v.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0)
          continue;
        Integer q = floor_div(d(i, t), d(t, t));
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0)
          continue;
        Integer q = floor_div(d(t, j), d(t, t));
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0)
          clean = false;
      }
      if (!clean) {
        bring_small_pivot(d, u, v, t);
        continue;
      }
      // pivot must divide the whole trailing block
      bool divides = true;
      for (std::size_t i = t + 1; i < d.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides = false;
            break;
          }
      if (divides)
        break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(d), std::move(v)};
}

IntVector elementary_divisors(const IntegerMatrix& m) {
  SmithForm s = smith_normal_form(m);
  IntVector out;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    out.push_back(s.d(i, i));
  return out;
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& m) {
  if (!m.is_square())
    fail(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  Integer det = determinant(m);
  if (abs(det) != 1)
    fail(ErrorCode::NonUnimodular, "determinant " + det.get_str() + " of " + m.to_string());
  // the HNF of a unimodular matrix is the identity, so u = m^-1
  return hermite_normal_form(m).u;
}

LatticeBasis::LatticeBasis(std::size_t ambient_rank) : ambient_(ambient_rank), basis_(0, ambient_rank) {}

LatticeBasis::LatticeBasis(std::size_t ambient_rank, const std::vector<IntVector>& generators)
    : ambient_(ambient_rank) {
  IntegerMatrix g = IntegerMatrix::from_rows(generators, ambient_rank);
  IntegerMatrix h = hermite_normal_form(g).h;
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    IntVector r = h.row(i);
    if (std::any_of(r.begin(), r.end(), [](const Integer& x) { return x != 0; }))
      rows.push_back(std::move(r));
  }
  basis_ = IntegerMatrix::from_rows(rows, ambient_rank);
}

bool LatticeBasis::contains(const IntVector& v) const {
  if (v.size() != ambient_)
    fail(ErrorCode::DimensionMismatch, "lattice membership: wrong vector length");
  IntVector rest = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t pivot = 0;
    while (basis_(i, pivot) == 0)
      ++pivot;
    for (std::size_t j = 0; j < pivot; ++j)
      if (rest[j] != 0)
        return false;
    if (!mpz_divisible_p(rest[pivot].get_mpz_t(), basis_(i, pivot).get_mpz_t()))
      return false;
    Integer k = rest[pivot] / basis_(i, pivot);
    for (std::size_t j = 0; j < ambient_; ++j)
      rest[j] -= k * basis_(i, j);
  }
  return std::all_of(rest.begin(), rest.end(), [](const Integer& x) { return x == 0; });
}

LatticeBasis kernel_lattice(const IntegerMatrix& m) {
  HermiteForm hf = hermite_normal_form(m);
  std::vector<IntVector> kernel;
  for (std::size_t i = 0; i < hf.h.rows(); ++i) {
    IntVector r = hf.h.row(i);
    if (std::all_of(r.begin(), r.end(), [](const Integer& x) { return x == 0; }))
      kernel.push_back(hf.u.row(i));
  }
  return LatticeBasis(m.rows(), kernel);
}

bool lattice_equal(const LatticeBasis& a, const LatticeBasis& b) {
  if (a.ambient_rank() != b.ambient_rank())
    fail(ErrorCode::DimensionMismatch, "lattices in different ambient ranks");
  return a.basis() == b.basis();
}

std::optional<std::size_t> matrix_order(const IntegerMatrix& g, std::size_t cap) {
  if (!g.is_square())
    fail(ErrorCode::DimensionMismatch, "matrix_order of non-square matrix");
  Integer det = determinant(g);
  if (abs(det) != 1)
    fail(ErrorCode::NonUnimodular, "determinant " + det.get_str() + " of " + g.to_string());
  const IntegerMatrix id = IntegerMatrix::identity(g.rows());
  IntegerMatrix p = g;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (p == id)
      return k;
    p = p * g;
  }
  return std::nullopt;
}

std::optional<std::size_t> matrix_order(const IntegerMatrix& g) {
  return matrix_order(g, 12 * std::max<std::size_t>(g.rows(), 1));
}

RatMatrix to_rational(const IntegerMatrix& m) {
  RatMatrix r(m.rows(), RatVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r[i][j] = Rational(m(i, j));
  return r;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col] == 0)
      ++p;
    if (p == a.size())
      continue;
    std::swap(a[row], a[p]);
    Rational inv = 1 / a[row][col];
    for (auto& x : a[row])
      x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0)
        continue;
      Rational f = a[i][col];
      for (std::size_t j = col; j < a[i].size(); ++j)
        a[i][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

} // namespace

std::size_t rational_rank(RatMatrix m) {
  if (m.empty())
    return 0;
  return rref(m, m.front().size()).size();
}

std::vector<RatVector> rational_kernel(RatMatrix a, std::size_t cols) {
  std::vector<std::size_t> pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots)
    is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f])
      continue;
    RatVector v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVector> solve_rational(RatMatrix a, RatVector b, std::size_t cols) {
  if (a.size() != b.size())
    fail(ErrorCode::DimensionMismatch, "solve_rational: rhs length");
  for (std::size_t i = 0; i < a.size(); ++i)
    a[i].push_back(b[i]);
  std::vector<std::size_t> pivots = rref(a, cols + 1);
  if (!pivots.empty() && pivots.back() == cols)
    return std::nullopt;
  RatVector x(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[pivots[r]] = a[r][cols];
  return x;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v)
    g = gcd(g, x);
  return g;
}

IntVector primitive_integer_vector(const RatVector& v) {
  Integer den = 1;
  for (const auto& x : v)
    den = lcm(den, x.get_den());
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = v[i].get_num() * (den / v[i].get_den());
  Integer g = content(out);
  if (g > 1)
    for (auto& x : out)
      x /= g;
  return out;
}

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1)
    return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

} // namespace lagmon
