#include "lagmon/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "lagmon/error.hpp"

namespace lagmon {

namespace {

std::vector<Integer> compute_cyclotomic(std::size_t d) {
  // x^d - 1 divided by Phi_e for every proper divisor e of d.
  std::vector<Integer> num(d + 1, Integer(0));
  num[0] = -1;
  num[d] = 1;
  for (std::size_t e = 1; e < d; ++e) {
    if (d % e != 0)
      continue;
    std::vector<Integer> den = cyclotomic_polynomial(e);
    std::size_t dn = den.size() - 1;
    std::vector<Integer> quot(num.size() - dn, Integer(0));
    for (std::size_t i = num.size(); i-- > dn;) {
      Integer c = num[i];  // den is monic
      quot[i - dn] = c;
      if (c != 0)
        for (std::size_t j = 0; j <= dn; ++j)
          num[i - dn + j] -= c * den[j];
    }
    num = std::move(quot);
  }
  return num;
}

std::size_t lcm_size(std::size_t a, std::size_t b) { return std::lcm(a, b); }

// Coordinates of zeta_d^k for 0 <= k < d, each of length phi(d).
const std::vector<std::vector<Rational>>& power_table(std::size_t d) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<std::vector<Rational>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(d);
  if (it != cache.end())
    return it->second;
  std::vector<Integer> phi = cyclotomic_polynomial(d);
  std::size_t deg = phi.size() - 1;
  std::vector<std::vector<Rational>> table;
  std::vector<Rational> cur(deg, Rational(0));
  cur[0] = 1;
  for (std::size_t k = 0; k < d; ++k) {
    table.push_back(cur);
    // multiply by zeta: shift, then replace zeta^deg by -(phi_0 + ... + phi_{deg-1} zeta^{deg-1})
    Rational top = cur[deg - 1];
    for (std::size_t i = deg - 1; i > 0; --i)
      cur[i] = cur[i - 1];
    cur[0] = 0;
    for (std::size_t i = 0; i < deg; ++i)
      cur[i] -= top * Rational(phi[i]);
  }
  return cache.emplace(d, std::move(table)).first->second;
}

Rational rational_determinant(RatMatrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0)
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0)
        continue;
      Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j)
        a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

RatMatrix rational_multiplication_matrix(const CyclotomicNumber& x, std::size_t d) {
  const std::size_t phi = euler_phi(d);
  std::vector<Rational> xc = x.coordinates_in(d);
  const auto& table = power_table(d);
  RatMatrix m(phi, RatVector(phi, Rational(0)));
  // column j holds x * zeta^j
  for (std::size_t j = 0; j < phi; ++j)
    for (std::size_t k = 0; k < phi; ++k) {
      if (xc[k] == 0)
        continue;
      const auto& z = table[(j + k) % d];
      for (std::size_t i = 0; i < phi; ++i)
        m[i][j] += xc[k] * z[i];
    }
  return m;
}

} // namespace

std::vector<Integer> cyclotomic_polynomial(std::size_t d) {
  if (d == 0)
    fail(ErrorCode::InvalidInput, "cyclotomic polynomial of index 0");
  static std::mutex mu;
  static std::map<std::size_t, std::vector<Integer>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end())
      return it->second;
  }
  std::vector<Integer> p = compute_cyclotomic(d);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(d, p);
  return p;
}

std::size_t euler_phi(std::size_t d) {
  std::size_t result = d;
  for (std::size_t p = 2; p * p <= d; ++p) {
    if (d % p != 0)
      continue;
    while (d % p == 0)
      d /= p;
    result -= result / p;
  }
  if (d > 1)
    result -= result / d;
  return result;
}

std::vector<Rational> reduce_mod_cyclotomic(std::size_t d, std::vector<Rational> poly) {
  const auto& table = power_table(d);
  std::vector<Rational> out(euler_phi(d), Rational(0));
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (poly[k] == 0)
      continue;
    const auto& z = table[k % d];
    for (std::size_t i = 0; i < out.size(); ++i)
      if (z[i] != 0)
        out[i] += poly[k] * z[i];
  }
  return out;
}

CyclotomicNumber::CyclotomicNumber(long value) : conductor_(1), coeffs_{Rational(value)} {}
CyclotomicNumber::CyclotomicNumber(const Integer& value) : conductor_(1), coeffs_{Rational(value)} {}
CyclotomicNumber::CyclotomicNumber(const Rational& value) : conductor_(1), coeffs_{value} {}

CyclotomicNumber::CyclotomicNumber(std::size_t conductor, std::vector<Rational> poly)
    : conductor_(conductor), coeffs_(reduce_mod_cyclotomic(conductor, std::move(poly))) {
  minimise_conductor();
}

CyclotomicNumber CyclotomicNumber::unreduced(std::size_t conductor, std::vector<Rational> coeffs) {
  CyclotomicNumber x;
  x.conductor_ = conductor;
  x.coeffs_ = std::move(coeffs);
  return x;
}

CyclotomicNumber CyclotomicNumber::root_of_unity(std::size_t d, long k) {
  long r = k % static_cast<long>(d);
  if (r < 0)
    r += static_cast<long>(d);
  std::vector<Rational> poly(static_cast<std::size_t>(r) + 1, Rational(0));
  poly[static_cast<std::size_t>(r)] = 1;
  return CyclotomicNumber(d, std::move(poly));
}

void CyclotomicNumber::minimise_conductor() {
  if (conductor_ == 1)
    return;
  bool rational = true;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0)
      rational = false;
  if (rational) {
    coeffs_.resize(1);
    conductor_ = 1;
    return;
  }
  const auto& table = power_table(conductor_);
  for (std::size_t e = 2; e < conductor_; ++e) {
    if (conductor_ % e != 0)
      continue;
    const std::size_t step = conductor_ / e, pe = euler_phi(e);
    RatMatrix a(coeffs_.size(), RatVector(pe, Rational(0)));
    for (std::size_t k = 0; k < pe; ++k) {
      const auto& z = table[(k * step) % conductor_];
      for (std::size_t i = 0; i < coeffs_.size(); ++i)
        a[i][k] = z[i];
    }
    if (auto sol = solve_rational(a, coeffs_, pe)) {
      conductor_ = e;
      coeffs_ = std::move(*sol);
      return;
    }
  }
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0)
      return false;
  return true;
}

bool CyclotomicNumber::is_integral() const {
  for (const auto& c : coeffs_)
    if (c.get_den() != 1)
      return false;
  return true;
}

Rational CyclotomicNumber::rational_value() const {
  if (conductor_ != 1)
    fail(ErrorCode::InvalidInput, "cyclotomic number " + to_string() + " is not rational");
  return coeffs_[0];
}

std::optional<Integer> CyclotomicNumber::integer_value() const {
  if (conductor_ != 1 || coeffs_[0].get_den() != 1)
    return std::nullopt;
  return coeffs_[0].get_num();
}

std::vector<Rational> CyclotomicNumber::coordinates_in(std::size_t d) const {
  if (d % conductor_ != 0)
    fail(ErrorCode::InvalidInput, "conductor " + std::to_string(conductor_) + " does not divide " +
                                      std::to_string(d));
  if (d == conductor_)
    return coeffs_;
  if (coeffs_.empty())
    return std::vector<Rational>(euler_phi(d), Rational(0));
  const std::size_t step = d / conductor_;
  std::vector<Rational> poly((coeffs_.size() - 1) * step + 1, Rational(0));
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    poly[k * step] = coeffs_[k];
  return reduce_mod_cyclotomic(d, std::move(poly));
}

Rational CyclotomicNumber::field_norm() const {
  return rational_determinant(rational_multiplication_matrix(*this, conductor_));
}

bool CyclotomicNumber::is_unit() const {
  if (!is_integral() || is_zero())
    return false;
  Rational n = field_norm();
  return n == 1 || n == -1;
}

std::string CyclotomicNumber::to_string() const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    Rational c = coeffs_[k];
    if (c == 0)
      continue;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << lagmon::to_string(a);
      continue;
    }
    if (a != 1)
      os << lagmon::to_string(a) << '*';
    os << 'z' << conductor_;
    if (k > 1)
      os << '^' << k;
  }
  return os.str();
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  std::size_t d = lcm_size(a.conductor_, b.conductor_);
  std::vector<Rational> x = a.coordinates_in(d), y = b.coordinates_in(d);
  for (std::size_t i = 0; i < x.size(); ++i)
    x[i] += y[i];
  CyclotomicNumber r = CyclotomicNumber::unreduced(d, std::move(x));
  r.minimise_conductor();
  return r;
}

CyclotomicNumber operator-(const CyclotomicNumber& a) {
  CyclotomicNumber r = a;
  for (auto& c : r.coeffs_)
    c = -c;
  return r;
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + (-b); }

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  std::size_t d = lcm_size(a.conductor_, b.conductor_);
  std::vector<Rational> x = a.coordinates_in(d), y = b.coordinates_in(d);
  std::vector<Rational> poly(x.size() + y.size() - 1, Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0)
      continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0)
        poly[i + j] += x[i] * y[j];
  }
  return CyclotomicNumber(d, std::move(poly));
}

CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (b.is_zero())
    fail(ErrorCode::InvalidInput, "division by zero in cyclotomic field");
  std::size_t d = lcm_size(a.conductor_, b.conductor_);
  auto sol = solve_rational(rational_multiplication_matrix(b, d), a.coordinates_in(d), euler_phi(d));
  if (!sol)
    fail(ErrorCode::InvalidInput, "cyclotomic division failed");
  CyclotomicNumber r = CyclotomicNumber::unreduced(d, std::move(*sol));
  r.minimise_conductor();
  return r;
}

IntegerMatrix multiplication_matrix(const CyclotomicNumber& x, std::size_t d) {
  RatMatrix m = rational_multiplication_matrix(x, d);
  IntegerMatrix out(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[i][j].get_den() != 1)
        fail(ErrorCode::InvalidInput, "multiplication matrix of a non-integral element");
      out(i, j) = m[i][j].get_num();
    }
  return out;
}

} // namespace lagmon
