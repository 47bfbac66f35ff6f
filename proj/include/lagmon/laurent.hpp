#pragma once

// Integer Laurent polynomials in n variables and their exact values and
// derivatives at torsion points.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "lagmon/cyclotomic.hpp"
#include "lagmon/intlat.hpp"
#include "lagmon/torussym.hpp"

namespace lagmon {

using Exponent = std::vector<long>;

class LaurentPolynomial {
public:
  explicit LaurentPolynomial(std::size_t dim = 0) : dim_(dim) {}

  static LaurentPolynomial monomial(const Exponent& e, const Integer& c = 1);
  static LaurentPolynomial constant(std::size_t dim, const Integer& c);

  std::size_t dim() const { return dim_; }
  const std::map<Exponent, Integer>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  Integer coefficient(const Exponent& e) const;

  // Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, const Integer& c);

  // Affine partial derivative d/dx_i and logarithmic x_i d/dx_i.
  LaurentPolynomial derivative(std::size_t i) const;
  LaurentPolynomial log_derivative(std::size_t i) const;
  // Exponents relabelled alpha -> g alpha.
  LaurentPolynomial transformed(const IntegerMatrix& g) const;

  // x, y, z for up to three variables, x1..xn beyond.
  std::string to_string() const;

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) { return !(a == b); }

private:
  std::size_t dim_;
  std::map<Exponent, Integer> terms_;
};

CyclotomicNumber evaluate(const LaurentPolynomial& w, const TorsionPoint& p);
// Zero test without canonicalising the value.
bool vanishes_at(const LaurentPolynomial& w, const TorsionPoint& p);

struct GradientHessian {
  std::vector<CyclotomicNumber> grad;
  std::vector<std::vector<CyclotomicNumber>> hess;
};

GradientHessian gradient_hessian(const LaurentPolynomial& w, const TorsionPoint& p);
// Second logarithmic derivatives x_i d/dx_i x_j d/dx_j.
std::vector<std::vector<CyclotomicNumber>> log_hessian(const LaurentPolynomial& w, const TorsionPoint& p);

bool is_critical(const LaurentPolynomial& w, const TorsionPoint& p);

// Critical torsion points whose coordinate denominators divide order_bound.
std::vector<TorsionPoint> torsion_critical_points(const LaurentPolynomial& w, std::size_t order_bound,
                                                  std::size_t grid_cap = 1000000);

struct SupportRank {
  std::vector<Exponent> b1;  // nonzero exponents in the support
  std::size_t rank = 0;
};

SupportRank b1_support_rank(const LaurentPolynomial& w);
bool invariance_check(const LaurentPolynomial& w, const IntegerMatrix& g);
// g permutes the nonzero support and keeps each coefficient.
bool candidate_filter(const LaurentPolynomial& w, const IntegerMatrix& g);

} // namespace lagmon
