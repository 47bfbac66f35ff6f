#pragma once

// Algebraic shadows of Floer cohomology for 2-tori: the rank-2 Clifford
// algebra u^2 = lambda, uv + vu = mu, v^2 = nu over cyclotomic integers,
// continuation elements realising monodromy by conjugation, binary form
// reduction, the rank-1 classifier and the Hessian checks.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lagmon/cyclotomic.hpp"
#include "lagmon/intlat.hpp"
#include "lagmon/laurent.hpp"
#include "lagmon/torussym.hpp"

namespace lagmon {

struct CliffordData {
  CyclotomicNumber lambda, mu, nu;
  bool half_integral = false;  // some constant lies outside Z[zeta]
};

// a0 + au u + av v + auv uv
struct CliffordElement {
  CyclotomicNumber a0, au, av, auv;

  static CliffordElement scalar(const CyclotomicNumber& x) { return {x, 0, 0, 0}; }
  static CliffordElement u() { return {0, 1, 0, 0}; }
  static CliffordElement v() { return {0, 0, 1, 0}; }

  bool is_zero() const { return a0.is_zero() && au.is_zero() && av.is_zero() && auv.is_zero(); }
  bool is_integral() const;
  std::string to_string() const;

  friend CliffordElement operator+(const CliffordElement& a, const CliffordElement& b);
  friend CliffordElement operator-(const CliffordElement& a, const CliffordElement& b);
  friend CliffordElement operator*(const CyclotomicNumber& s, const CliffordElement& a);
  friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
    return a.a0 == b.a0 && a.au == b.au && a.av == b.av && a.auv == b.auv;
  }
};

// -1/2 d2W/dx2, -d2W/dxdy, -1/2 d2W/dy2 at p; NOT_CRITICAL unless p is critical.
CliffordData clifford_constants(const LaurentPolynomial& w, const TorsionPoint& p);
// Same constants without the criticality requirement.
CliffordData hessian_constants(const LaurentPolynomial& w, const TorsionPoint& p);

CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b, const CliffordData& d);

// Inverse of a parity-homogeneous element, if it is invertible.
std::optional<CliffordElement> clifford_inverse(const CliffordElement& c, const CliffordData& d);

enum class Parity { Even, Odd };
enum class Solvability { Solvable, Unsolvable, Unknown };

const char* solvability_name(Solvability s);

struct ContinuationResult {
  Solvability verdict = Solvability::Unknown;
  std::optional<CliffordElement> witness;
  std::string method;
};

// Is there an invertible c of the given parity over Z[zeta_conductor], with
// integral inverse, such that c a = (-1)^d (g.a) c for a = u, v? Here g acts
// by u -> g00 u + g01 v, v -> g10 u + g11 v and d is the parity.
ContinuationResult continuation_solvable(const CliffordData& d, const IntegerMatrix& action, Parity parity,
                                         std::size_t conductor);
// The general linear-algebra route, bypassing the closed forms.
ContinuationResult continuation_search(const CliffordData& d, const IntegerMatrix& action, Parity parity,
                                       std::size_t conductor, std::size_t budget = 20000);

// m in k Z[zeta_d], decided on power-basis coordinates.
bool cyclo_multiple_member(const Integer& m, const Integer& k, std::size_t d);

// [[lambda, mu_half], [mu_half, nu]]
struct BinaryForm {
  Integer lambda, mu_half, nu;

  Integer discriminant() const { return mu_half * mu_half - lambda * nu; }
  IntegerMatrix matrix() const;
  std::string to_string() const;
  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.lambda == b.lambda && a.mu_half == b.mu_half && a.nu == b.nu;
  }
};

enum class CanonicalForm { Hyperbolic, PlusIdentity, MinusIdentity, Split };

const char* canonical_form_name(CanonicalForm f);  // hyperbolic, diag(1,1), diag(-1,-1), diag(1,-1)
BinaryForm canonical_form_value(CanonicalForm f);

struct FormReduction {
  CanonicalForm kind;
  BinaryForm canonical;
  IntegerMatrix u;  // u^T q u = canonical
};

FormReduction reduce_binary_form(const BinaryForm& q);

enum class Rk1Case { Monomial, SymmetricPm, Residual };

const char* rk1_case_name(Rk1Case c);

struct Rk1Report {
  Rk1Case kind = Rk1Case::Residual;
  std::size_t axis = 0;   // variable carrying the support
  Integer a = 0, b = 0;   // W = a + b x^k, or W = a + b (x + 1/x) with b = +-1
  long k = 0;
  std::string group_bound;
  // Shears allowed by the cyclotomic factorisation of dW/dx: only m = 0 when
  // only_zero_shear, otherwise multiples of shear_modulus.
  bool only_zero_shear = false;
  Integer shear_modulus = 1;
  Integer derivative_content = 0;           // c in c x^k prod Phi_d(x)
  std::vector<std::size_t> cyclotomic_factors;
  std::string shear_reason;
};

Rk1Report rk1_classify(const LaurentPolynomial& w);

enum class HessianGroup { Order3, Order2, Order2F };

const char* hessian_group_name(HessianGroup g);

struct HessianPointCheck {
  TorsionPoint point;
  CliffordData raw;
  std::optional<CliffordData> normalized;  // Order3: raw divided by the root of unity kappa
  std::optional<CyclotomicNumber> kappa;
  bool ok = true;
};

struct HessianCheckReport {
  bool pass = true;
  HessianGroup group = HessianGroup::Order3;
  std::vector<HessianPointCheck> points;
  std::optional<int> epsilon;             // Order3
  std::optional<int> epsilon1, epsilon2;  // Order2 diagonal case
  bool hyperbolic = false;
  std::optional<FormReduction> reduction;
  std::string violation;
};

HessianCheckReport hessian_theorem_check(const LaurentPolynomial& w, HessianGroup group);

} // namespace lagmon
