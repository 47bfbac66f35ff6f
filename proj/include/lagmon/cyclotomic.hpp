#pragma once

// Elements of Q(zeta_d) in the power basis 1, z, ..., z^(phi(d)-1), reduced
// modulo the d-th cyclotomic polynomial. Values are kept at the least
// conductor that contains them, so equal numbers have equal representations.

#include <cstddef>
#include <string>
#include <vector>

#include "lagmon/intlat.hpp"

namespace lagmon {

// Integer coefficients, constant term first.
std::vector<Integer> cyclotomic_polynomial(std::size_t d);
std::size_t euler_phi(std::size_t d);

class CyclotomicNumber {
public:
  CyclotomicNumber() : CyclotomicNumber(0) {}
  CyclotomicNumber(long value);  // NOLINT: integers embed implicitly
  CyclotomicNumber(const Integer& value);
  CyclotomicNumber(const Rational& value);
  // Takes coefficients of an arbitrary polynomial in zeta_d and reduces it.
  CyclotomicNumber(std::size_t conductor, std::vector<Rational> poly);

  // zeta_d^k
  static CyclotomicNumber root_of_unity(std::size_t d, long k);

  std::size_t conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_integral() const;           // lies in Z[zeta]
  bool is_rational() const { return conductor_ == 1; }
  Rational rational_value() const;    // requires is_rational()
  std::optional<Integer> integer_value() const;

  // Coordinates in the power basis of Q(zeta_d) for a multiple d of the conductor.
  std::vector<Rational> coordinates_in(std::size_t d) const;

  // Product of all Galois conjugates, computed as the determinant of multiplication.
  Rational field_norm() const;
  bool is_unit() const;  // integral with field norm +-1

  std::string to_string() const;

  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator-(const CyclotomicNumber& a);
  // Division by a nonzero element of the field.
  friend CyclotomicNumber operator/(const CyclotomicNumber& a, const CyclotomicNumber& b);
  CyclotomicNumber& operator+=(const CyclotomicNumber& b) { return *this = *this + b; }
  CyclotomicNumber& operator-=(const CyclotomicNumber& b) { return *this = *this - b; }
  CyclotomicNumber& operator*=(const CyclotomicNumber& b) { return *this = *this * b; }

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

  // Raw representation at a fixed conductor without minimisation; used by hot loops.
  static CyclotomicNumber unreduced(std::size_t conductor, std::vector<Rational> coeffs);
  // Rewrites the value at the least conductor dividing the current one.
  void minimise_conductor();

private:
  std::size_t conductor_ = 1;
  std::vector<Rational> coeffs_;  // length phi(conductor_)
};

// Reduces an arbitrary-length polynomial in zeta_d modulo Phi_d.
std::vector<Rational> reduce_mod_cyclotomic(std::size_t d, std::vector<Rational> poly);

// Integer coefficient matrix (phi x phi) of y -> x * y in the power basis at conductor d.
IntegerMatrix multiplication_matrix(const CyclotomicNumber& x, std::size_t d);

} // namespace lagmon
