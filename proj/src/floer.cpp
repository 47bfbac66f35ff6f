#include "lagmon/floer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>

#include "lagmon/error.hpp"

namespace lagmon {

namespace {

using Coeffs = std::array<CyclotomicNumber, 4>;  // 1, u, v, uv

Coeffs as_array(const CliffordElement& e) { return {e.a0, e.au, e.av, e.auv}; }
CliffordElement from_array(const Coeffs& c) { return {c[0], c[1], c[2], c[3]}; }

// Product of basis elements i and j.
Coeffs basis_product(std::size_t i, std::size_t j, const CliffordData& d) {
  const CyclotomicNumber& l = d.lambda;
  const CyclotomicNumber& m = d.mu;
  const CyclotomicNumber& n = d.nu;
  Coeffs r{0, 0, 0, 0};
  if (i == 0) {
    r[j] = 1;
    return r;
  }
  if (j == 0) {
    r[i] = 1;
    return r;
  }
  switch (i * 4 + j) {
    case 1 * 4 + 1: r[0] = l; break;                  // uu = lambda
    case 1 * 4 + 2: r[3] = 1; break;                  // uv
    case 1 * 4 + 3: r[2] = l; break;                  // u uv = lambda v
    case 2 * 4 + 1: r[0] = m; r[3] = -1; break;       // vu = mu - uv
    case 2 * 4 + 2: r[0] = n; break;                  // vv = nu
    case 2 * 4 + 3: r[1] = -n; r[2] = m; break;       // v uv = mu v - nu u
    case 3 * 4 + 1: r[1] = m; r[2] = -l; break;       // uv u = mu u - lambda v
    case 3 * 4 + 2: r[1] = n; break;                  // uv v = nu u
    case 3 * 4 + 3: r[0] = -(l * n); r[3] = m; break; // uv uv = mu uv - lambda nu
  }
  return r;
}

bool is_parity(const CliffordElement& c, Parity p) {
  return p == Parity::Even ? c.au.is_zero() && c.av.is_zero() : c.a0.is_zero() && c.auv.is_zero();
}

struct Action {
  CliffordElement gu, gv;
  Integer sign;
};

Action make_action(const IntegerMatrix& g, Parity parity) {
  if (g.rows() != 2 || g.cols() != 2)
    fail(ErrorCode::UnsupportedAction, "the action must be a 2 x 2 matrix");
  auto unit = [](const Integer& x) { return x == 1 || x == -1; };
  if (g(1, 0) != 0 || !unit(g(0, 0)) || !unit(g(1, 1)))
    fail(ErrorCode::UnsupportedAction, g.to_string() + " is not of the form [[+-1,m],[0,+-1]]");
  Action a;
  a.gu = {0, CyclotomicNumber(g(0, 0)), CyclotomicNumber(g(0, 1)), 0};
  a.gv = {0, CyclotomicNumber(g(1, 0)), CyclotomicNumber(g(1, 1)), 0};
  a.sign = parity == Parity::Even ? 1 : -1;
  return a;
}

// c u - s (g.u) c and c v - s (g.v) c
std::pair<CliffordElement, CliffordElement> residual(const CliffordElement& c, const Action& a,
                                                     const CliffordData& d) {
  CyclotomicNumber s(a.sign);
  return {clifford_mul(c, CliffordElement::u(), d) - s * clifford_mul(a.gu, c, d),
          clifford_mul(c, CliffordElement::v(), d) - s * clifford_mul(a.gv, c, d)};
}

bool is_continuation(const CliffordElement& c, const Action& a, const CliffordData& d) {
  if (!c.is_integral())
    return false;
  auto inv = clifford_inverse(c, d);
  if (!inv || !inv->is_integral())
    return false;
  auto [r1, r2] = residual(c, a, d);
  return r1.is_zero() && r2.is_zero();
}

void check_conductor(const CliffordData& d, std::size_t conductor) {
  if (conductor == 0)
    fail(ErrorCode::InvalidInput, "conductor must be positive");
  for (const auto* x : {&d.lambda, &d.mu, &d.nu})
    if (conductor % x->conductor() != 0)
      fail(ErrorCode::InvalidInput, "constant " + x->to_string() + " does not lie in Q(zeta_" +
                                        std::to_string(conductor) + ")");
}

CliffordElement place(Parity p, const CyclotomicNumber& x, const CyclotomicNumber& y) {
  return p == Parity::Even ? CliffordElement{x, 0, 0, y} : CliffordElement{0, x, y, 0};
}

// Calls f on every element of Z[zeta_N] with power-basis coordinates in [-h, h]
// until f returns true.
template <class F>
bool for_each_bounded(std::size_t conductor, std::size_t slots, long h, F f) {
  const std::size_t phi = euler_phi(conductor);
  const std::size_t len = phi * slots;
  std::vector<long> x(len, -h);
  while (true) {
    std::vector<CyclotomicNumber> vals;
    for (std::size_t s = 0; s < slots; ++s) {
      std::vector<Rational> c(phi);
      for (std::size_t i = 0; i < phi; ++i)
        c[i] = x[s * phi + i];
      vals.emplace_back(conductor, std::move(c));
    }
    if (f(vals))
      return true;
    std::size_t i = 0;
    while (i < len && x[i] == h)
      x[i++] = -h;
    if (i == len)
      return false;
    ++x[i];
  }
}

long search_height(std::size_t coords, std::size_t budget) {
  long h = 50;
  while (h > 0 && std::pow(2.0 * static_cast<double>(h) + 1.0, static_cast<double>(coords)) >
                      static_cast<double>(budget))
    --h;
  return h;
}

bool data_integral_rational(const CliffordData& d) {
  for (const auto* x : {&d.lambda, &d.mu, &d.nu})
    if (!x->integer_value())
      return false;
  return true;
}

std::string solution_string(const CliffordElement& c) { return c.to_string(); }

} // namespace

bool CliffordElement::is_integral() const {
  return a0.is_integral() && au.is_integral() && av.is_integral() && auv.is_integral();
}

std::string CliffordElement::to_string() const {
  static const char* names[] = {"", "u", "v", "uv"};
  Coeffs c = as_array(*this);
  std::string out;
  for (std::size_t i = 0; i < 4; ++i) {
    if (c[i].is_zero())
      continue;
    std::string coef = c[i].to_string();
    std::string term;
    if (i == 0)
      term = coef;
    else if (coef == "1")
      term = names[i];
    else if (coef == "-1")
      term = std::string("-") + names[i];
    else if (coef.find_first_of("+ ") != std::string::npos || coef.find('-', 1) != std::string::npos)
      term = "(" + coef + ")*" + names[i];
    else
      term = coef + "*" + names[i];
    out += out.empty() ? term : " + " + term;
  }
  return out.empty() ? "0" : out;
}

CliffordElement operator+(const CliffordElement& a, const CliffordElement& b) {
  return {a.a0 + b.a0, a.au + b.au, a.av + b.av, a.auv + b.auv};
}

CliffordElement operator-(const CliffordElement& a, const CliffordElement& b) {
  return {a.a0 - b.a0, a.au - b.au, a.av - b.av, a.auv - b.auv};
}

CliffordElement operator*(const CyclotomicNumber& s, const CliffordElement& a) {
  return {s * a.a0, s * a.au, s * a.av, s * a.auv};
}

CliffordData hessian_constants(const LaurentPolynomial& w, const TorsionPoint& p) {
  if (w.dim() != 2 || p.dim() != 2)
    fail(ErrorCode::DimensionMismatch, "Clifford constants need two variables");
  GradientHessian gh = gradient_hessian(w, p);
  CyclotomicNumber half(Rational(-1, 2));
  CliffordData d;
  d.lambda = half * gh.hess[0][0];
  d.mu = -gh.hess[0][1];
  d.nu = half * gh.hess[1][1];
  d.half_integral = !(d.lambda.is_integral() && d.mu.is_integral() && d.nu.is_integral());
  return d;
}

CliffordData clifford_constants(const LaurentPolynomial& w, const TorsionPoint& p) {
  if (w.dim() != 2 || p.dim() != 2)
    fail(ErrorCode::DimensionMismatch, "Clifford constants need two variables");
  if (!is_critical(w, p))
    fail(ErrorCode::NotCritical, p.to_string() + " is not a critical point of " + w.to_string());
  return hessian_constants(w, p);
}

CliffordElement clifford_mul(const CliffordElement& a, const CliffordElement& b, const CliffordData& d) {
  Coeffs x = as_array(a), y = as_array(b), r{0, 0, 0, 0};
  for (std::size_t i = 0; i < 4; ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (y[j].is_zero())
        continue;
      CyclotomicNumber s = x[i] * y[j];
      Coeffs e = basis_product(i, j, d);
      for (std::size_t k = 0; k < 4; ++k)
        if (!e[k].is_zero())
          r[k] += s * e[k];
    }
  }
  return from_array(r);
}

std::optional<CliffordElement> clifford_inverse(const CliffordElement& c, const CliffordData& d) {
  CliffordElement conj;
  if (is_parity(c, Parity::Even))
    conj = {c.a0 + d.mu * c.auv, 0, 0, -c.auv};
  else if (is_parity(c, Parity::Odd))
    conj = c;
  else
    return std::nullopt;
  CliffordElement n = clifford_mul(c, conj, d);
  if (!n.au.is_zero() || !n.av.is_zero() || !n.auv.is_zero() || n.a0.is_zero())
    return std::nullopt;
  CliffordElement inv = (CyclotomicNumber(1) / n.a0) * conj;
  CliffordElement one = CliffordElement::scalar(1);
  if (clifford_mul(c, inv, d) != one || clifford_mul(inv, c, d) != one)
    return std::nullopt;
  return inv;
}

const char* solvability_name(Solvability s) {
  switch (s) {
    case Solvability::Solvable: return "SOLVABLE";
    case Solvability::Unsolvable: return "UNSOLVABLE";
    case Solvability::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

ContinuationResult continuation_search(const CliffordData& d, const IntegerMatrix& action, Parity parity,
                                       std::size_t conductor, std::size_t budget) {
  const Action act = make_action(action, parity);
  check_conductor(d, conductor);
  const std::size_t phi = euler_phi(conductor);

  // Restriction of scalars: the unknown c has 2 phi rational coordinates and
  // the two residuals give 8 phi rational equations.
  const std::size_t cols = 2 * phi;
  RatMatrix a(8 * phi, RatVector(cols, Rational(0)));
  for (std::size_t slot = 0; slot < 2; ++slot)
    for (std::size_t k = 0; k < phi; ++k) {
      CyclotomicNumber z = CyclotomicNumber::root_of_unity(conductor, static_cast<long>(k));
      CliffordElement c = slot == 0 ? place(parity, z, 0) : place(parity, 0, z);
      auto [r1, r2] = residual(c, act, d);
      std::size_t row = 0;
      for (const auto& r : {r1, r2})
        for (const auto& x : as_array(r))
          for (const auto& q : x.coordinates_in(conductor))
            a[row++][slot * phi + k] = q;
    }
  std::vector<RatVector> kernel = rational_kernel(a, cols);

  ContinuationResult res;
  if (kernel.empty()) {
    res.verdict = Solvability::Unsolvable;
    res.method = "the conjugation equations have only the zero solution";
    return res;
  }
  const std::size_t dim_k = kernel.size() / phi;

  if (dim_k == 2 && parity == Parity::Even) {
    res.verdict = Solvability::Solvable;
    res.witness = CliffordElement::scalar(1);
    res.method = "every even element solves the equations";
    return res;
  }

  std::vector<CliffordElement> basis;
  if (dim_k == 2) {
    basis = {place(parity, 1, 0), place(parity, 0, 1)};
  } else {
    const RatVector& k0 = kernel.front();
    auto slot_value = [&](std::size_t slot) {
      std::vector<Rational> c(k0.begin() + static_cast<long>(slot * phi),
                              k0.begin() + static_cast<long>((slot + 1) * phi));
      return CyclotomicNumber(conductor, std::move(c));
    };
    CyclotomicNumber x = slot_value(0), y = slot_value(1);
    if (!x.is_zero())
      basis = {place(parity, 1, y / x)};
    else
      basis = {place(parity, 0, 1)};

    const CliffordElement& b = basis.front();
    const CyclotomicNumber& second = parity == Parity::Even ? b.auv : b.av;
    const CyclotomicNumber& first = parity == Parity::Even ? b.a0 : b.au;
    if (data_integral_rational(d) && first.is_rational() && second.is_rational()) {
      // Every integral solution is t c0 with t in Z[zeta] and c0 primitive, and
      // its inverse is integral iff the norm of c0 is +-1.
      IntVector prim = primitive_integer_vector({first.rational_value(), second.rational_value()});
      CliffordElement c0 = place(parity, CyclotomicNumber(prim[0]), CyclotomicNumber(prim[1]));
      CliffordElement conj = parity == Parity::Even
                                 ? CliffordElement{c0.a0 + d.mu * c0.auv, 0, 0, -c0.auv}
                                 : c0;
      CyclotomicNumber norm = clifford_mul(c0, conj, d).a0;
      if (norm == 1 || norm == -1) {
        if (!is_continuation(c0, act, d))
          fail(ErrorCode::Unrecognized, "unit solution " + c0.to_string() + " failed verification");
        res.verdict = Solvability::Solvable;
        res.witness = c0;
        res.method = "primitive solution " + c0.to_string() + " has norm " + norm.to_string();
      } else {
        res.verdict = Solvability::Unsolvable;
        res.method = "solutions are multiples of " + c0.to_string() + " whose norm " + norm.to_string() +
                     " is not a unit";
      }
      return res;
    }
  }

  const long h = search_height(phi * basis.size(), budget);
  std::optional<CliffordElement> found;
  for_each_bounded(conductor, basis.size(), h, [&](const std::vector<CyclotomicNumber>& t) {
    CliffordElement c{0, 0, 0, 0};
    for (std::size_t i = 0; i < basis.size(); ++i)
      c = c + t[i] * basis[i];
    if (c.is_zero() || !is_continuation(c, act, d))
      return false;
    found = c;
    return true;
  });
  if (found) {
    res.verdict = Solvability::Solvable;
    res.witness = found;
    res.method = "search found " + solution_string(*found);
  } else {
    res.verdict = Solvability::Unknown;
    res.method = "no invertible solution with coefficients of height <= " + std::to_string(h);
  }
  return res;
}

ContinuationResult continuation_solvable(const CliffordData& d, const IntegerMatrix& action, Parity parity,
                                         std::size_t conductor) {
  const Action act = make_action(action, parity);
  check_conductor(d, conductor);
  auto lambda = d.lambda.integer_value();
  if (d.mu.is_zero() && d.nu.is_zero() && lambda) {
    const Integer& l = *lambda;
    const Integer& m = action(0, 1);
    const bool shear = action(0, 0) == 1 && action(1, 1) == 1 && parity == Parity::Even;
    const bool reflection = action(0, 0) == -1 && action(1, 1) == 1 && parity == Parity::Odd;
    ContinuationResult res;
    if (shear) {
      // c = p + q uv: the equations force m p = -2 q lambda with p a unit.
      if (l == 0 && m == 0) {
        res.witness = CliffordElement::scalar(1);
      } else if (l != 0 && cyclo_multiple_member(m, 2 * l, conductor)) {
        Integer q = -m / (2 * l);
        res.witness = CliffordElement{1, 0, 0, CyclotomicNumber(q)};
      }
      res.method = "closed form: m p = -2 q lambda with p a unit";
    } else if (reflection) {
      // c = a u + b v: the equations force 2 b = -m a and c^2 = a^2 lambda.
      if ((l == 1 || l == -1) && m % 2 == 0)
        res.witness = CliffordElement{0, 1, CyclotomicNumber(Integer(-m / 2)), 0};
      res.method = "closed form: c^2 = a^2 lambda must be a unit and 2 b = -m a";
    }
    if (shear || reflection) {
      if (res.witness) {
        if (!is_continuation(*res.witness, act, d))
          fail(ErrorCode::Unrecognized, "closed-form witness " + res.witness->to_string() + " failed verification");
        res.verdict = Solvability::Solvable;
      } else {
        res.verdict = Solvability::Unsolvable;
      }
      return res;
    }
  }
  return continuation_search(d, action, parity, conductor);
}

bool cyclo_multiple_member(const Integer& m, const Integer& k, std::size_t d) {
  if (k == 0)
    fail(ErrorCode::InvalidInput, "divisor must be nonzero");
  Rational q(m, k);
  q.canonicalize();
  for (const auto& c : CyclotomicNumber(q).coordinates_in(d))
    if (c.get_den() != 1)
      return false;
  return true;
}

IntegerMatrix BinaryForm::matrix() const {
  IntegerMatrix q(2, 2);
  q(0, 0) = lambda;
  q(0, 1) = mu_half;
  q(1, 0) = mu_half;
  q(1, 1) = nu;
  return q;
}

std::string BinaryForm::to_string() const { return matrix().to_string(); }

const char* canonical_form_name(CanonicalForm f) {
  switch (f) {
    case CanonicalForm::Hyperbolic: return "hyperbolic";
    case CanonicalForm::PlusIdentity: return "diag(1,1)";
    case CanonicalForm::MinusIdentity: return "diag(-1,-1)";
    case CanonicalForm::Split: return "diag(1,-1)";
  }
  return "unknown";
}

BinaryForm canonical_form_value(CanonicalForm f) {
  switch (f) {
    case CanonicalForm::Hyperbolic: return {0, 1, 0};
    case CanonicalForm::PlusIdentity: return {1, 0, 1};
    case CanonicalForm::MinusIdentity: return {-1, 0, -1};
    case CanonicalForm::Split: return {1, 0, -1};
  }
  return {0, 0, 0};
}

FormReduction reduce_binary_form(const BinaryForm& q0) {
  const Integer disc = q0.discriminant();
  if (disc != 1 && disc != -1)
    fail(ErrorCode::BadDiscriminant, "discriminant of " + q0.to_string() + " is " + disc.get_str());

  IntegerMatrix u = IntegerMatrix::identity(2);
  BinaryForm q = q0;
  auto apply = [&](const IntegerMatrix& t) {
    IntegerMatrix m = t.transpose() * q.matrix() * t;
    q = {m(0, 0), m(0, 1), m(1, 1)};
    u = u * t;
  };

  FormReduction r;
  if (disc == -1) {
    const bool negative = q.lambda < 0;
    if (negative)
      q = {-q.lambda, -q.mu_half, -q.nu};
    while (true) {
      // Bring b into [-a/2, a/2), then swap while c < a.
      Integer k = -floor_div(2 * q.mu_half + q.lambda, 2 * q.lambda);
      if (k != 0)
        apply(IntegerMatrix{{1, k.get_si()}, {0, 1}});
      if (q.nu < q.lambda)
        apply(IntegerMatrix{{0, -1}, {1, 0}});
      else
        break;
    }
    if (negative)
      q = {-q.lambda, -q.mu_half, -q.nu};
    r.kind = negative ? CanonicalForm::MinusIdentity : CanonicalForm::PlusIdentity;
  } else {
    // An isotropic primitive vector, extended to a basis.
    IntVector v = q.lambda == 0 ? IntVector{1, 0} : primitive_integer_vector({Rational(1 - q.mu_half), q.lambda});
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), t.get_mpz_t(), s.get_mpz_t(), v[0].get_mpz_t(), v[1].get_mpz_t());
    // v0 t + v1 s = 1, so [[v0, -s], [v1, t]] is unimodular.
    IntegerMatrix e(2, 2);
    e(0, 0) = v[0];
    e(1, 0) = v[1];
    e(0, 1) = -s;
    e(1, 1) = t;
    apply(e);
    if (q.mu_half == -1)
      apply(IntegerMatrix{{1, 0}, {0, -1}});
    Integer c = q.nu;
    const bool even = c % 2 == 0;
    Integer k = even ? Integer(-c / 2) : Integer((1 - c) / 2);
    if (k != 0) {
      IntegerMatrix shift = IntegerMatrix::identity(2);
      shift(0, 1) = k;
      apply(shift);
    }
    if (even) {
      r.kind = CanonicalForm::Hyperbolic;
    } else {
      apply(IntegerMatrix{{0, 1}, {1, -1}});
      r.kind = CanonicalForm::Split;
    }
  }
  r.canonical = canonical_form_value(r.kind);
  r.u = u;
  Integer det = determinant(u);
  if (!(u.transpose() * q0.matrix() * u == r.canonical.matrix()) || (det != 1 && det != -1))
    fail(ErrorCode::Unrecognized, "reduction of " + q0.to_string() + " failed verification");
  return r;
}

const char* rk1_case_name(Rk1Case c) {
  switch (c) {
    case Rk1Case::Monomial: return "MONOMIAL";
    case Rk1Case::SymmetricPm: return "SYMMETRIC_PM";
    case Rk1Case::Residual: return "RESIDUAL";
  }
  return "UNKNOWN";
}

namespace {

using Poly = std::vector<Integer>;  // constant term first

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

// Exact division by a monic polynomial; nullopt if it leaves a remainder.
std::optional<Poly> divide_monic(Poly p, const Poly& m) {
  trim(p);
  const std::size_t dm = m.size() - 1;
  if (p.size() < m.size())
    return std::nullopt;
  Poly q(p.size() - dm, 0);
  for (std::size_t i = p.size(); i-- > dm;) {
    Integer c = p[i];
    q[i - dm] = c;
    if (c != 0)
      for (std::size_t j = 0; j <= dm; ++j)
        p[i - dm + j] -= c * m[j];
  }
  trim(p);
  if (!p.empty())
    return std::nullopt;
  return q;
}

} // namespace

Rk1Report rk1_classify(const LaurentPolynomial& w) {
  if (w.dim() != 1 && w.dim() != 2)
    fail(ErrorCode::NotUnivariate, "expected one or two variables");
  Rk1Report r;
  if (w.dim() == 2) {
    bool on_x = true, on_y = true;
    for (const auto& [e, c] : w.terms()) {
      on_x = on_x && e[1] == 0;
      on_y = on_y && e[0] == 0;
    }
    if (!on_x && !on_y)
      fail(ErrorCode::NotUnivariate, w.to_string() + " involves both variables");
    r.axis = on_x ? 0 : 1;
  }
  std::map<long, Integer> t;
  for (const auto& [e, c] : w.terms())
    t[e[r.axis]] += c;
  r.a = t.count(0) ? t[0] : Integer(0);
  t.erase(0);
  if (t.empty())
    fail(ErrorCode::InvalidInput, "constant superpotential has no support");

  if (t.size() == 1) {
    r.kind = Rk1Case::Monomial;
    r.k = t.begin()->first;
    r.b = t.begin()->second;
    if (r.k < 0)
      r.k = -r.k;
    r.group_bound = "{[[1,Z],[0,±1]]}";
    r.shear_reason = "no critical points, every shear allowed";
    return r;
  }
  if (t.size() == 2 && t.count(1) && t.count(-1) && t[1] == t[-1] && (t[1] == 1 || t[1] == -1)) {
    r.kind = Rk1Case::SymmetricPm;
    r.b = t[1];
    r.k = 1;
    r.group_bound = "{[[±1,2Z],[0,1]]}";
    r.shear_modulus = 2;
    r.shear_reason = "critical points at x = -1 force even shears";
    return r;
  }

  r.kind = Rk1Case::Residual;
  r.group_bound = "{[[1,2Z],[0,1]]}";
  // dW/dx = x^lo P(x) with P(0) != 0.
  std::map<long, Integer> dw;
  for (const auto& [e, c] : t)
    dw[e - 1] += c * e;
  const long lo = dw.begin()->first;
  Poly p(static_cast<std::size_t>(dw.rbegin()->first - lo + 1), 0);
  for (const auto& [e, c] : dw)
    p[static_cast<std::size_t>(e - lo)] = c;
  const std::size_t deg = p.size() - 1;
  // phi(d) >= sqrt(d / 2), so larger d cannot divide.
  const std::size_t dmax = 2 * deg * deg + 2;
  Integer modulus = 1;
  for (std::size_t d = 1; d <= dmax && p.size() > 1; ++d) {
    if (euler_phi(d) > p.size() - 1)
      continue;
    Poly phi = cyclotomic_polynomial(d);
    auto q = divide_monic(p, phi);
    if (!q)
      continue;
    r.cyclotomic_factors.push_back(d);
    p = *q;
    if (divide_monic(p, phi)) {
      r.only_zero_shear = true;
      r.shear_reason = "repeated root of unity of order " + std::to_string(d);
      return r;
    }
    Integer dd = static_cast<unsigned long>(d);
    mpz_lcm(modulus.get_mpz_t(), modulus.get_mpz_t(), dd.get_mpz_t());
  }
  if (p.size() != 1) {
    r.only_zero_shear = true;
    r.shear_reason = "dW/dx has a root that is not a root of unity";
    return r;
  }
  r.derivative_content = p[0];
  Integer twice = 2 * abs(p[0]);
  mpz_lcm(modulus.get_mpz_t(), modulus.get_mpz_t(), twice.get_mpz_t());
  r.shear_modulus = modulus;
  r.shear_reason = "each root order and 2|c| divide m";
  return r;
}

const char* hessian_group_name(HessianGroup g) {
  switch (g) {
    case HessianGroup::Order3: return "ORDER3";
    case HessianGroup::Order2: return "ORDER2";
    case HessianGroup::Order2F: return "ORDER2_F";
  }
  return "UNKNOWN";
}

namespace {

TorsionPoint point2(const Rational& a, const Rational& b) { return TorsionPoint(RatVector{a, b}); }

LaurentPolynomial symmetric_pair(const Exponent& e, const Integer& c) {
  Exponent neg = e;
  for (auto& x : neg)
    x = -x;
  return LaurentPolynomial::monomial(e, c) + LaurentPolynomial::monomial(neg, c);
}

bool same_constants(const CliffordData& a, const CliffordData& b) {
  return a.lambda == b.lambda && a.mu == b.mu && a.nu == b.nu;
}

std::string constants_string(const CliffordData& d) {
  return "(" + d.lambda.to_string() + ", " + d.mu.to_string() + ", " + d.nu.to_string() + ")";
}

} // namespace

HessianCheckReport hessian_theorem_check(const LaurentPolynomial& w, HessianGroup group) {
  if (w.dim() != 2)
    fail(ErrorCode::DimensionMismatch, "the Hessian checks need two variables");
  HessianCheckReport r;
  r.group = group;
  auto violate = [&](std::size_t i, std::string msg) {
    if (i < r.points.size())
      r.points[i].ok = false;
    if (r.pass)
      r.violation = std::move(msg);
    r.pass = false;
  };

  if (group == HessianGroup::Order3) {
    const IntegerMatrix r3{{0, -1}, {1, -1}};
    if (!invariance_check(w, r3))
      fail(ErrorCode::NotInvariant, w.to_string() + " is not invariant under " + r3.to_string());
    for (long k = 0; k < 3; ++k) {
      HessianPointCheck pc;
      pc.point = point2(Rational(k, 3), Rational(k, 3));
      pc.raw = clifford_constants(w, pc.point);
      r.points.push_back(pc);
    }
    for (std::size_t i = 0; i < r.points.size(); ++i) {
      auto& pc = r.points[i];
      const CliffordData& d = pc.raw;
      if (!(d.lambda == d.mu && d.mu == d.nu)) {
        violate(i, "constants " + constants_string(d) + " at " + pc.point.to_string() + " are not all equal");
        continue;
      }
      std::optional<int> eps;
      for (long j = 0; j < 3 && !eps; ++j) {
        CyclotomicNumber kappa = CyclotomicNumber::root_of_unity(3, j);
        CyclotomicNumber ratio = d.lambda / kappa;
        if (ratio == -1 || ratio == 1) {
          eps = ratio == -1 ? 1 : -1;
          pc.kappa = kappa;
          CyclotomicNumber inv = CyclotomicNumber(1) / kappa;
          pc.normalized = CliffordData{inv * d.lambda, inv * d.mu, inv * d.nu, d.half_integral};
        }
      }
      if (!eps) {
        violate(i, "constant " + d.lambda.to_string() + " at " + pc.point.to_string() +
                       " is not a signed cube root of unity");
        continue;
      }
      if (r.epsilon && *r.epsilon != *eps) {
        violate(i, "sign at " + pc.point.to_string() + " differs from earlier points");
        continue;
      }
      r.epsilon = eps;
    }
    if (!r.pass)
      r.epsilon.reset();
    return r;
  }

  const IntegerMatrix minus{{-1, 0}, {0, -1}};
  if (!invariance_check(w, minus))
    fail(ErrorCode::NotInvariant, w.to_string() + " is not invariant under -I");
  if (group == HessianGroup::Order2F) {
    const IntegerMatrix gf{{1, 0}, {0, -1}};
    if (!invariance_check(w, gf))
      fail(ErrorCode::NotInvariant, w.to_string() + " is not invariant under " + gf.to_string());
  }
  const Rational zero(0), half(1, 2);
  for (const auto& [a, b] : std::vector<std::pair<Rational, Rational>>{{zero, zero}, {zero, half}, {half, zero},
                                                                       {half, half}}) {
    HessianPointCheck pc;
    pc.point = point2(a, b);
    pc.raw = clifford_constants(w, pc.point);
    r.points.push_back(pc);
  }

  const CliffordData& base = r.points[0].raw;
  auto l = base.lambda.integer_value(), m = base.mu.integer_value(), n = base.nu.integer_value();
  if (!l || !m || !n) {
    violate(0, "constants " + constants_string(base) + " at (0,0) are not integers");
    return r;
  }
  if (*m % 2 != 0) {
    violate(0, "mixed constant " + m->get_str() + " at (0,0) is odd");
    return r;
  }
  BinaryForm q{*l, Integer(*m / 2), *n};
  const Integer disc = q.discriminant();
  if (disc != 1 && disc != -1) {
    violate(0, "form " + q.to_string() + " at (0,0) has discriminant " + disc.get_str());
    return r;
  }
  FormReduction red = reduce_binary_form(q);
  r.reduction = red;

  LaurentPolynomial ref(2);
  if (red.kind == CanonicalForm::Hyperbolic) {
    if (group == HessianGroup::Order2F) {
      violate(0, "form " + q.to_string() + " is hyperbolic but g_f forces a diagonal form");
      return r;
    }
    r.hyperbolic = true;
    ref = symmetric_pair({1, 0}, 1) + symmetric_pair({0, 1}, 1) + symmetric_pair({1, 1}, -1);
  } else {
    const BinaryForm& c = red.canonical;
    r.epsilon1 = static_cast<int>(-c.lambda.get_si());
    r.epsilon2 = static_cast<int>(-c.nu.get_si());
    ref = symmetric_pair({1, 0}, -c.lambda) + symmetric_pair({0, 1}, -c.nu);
  }
  // The reduced basis has H_1 coordinates beta = u^T alpha.
  ref = ref.transformed(unimodular_inverse(red.u).transpose());
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    CliffordData expect = hessian_constants(ref, r.points[i].point);
    if (!same_constants(r.points[i].raw, expect))
      violate(i, "constants " + constants_string(r.points[i].raw) + " at " + r.points[i].point.to_string() +
                     " differ from the reference " + constants_string(expect));
  }
  if (!r.pass) {
    r.epsilon1.reset();
    r.epsilon2.reset();
    r.hyperbolic = false;
  }
  return r;
}

} // namespace lagmon
