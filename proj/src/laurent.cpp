#include "lagmon/laurent.hpp"

#include <set>
#include <sstream>

#include "lagmon/error.hpp"

namespace lagmon {

namespace {

void check_dim(const LaurentPolynomial& w, const TorsionPoint& p) {
  if (w.dim() != p.dim())
    fail(ErrorCode::DimensionMismatch, "polynomial in " + std::to_string(w.dim()) +
                                           " variables evaluated at a point of dimension " +
                                           std::to_string(p.dim()));
}

// Power-basis polynomial in zeta_d with d the order of p.
std::vector<Rational> value_polynomial(const LaurentPolynomial& w, const TorsionPoint& p, std::size_t d) {
  std::vector<Rational> poly(d, Rational(0));
  for (const auto& [e, c] : w.terms()) {
    Rational s = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      s += Rational(e[i]) * p[i];
    s *= Rational(static_cast<long>(d));
    Integer k = s.get_num() % Integer(static_cast<long>(d));  // s is an integer
    if (k < 0)
      k += static_cast<long>(d);
    poly[k.get_ui()] += c;
  }
  return poly;
}

std::string variable_name(std::size_t dim, std::size_t i) {
  if (dim <= 3)
    return std::string(1, "xyz"[i]);
  return "x" + std::to_string(i + 1);
}

} // namespace

LaurentPolynomial LaurentPolynomial::monomial(const Exponent& e, const Integer& c) {
  LaurentPolynomial w(e.size());
  w.add_term(e, c);
  return w;
}

LaurentPolynomial LaurentPolynomial::constant(std::size_t dim, const Integer& c) {
  return monomial(Exponent(dim, 0), c);
}

Integer LaurentPolynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPolynomial::add_term(const Exponent& e, const Integer& c) {
  if (e.size() != dim_)
    fail(ErrorCode::DimensionMismatch, "exponent of length " + std::to_string(e.size()) + " in a polynomial in " +
                                           std::to_string(dim_) + " variables");
  if (c == 0)
    return;
  Integer& slot = terms_[e];
  slot += c;
  if (slot == 0)
    terms_.erase(e);
}

LaurentPolynomial LaurentPolynomial::derivative(std::size_t i) const {
  LaurentPolynomial d(dim_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0)
      continue;
    Exponent f = e;
    --f[i];
    d.add_term(f, c * e[i]);
  }
  return d;
}

LaurentPolynomial LaurentPolynomial::log_derivative(std::size_t i) const {
  LaurentPolynomial d(dim_);
  for (const auto& [e, c] : terms_)
    d.add_term(e, c * e[i]);
  return d;
}

LaurentPolynomial LaurentPolynomial::transformed(const IntegerMatrix& g) const {
  if (g.rows() != dim_ || g.cols() != dim_)
    fail(ErrorCode::DimensionMismatch, "matrix " + g.to_string() + " does not act on " + std::to_string(dim_) +
                                           " variables");
  LaurentPolynomial out(dim_);
  for (const auto& [e, c] : terms_) {
    Exponent f(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < dim_; ++j)
        s += g(i, j) * e[j];
      f[i] = s.get_si();
    }
    out.add_term(f, c);
  }
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool neg = c < 0;
    Integer a = neg ? Integer(-c) : c;
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (e[i] == 0)
        continue;
      std::string f = variable_name(dim_, i);
      if (e[i] != 1)
        f += "^" + std::to_string(e[i]);
      factors.push_back(f);
    }
    if (factors.empty()) {
      os << a.get_str();
      continue;
    }
    if (a != 1)
      os << a.get_str() << '*';
    for (std::size_t k = 0; k < factors.size(); ++k)
      os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.dim_ != b.dim_)
    fail(ErrorCode::DimensionMismatch, "adding polynomials in different numbers of variables");
  LaurentPolynomial r = a;
  for (const auto& [e, c] : b.terms_)
    r.add_term(e, c);
  return r;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.dim_ != b.dim_)
    fail(ErrorCode::DimensionMismatch, "multiplying polynomials in different numbers of variables");
  LaurentPolynomial r(a.dim_);
  for (const auto& [e, c] : a.terms_)
    for (const auto& [f, d] : b.terms_) {
      Exponent s(a.dim_);
      for (std::size_t i = 0; i < a.dim_; ++i)
        s[i] = e[i] + f[i];
      r.add_term(s, c * d);
    }
  return r;
}

CyclotomicNumber evaluate(const LaurentPolynomial& w, const TorsionPoint& p) {
  check_dim(w, p);
  std::size_t d = p.order();
  return CyclotomicNumber(d, value_polynomial(w, p, d));
}

bool vanishes_at(const LaurentPolynomial& w, const TorsionPoint& p) {
  check_dim(w, p);
  std::size_t d = p.order();
  for (const auto& c : reduce_mod_cyclotomic(d, value_polynomial(w, p, d)))
    if (c != 0)
      return false;
  return true;
}

GradientHessian gradient_hessian(const LaurentPolynomial& w, const TorsionPoint& p) {
  check_dim(w, p);
  const std::size_t n = w.dim();
  GradientHessian gh;
  gh.hess.assign(n, std::vector<CyclotomicNumber>(n));
  for (std::size_t i = 0; i < n; ++i) {
    LaurentPolynomial di = w.derivative(i);
    gh.grad.push_back(evaluate(di, p));
    for (std::size_t j = 0; j < n; ++j)
      gh.hess[i][j] = evaluate(di.derivative(j), p);
  }
  return gh;
}

std::vector<std::vector<CyclotomicNumber>> log_hessian(const LaurentPolynomial& w, const TorsionPoint& p) {
  check_dim(w, p);
  const std::size_t n = w.dim();
  std::vector<std::vector<CyclotomicNumber>> h(n, std::vector<CyclotomicNumber>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h[i][j] = evaluate(w.log_derivative(i).log_derivative(j), p);
  return h;
}

bool is_critical(const LaurentPolynomial& w, const TorsionPoint& p) {
  check_dim(w, p);
  bool affine = true, logarithmic = true;
  for (std::size_t i = 0; i < w.dim(); ++i) {
    affine = affine && vanishes_at(w.derivative(i), p);
    logarithmic = logarithmic && vanishes_at(w.log_derivative(i), p);
  }
  if (affine != logarithmic)
    fail(ErrorCode::Unrecognized, "affine and logarithmic gradients disagree at " + p.to_string());
  return affine;
}

std::vector<TorsionPoint> torsion_critical_points(const LaurentPolynomial& w, std::size_t order_bound,
                                                  std::size_t grid_cap) {
  if (order_bound == 0)
    fail(ErrorCode::InvalidInput, "order bound must be positive");
  Integer size = 1;
  for (std::size_t i = 0; i < w.dim(); ++i)
    size *= static_cast<unsigned long>(order_bound);
  if (size > grid_cap)
    fail(ErrorCode::GridTooLarge, "torsion grid has " + size.get_str() + " points, cap is " +
                                      std::to_string(grid_cap));
  std::vector<LaurentPolynomial> partials;
  for (std::size_t i = 0; i < w.dim(); ++i)
    partials.push_back(w.log_derivative(i));
  std::vector<TorsionPoint> out;
  for (const auto& p : torsion_grid(w.dim(), order_bound)) {
    bool crit = true;
    for (const auto& d : partials)
      if (!vanishes_at(d, p)) {
        crit = false;
        break;
      }
    if (crit)
      out.push_back(p);
  }
  return out;
}

SupportRank b1_support_rank(const LaurentPolynomial& w) {
  SupportRank r;
  for (const auto& [e, c] : w.terms()) {
    bool zero = true;
    for (long x : e)
      zero = zero && x == 0;
    if (!zero)
      r.b1.push_back(e);
  }
  if (r.b1.empty())
    return r;
  IntegerMatrix m(r.b1.size(), w.dim());
  for (std::size_t i = 0; i < r.b1.size(); ++i)
    for (std::size_t j = 0; j < w.dim(); ++j)
      m(i, j) = r.b1[i][j];
  r.rank = rank(m);
  return r;
}

bool invariance_check(const LaurentPolynomial& w, const IntegerMatrix& g) { return w.transformed(g) == w; }

bool candidate_filter(const LaurentPolynomial& w, const IntegerMatrix& g) {
  SupportRank s = b1_support_rank(w);
  std::set<Exponent> b1(s.b1.begin(), s.b1.end()), image;
  for (const auto& e : s.b1) {
    LaurentPolynomial t = LaurentPolynomial::monomial(e).transformed(g);
    const Exponent& f = t.terms().begin()->first;
    if (!b1.count(f) || w.coefficient(f) != w.coefficient(e))
      return false;
    image.insert(f);
  }
  return image == b1;
}

} // namespace lagmon
