#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>
#include <numbers>
#include <numeric>

#include "lagmon/error.hpp"
#include "lagmon/laurent.hpp"
#include "support.hpp"

using namespace lagmon;
using lagmon::test::uniform;

namespace {

LaurentPolynomial poly(std::size_t dim, std::initializer_list<std::pair<Exponent, long>> terms) {
  LaurentPolynomial w(dim);
  for (const auto& [e, c] : terms)
    w.add_term(e, c);
  return w;
}

const LaurentPolynomial wcp2 = poly(2, {{{1, 0}, 1}, {{0, 1}, 1}, {{-1, -1}, 1}});

TorsionPoint pt(std::initializer_list<Rational> c) { return TorsionPoint(RatVector(c)); }

std::size_t conductor_of(const TorsionPoint& p) {
  std::size_t d = 1;
  for (const auto& c : p.coords())
    d = std::lcm(d, c.get_den().get_ui());
  return d;
}

// zeta_D^(sum e_j p_j D)
CyclotomicNumber monomial_value(const Exponent& e, const TorsionPoint& p) {
  const std::size_t d = conductor_of(p);
  Rational s = 0;
  for (std::size_t j = 0; j < e.size(); ++j)
    s += Rational(e[j]) * p[j];
  Rational k = s * Rational(d);
  return CyclotomicNumber::root_of_unity(d, k.get_num().get_si());
}

CyclotomicNumber oracle_partial(const LaurentPolynomial& w, std::size_t i, const TorsionPoint& p) {
  CyclotomicNumber s = 0;
  for (const auto& [e, c] : w.terms()) {
    if (e[i] == 0)
      continue;
    Exponent f = e;
    --f[i];
    s += CyclotomicNumber(Integer(c * e[i])) * monomial_value(f, p);
  }
  return s;
}

LaurentPolynomial random_poly(std::size_t dim) {
  LaurentPolynomial w(dim);
  const int terms = uniform(0, 5);
  for (int t = 0; t < terms; ++t) {
    Exponent e(dim);
    for (auto& x : e)
      x = uniform(-3, 3);
    w.add_term(e, uniform(-3, 3));
  }
  return w;
}

TorsionPoint random_point(std::size_t dim) {
  RatVector c;
  for (std::size_t i = 0; i < dim; ++i) {
    long q = uniform(1, 8);
    c.push_back(Rational(uniform(0, q - 1), q));
  }
  return TorsionPoint(c);
}

std::complex<double> complex_value(const CyclotomicNumber& x) {
  std::complex<double> s = 0;
  for (std::size_t k = 0; k < x.coefficients().size(); ++k)
    s += x.coefficients()[k].get_d() * std::polar(1.0, 2 * std::numbers::pi * k / x.conductor());
  return s;
}

std::complex<double> complex_eval(const LaurentPolynomial& w, const std::vector<std::complex<double>>& z) {
  std::complex<double> s = 0;
  for (const auto& [e, c] : w.terms()) {
    std::complex<double> m = c.get_d();
    for (std::size_t i = 0; i < e.size(); ++i)
      m *= std::pow(z[i], static_cast<double>(e[i]));
    s += m;
  }
  return s;
}

} // namespace

TEST_CASE("evaluation examples") {
  CHECK(evaluate(wcp2, pt({0, 0})) == CyclotomicNumber(3));
  CHECK(evaluate(wcp2, pt({Rational(1, 3), Rational(1, 3)})) == 3 * CyclotomicNumber::root_of_unity(3, 1));
  auto sym = poly(2, {{{1, 0}, 1}, {{-1, 0}, 1}});
  CHECK(evaluate(sym, pt({Rational(1, 2), Rational(1, 7)})) == CyclotomicNumber(-2));
}

TEST_CASE("gradient and Hessian examples") {
  auto gh = gradient_hessian(wcp2, pt({0, 0}));
  CHECK(gh.grad[0].is_zero());
  CHECK(gh.grad[1].is_zero());
  CHECK(gh.hess[0][0] == CyclotomicNumber(2));
  CHECK(gh.hess[0][1] == CyclotomicNumber(1));
  CHECK(gh.hess[1][0] == CyclotomicNumber(1));
  CHECK(gh.hess[1][1] == CyclotomicNumber(2));
  auto one = poly(1, {{{1}, 1}, {{-1}, 1}});
  auto g1 = gradient_hessian(one, pt({Rational(1, 2)}));
  CHECK(g1.grad[0].is_zero());
  CHECK(g1.hess[0][0] == CyclotomicNumber(-2));
  auto c = LaurentPolynomial::constant(2, 7);
  auto gc = gradient_hessian(c, pt({Rational(1, 3), 0}));
  CHECK(gc.grad[0].is_zero());
  CHECK(gc.hess[1][1].is_zero());
}

TEST_CASE("critical point examples") {
  CHECK(is_critical(wcp2, pt({Rational(1, 3), Rational(1, 3)})));
  CHECK_FALSE(is_critical(wcp2, pt({Rational(1, 2), 0})));
  CHECK(is_critical(LaurentPolynomial::constant(2, 4), pt({Rational(1, 5), Rational(2, 3)})));
}

TEST_CASE("torsion critical points") {
  CHECK(torsion_critical_points(wcp2, 6) ==
        std::vector<TorsionPoint>{pt({0, 0}), pt({Rational(1, 3), Rational(1, 3)}), pt({Rational(2, 3), Rational(2, 3)})});
  CHECK(torsion_critical_points(poly(2, {{{1, 0}, 1}, {{0, 1}, 1}}), 12).empty());
  auto cube = poly(3, {{{1, 0, 0}, 1}, {{-1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, -1, 0}, 1}, {{0, 0, 1}, 1}, {{0, 0, -1}, 1}});
  CHECK(torsion_critical_points(cube, 2).size() == 8);
  CHECK_THROWS_AS(torsion_critical_points(cube, 200, 1000), Error);
}

TEST_CASE("support rank") {
  auto s = b1_support_rank(wcp2);
  CHECK(s.b1.size() == 3);
  CHECK(s.rank == 2);
  CHECK(b1_support_rank(LaurentPolynomial::constant(2, 3)).rank == 0);
  CHECK(b1_support_rank(LaurentPolynomial::constant(2, 3)).b1.empty());
  CHECK(b1_support_rank(poly(2, {{{0, 0}, 5}, {{3, 0}, 2}})).rank == 1);
}

TEST_CASE("invariance and candidate filter") {
  auto r3 = IntegerMatrix{{0, -1}, {1, -1}};
  auto swap = IntegerMatrix{{0, 1}, {1, 0}};
  CHECK(invariance_check(wcp2, r3));
  CHECK(invariance_check(poly(2, {{{1, 0}, 1}, {{0, 1}, 1}}), swap));
  CHECK_FALSE(invariance_check(poly(2, {{{1, 0}, 1}, {{0, 1}, 2}}), swap));
  CHECK(candidate_filter(wcp2, swap));
  CHECK(candidate_filter(wcp2, r3));
  CHECK_FALSE(candidate_filter(wcp2, IntegerMatrix{{1, 1}, {0, 1}}));
  CHECK(candidate_filter(poly(2, {{{1, 0}, 1}, {{0, 1}, 2}}), IntegerMatrix::identity(2)));
}

TEST_CASE("invariance closes under products and implies the candidate filter") {
  std::vector<IntegerMatrix> mats = {{{0, -1}, {1, -1}}, {{0, 1}, {1, 0}}, {{-1, 0}, {0, -1}},
                                     {{1, 0}, {0, -1}},  {{0, -1}, {1, 0}}, {{1, -1}, {1, 0}}};
  std::vector<LaurentPolynomial> ws = {wcp2, poly(2, {{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}}),
                                       poly(2, {{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}, {{1, 1}, -1}, {{-1, -1}, -1}})};
  for (const auto& w : ws)
    for (const auto& g : mats)
      for (const auto& h : mats) {
        if (invariance_check(w, g) && invariance_check(w, h))
          CHECK(invariance_check(w, g * h));
        if (invariance_check(w, g))
          CHECK(candidate_filter(w, g));
      }
}

TEST_CASE("evaluation is a ring homomorphism") {
  for (int t = 0; t < 100; ++t) {
    const std::size_t dim = uniform(1, 3);
    auto a = random_poly(dim), b = random_poly(dim);
    auto p = random_point(dim);
    CHECK(evaluate(a * b, p) == evaluate(a, p) * evaluate(b, p));
    CHECK(evaluate(a + b, p) == evaluate(a, p) + evaluate(b, p));
  }
}

TEST_CASE("is_critical agrees with the termwise derivative oracle") {
  int critical = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t dim = uniform(1, 3);
    auto w = random_poly(dim);
    auto p = random_point(dim);
    bool oracle = true;
    auto gh = gradient_hessian(w, p);
    for (std::size_t i = 0; i < dim; ++i) {
      auto d = oracle_partial(w, i, p);
      CHECK(gh.grad[i] == d);
      oracle = oracle && d.is_zero();
    }
    CHECK(is_critical(w, p) == oracle);
    critical += oracle;
  }
  // symmetric potentials are critical at their 2-torsion points
  auto cube = poly(2, {{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}});
  for (const auto& p : torsion_grid(2, 2))
    CHECK(is_critical(cube, p));
  MESSAGE("critical samples: " << critical);
}

TEST_CASE("gradient agrees with finite differences") {
  for (int t = 0; t < 50; ++t) {
    const std::size_t dim = uniform(1, 2);
    auto w = random_poly(dim);
    auto p = random_point(dim);
    auto gh = gradient_hessian(w, p);
    std::vector<std::complex<double>> z;
    for (std::size_t i = 0; i < dim; ++i)
      z.push_back(std::polar(1.0, 2 * std::numbers::pi * p[i].get_d()));
    for (std::size_t i = 0; i < dim; ++i) {
      const double h = 1e-6;
      auto zp = z, zm = z;
      zp[i] *= std::polar(1.0, h);
      zm[i] *= std::polar(1.0, -h);
      auto fd = (complex_eval(w, zp) - complex_eval(w, zm)) / (zp[i] - zm[i]);
      CHECK(std::abs(fd - complex_value(gh.grad[i])) < 1e-4);
    }
  }
}

TEST_CASE("transformed relabels exponents") {
  auto g = IntegerMatrix{{0, -1}, {1, -1}};
  auto t = wcp2.transformed(g);
  CHECK(t == wcp2);
  auto x = poly(2, {{{1, 0}, 3}});
  CHECK(x.transformed(g) == poly(2, {{{0, 1}, 3}}));
}
