#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "lagmon/classify.hpp"
#include "lagmon/torussym.hpp"
#include "support.hpp"

using namespace lagmon;
using lagmon::test::uniform;

namespace {

TorsionPoint pt(std::initializer_list<Rational> c) { return TorsionPoint(RatVector(c)); }

std::vector<TorsionPoint> brute_fixed(const IntegerMatrix& g, std::size_t m) {
  std::vector<TorsionPoint> out;
  for (const auto& p : torsion_grid(g.rows(), m)) {
    // v -> g^T v, computed independently of apply_monomial
    RatVector w(p.dim(), 0);
    for (std::size_t i = 0; i < p.dim(); ++i)
      for (std::size_t j = 0; j < p.dim(); ++j)
        w[i] += Rational(g(j, i)) * p[j];
    if (TorsionPoint(w) == p)
      out.push_back(p);
  }
  return out;
}

IntegerMatrix random_unimodular(std::size_t n, long bound) {
  while (true) {
    auto u = IntegerMatrix::identity(n);
    for (int s = 0; s < 6; ++s) {
      std::size_t i = uniform(0, n - 1), j = uniform(0, n - 1);
      if (i != j)
        u.add_row_multiple(i, j, uniform(-2, 2));
    }
    bool small = true;
    for (const auto& e : u.entries())
      small = small && abs(e) <= bound;
    if (small)
      return u;
  }
}

} // namespace

TEST_CASE("torsion points are reduced") {
  auto p = pt({Rational(3, 2), Rational(-1, 3)});
  CHECK(p[0] == Rational(1, 2));
  CHECK(p[1] == Rational(2, 3));
  CHECK(p.order() == 6);
  CHECK(p.to_string() == "(1/2,2/3)");
}

TEST_CASE("monomial action convention") {
  // psi_3(x, y) = (y, 1/(xy))
  auto g = IntegerMatrix{{0, -1}, {1, -1}};
  auto p = pt({Rational(1, 5), Rational(2, 7)});
  auto q = apply_monomial(g, p);
  CHECK(q == pt({Rational(2, 7), -Rational(1, 5) - Rational(2, 7)}));
}

TEST_CASE("fixed points of the worked examples") {
  auto f = monomial_fixed_points({-IntegerMatrix::identity(2)});
  REQUIRE(f.finite);
  CHECK(f.points == std::vector<TorsionPoint>{pt({0, 0}), pt({0, Rational(1, 2)}), pt({Rational(1, 2), 0}),
                                              pt({Rational(1, 2), Rational(1, 2)})});
  auto r = monomial_fixed_points({IntegerMatrix{{0, -1}, {1, -1}}});
  REQUIRE(r.finite);
  CHECK(r.points ==
        std::vector<TorsionPoint>{pt({0, 0}), pt({Rational(1, 3), Rational(1, 3)}), pt({Rational(2, 3), Rational(2, 3)})});
  CHECK_FALSE(monomial_fixed_points({IntegerMatrix::identity(2)}).finite);
  auto refl = monomial_fixed_points({IntegerMatrix{{1, 0}, {0, -1}}});
  CHECK_FALSE(refl.finite);
  CHECK(refl.kernel.size() == 1);
}

TEST_CASE("fixed point count equals the determinant") {
  for (const auto& e : catalog_n2().entries)
    for (const auto& g : e.group.elements()) {
      Integer d = abs(determinant(g.transpose() - IntegerMatrix::identity(2)));
      if (d == 0)
        continue;
      auto f = monomial_fixed_points({g});
      REQUIRE(f.finite);
      CHECK(f.size() == d.get_ui());
      CHECK(f.points == brute_fixed(g, d.get_ui()));
    }
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = uniform(2, 3);
    auto g = random_unimodular(n, 3);
    Integer d = abs(determinant(g.transpose() - IntegerMatrix::identity(n)));
    if (d == 0 || d > 60)
      continue;
    auto f = monomial_fixed_points({g});
    REQUIRE(f.finite);
    CHECK(f.size() == d.get_ui());
    CHECK(f.points == brute_fixed(g, d.get_ui()));
  }
}

TEST_CASE("forced critical points") {
  auto minus = MatrixGroup::generate(2, {-IntegerMatrix::identity(2)});
  CHECK(forced_critical_points(minus).size() == 4);
  CHECK(forced_critical_points(MatrixGroup::trivial(2)).size() == 0);
  auto r3 = MatrixGroup::generate(2, {{{0, -1}, {1, -1}}});
  CHECK(forced_critical_points(r3).size() == 3);
}

TEST_CASE("admissibility examples") {
  auto t2 = MatrixGroup::generate(2, {-IntegerMatrix::identity(2), {{0, 1}, {1, 0}}});
  auto a = admissible_group(t2);
  CHECK_FALSE(a.admissible);
  REQUIRE(a.witness_element.has_value());
  REQUIRE(a.witness_point.has_value());
  CHECK(apply_monomial(*a.witness_element, *a.witness_point) != *a.witness_point);
  CHECK(admissible_group(MatrixGroup::generate(2, {-IntegerMatrix::identity(2), {{1, 0}, {0, -1}}})).admissible);
  CHECK_FALSE(admissible_group(MatrixGroup::generate(2, {{{0, -1}, {1, 0}}})).admissible);
  CHECK(admissible_group(MatrixGroup::trivial(3)).admissible);
}

TEST_CASE("forced set is stable and admissibility is conjugation invariant") {
  for (const auto& e : catalog_n2().entries) {
    auto forced = forced_critical_points(e.group);
    for (const auto& g : e.group.elements())
      for (const auto& p : forced.points)
        CHECK(forced.contains(apply_monomial(g, p)));
    const bool verdict = admissible_group(e.group).admissible;
    for (int t = 0; t < 10; ++t) {
      auto u = random_unimodular(2, 5);
      CHECK_MESSAGE(admissible_group(e.group.conjugate_by(u)).admissible == verdict, e.name);
    }
  }
}
