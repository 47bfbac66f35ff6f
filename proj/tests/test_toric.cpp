#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lagmon/error.hpp"
#include "lagmon/toric.hpp"
#include "support.hpp"

using namespace lagmon;
using lagmon::test::facets;
using lagmon::test::polytope_fixture;
using lagmon::test::uniform;

namespace {

DelzantPolytope with_offsets(const DelzantPolytope& p, const std::vector<Rational>& offsets) {
  auto fs = p.facets();
  for (std::size_t j = 0; j < fs.size(); ++j)
    fs[j].offset = offsets[j];
  return DelzantPolytope(p.dim(), fs, p.mode());
}

LaurentPolynomial toric_oracle(const DelzantPolytope& p) {
  LaurentPolynomial w(p.dim());
  for (const auto& f : p.facets()) {
    Exponent e;
    for (const auto& x : f.normal)
      e.push_back(x.get_si());
    w.add_term(e, 1);
  }
  return w;
}

} // namespace

TEST_CASE("Delzant validation examples") {
  CHECK(validate_delzant(facets(2, {{1, 0}, {0, 1}, {-1, -1}})).pass());
  CHECK(validate_delzant(facets(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}})).pass());
  auto r = validate_delzant(facets(2, {{1, 0}, {0, 1}, {-1, -2}}));
  CHECK(r.failure == DelzantFailure::NotSmooth);
  REQUIRE(r.witness_determinant.has_value());
  CHECK(abs(*r.witness_determinant) == 2);
}

TEST_CASE("Delzant validation failures") {
  // a redundant facet cuts nothing off the square
  auto red = DelzantPolytope(2, {{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 1}, {{0, -1}, 1}, {{1, 1}, 5}});
  CHECK(validate_delzant(red).failure == DelzantFailure::RedundantFacet);
  // half plane pieces do not close up
  auto open = facets(2, {{1, 0}, {0, 1}, {1, 1}});
  CHECK_FALSE(validate_delzant(open).pass());
  auto vert = facets(2, {{1, 0}, {0, 1}}, 1, CompactnessMode::VertexRequired);
  auto vr = validate_delzant(vert);
  CHECK(vr.pass());
  CHECK(vr.unchecked_topology);
  CHECK_THROWS_AS(facets(2, {{2, 0}, {0, 1}, {-1, -1}}), Error);
  CHECK_THROWS_AS(facets(2, {{1, 0}, {1, 0}, {0, 1}, {-1, -1}}), Error);
}

TEST_CASE("Table fixtures all validate") {
  for (const char* name : {"cp2", "cp1xcp1", "bl1cp2", "bl2cp2", "bl3cp2", "cxcp1", "c2", "cube3", "cp3",
                           "cp2xcp1", "orthant3", "orthant4"})
    CHECK_MESSAGE(validate_delzant(polytope_fixture(name)).pass(), name);
}

TEST_CASE("monotone normalization") {
  auto tri = facets(2, {{1, 0}, {0, 1}, {-1, -1}});
  auto n = monotone_normalize(tri);
  for (const auto& f : n.facets())
    CHECK(f.offset == 1);
  auto shifted = with_offsets(tri, {2, 2, 0});
  auto centred = monotone_normalize(shifted);
  for (const auto& f : centred.facets())
    CHECK(f.offset == Rational(4, 3));
  auto rect = DelzantPolytope(2, {{{1, 0}, 1}, {{-1, 0}, 1}, {{0, 1}, 2}, {{0, -1}, 2}});
  CHECK_THROWS_AS(monotone_normalize(rect), Error);
  try {
    monotone_normalize(rect);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotMonotone);
  }
}

TEST_CASE("monotone normalization is translation invariant") {
  for (const char* name : {"cp2", "cp1xcp1", "bl1cp2", "bl3cp2", "cube3", "cp2xcp1"}) {
    auto p = polytope_fixture(name);
    auto base = monotone_normalize(p);
    for (int t = 0; t < 5; ++t) {
      RatVector shift;
      for (std::size_t i = 0; i < p.dim(); ++i)
        shift.push_back(Rational(uniform(-5, 5), uniform(1, 4)));
      auto moved = monotone_normalize(p.translated(shift));
      REQUIRE(moved.facet_count() == base.facet_count());
      for (std::size_t j = 0; j < base.facet_count(); ++j) {
        CHECK(moved.facets()[j].normal == base.facets()[j].normal);
        CHECK(moved.facets()[j].offset == base.facets()[j].offset);
      }
    }
  }
}

TEST_CASE("toric fiber data") {
  auto cp2 = toric_fiber_data(polytope_fixture("cp2"));
  CHECK(cp2.superpotential.to_string() == "x^-1*y^-1 + y + x");
  CHECK(lattice_equal(cp2.relations, LatticeBasis(3, {{1, 1, 1}})));
  auto bl1 = toric_fiber_data(polytope_fixture("bl1cp2"));
  CHECK(lattice_equal(bl1.relations, LatticeBasis(4, {{1, 1, 1, 0}, {0, 1, 0, 1}})));
  auto cube = toric_fiber_data(polytope_fixture("cube3"));
  CHECK(lattice_equal(cube.relations, LatticeBasis(6, {{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}})));
}

TEST_CASE("relation rank and superpotential support") {
  for (const char* name : {"cp2", "cp1xcp1", "bl1cp2", "bl2cp2", "bl3cp2", "cxcp1", "c2", "cube2", "cube3", "cp3",
                           "cp2xcp1", "orthant3", "orthant4"}) {
    auto p = polytope_fixture(name);
    auto d = toric_fiber_data(p);
    CHECK_MESSAGE(d.relations.rank() == p.facet_count() - p.dim(), name);
    CHECK(d.superpotential == toric_oracle(p));
    CHECK(d.superpotential.size() == p.facet_count());
    CHECK(rank(p.normal_matrix()) == p.dim());
  }
}
