#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "lagmon/error.hpp"
#include "lagmon/text_io.hpp"
#include "support.hpp"

using namespace lagmon;
using lagmon::test::fixture;

namespace {

std::string parse_message(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    return e.message();
  }
  FAIL("expected a parse error");
  return {};
}

} // namespace

TEST_CASE("numbers") {
  CHECK(parse_integer("-17") == -17);
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(parse_rational("-3") == -3);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_integer("x"), Error);
}

TEST_CASE("polytope format") {
  auto p = parse_polytope("# comment\ndim 2\nmode vertex\nfacet 1 0 1\nfacet 0 1 1/2  # trailing\n");
  CHECK(p.dim() == 2);
  CHECK(p.mode() == CompactnessMode::VertexRequired);
  CHECK(p.facets()[1].offset == Rational(1, 2));
  CHECK(parse_polytope(read_text_file(fixture("polytopes/cp2.poly"))).facet_count() == 3);
  CHECK(parse_message([] { parse_polytope("dim 2\nfacet 1 0\n"); }).find("line 2") != std::string::npos);
  CHECK(parse_message([] { parse_polytope("dim 2\nfacet 1 0 1\nmode compact\n"); }).find("line 3") != std::string::npos);
  CHECK(parse_message([] { parse_polytope("dim 2\nwedge 1 0 1\n"); }).find("wedge") != std::string::npos);
  CHECK(parse_message([] { parse_polytope("dim 2\nfacet 2 0 1\n"); }).size() > 0);
  CHECK_THROWS_AS(parse_polytope(""), Error);
}

TEST_CASE("group format") {
  auto g = parse_group(read_text_file(fixture("groups/order3.grp")));
  CHECK(g.dim == 2);
  REQUIRE(g.generators.size() == 1);
  CHECK(g.generators[0] == IntegerMatrix{{0, -1}, {1, -1}});
  CHECK(parse_message([] { parse_group("dim 2\ngen\n1 0\n"); }).find("fewer") != std::string::npos);
  CHECK(parse_message([] { parse_group("dim 2\ngen\n1 0 0\n0 1\n"); }).find("line 3") != std::string::npos);
}

TEST_CASE("catalog format") {
  auto c = parse_catalog("kind qclass\ngroup a\ndim 1\ngen\n-1\ngroup b\ndim 1\n");
  CHECK(c.kind == "qclass");
  REQUIRE(c.groups.size() == 2);
  CHECK(c.groups[0].generators.size() == 1);
  CHECK(c.groups[1].generators.empty());
  CHECK(parse_catalog("").groups.empty());
  CHECK(parse_message([] { parse_catalog("kind other\n"); }).find("line 1") != std::string::npos);
  CHECK(parse_message([] { parse_catalog("dim 2\n"); }).find("group") != std::string::npos);
}

TEST_CASE("Laurent format and points") {
  auto w = parse_laurent("dim 2\nterm 1 1 0\nterm 1 0 1\nterm 1 -1 -1\n");
  CHECK(w.size() == 3);
  CHECK(parse_laurent("dim 1\nterm 2 1\nterm -2 1\n").size() == 0);
  CHECK(parse_message([] { parse_laurent("dim 2\nterm 1 1\n"); }).find("line 2") != std::string::npos);
  auto p = parse_point("(0,1/2)");
  CHECK(p.coords() == RatVector{0, Rational(1, 2)});
  CHECK(parse_point("5/3,-1/4").coords() == RatVector{Rational(2, 3), Rational(3, 4)});
  CHECK_THROWS_AS(parse_point("()"), Error);
}
