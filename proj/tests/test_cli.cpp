#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "json.hpp"
#include "lagmon/cli.hpp"
#include "support.hpp"

using lagmon::test::fixture;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = lagmon::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1))
    ++n;
  return n;
}

} // namespace

TEST_CASE("toric reports") {
  auto r = run({"toric", fixture("polytopes/cp2.poly")});
  CHECK(r.code == 0);
  CHECK(has(r.out, "H_L order 6"));
  CHECK(has(r.out, "class 3f"));
  auto b = run({"toric", fixture("polytopes/bl1cp2.poly")});
  CHECK(has(b.out, "H_L order 2"));
  CHECK(has(b.out, "H_L generators (1 3)"));
  CHECK(has(b.out, "H_L^S equals H_L yes"));
  auto t = run({"toric", fixture("polytopes/translated_cp2.poly")});
  CHECK(has(t.out, "monotone offsets 1 1 1"));
}

TEST_CASE("toric failures") {
  auto s = run({"toric", fixture("polytopes/not_smooth.poly")});
  CHECK(s.code == 2);
  CHECK(has(s.out + s.err, "NOT_SMOOTH"));
  auto m = run({"toric", fixture("polytopes/not_monotone.poly")});
  CHECK(m.code == 2);
  CHECK(has(m.err, "NOT_MONOTONE"));
  auto missing = run({"toric", fixture("polytopes/absent.poly")});
  CHECK(missing.code == 3);
  auto mode = run({"toric", "--mode", "vertex", fixture("polytopes/cp2.poly")});
  CHECK(mode.code == 0);
}

TEST_CASE("classification and filtering") {
  auto c = run({"classify2d"});
  CHECK(c.code == 0);
  CHECK(count(c.out, "IMPOSSIBLE ") + count(c.out, "IMPOSSIBLE\n") - count(c.out, "TORIC_IMPOSSIBLE") == 6);
  auto f = run({"filter", fixture("groups/class_2t.grp")});
  CHECK(f.code == 0);
  CHECK(has(f.out, "admissible no"));
  CHECK(has(f.out, "class 2t"));
  CHECK(run({"filter", fixture("groups/minus_identity.grp")}).code == 0);
  CHECK(run({"filter", fixture("groups/not_unimodular.grp")}).code == 2);
  CHECK(run({"filter", fixture("groups/infinite.grp")}).code == 2);
}

TEST_CASE("conjecture reports") {
  auto r = run({"conjecture", fixture("catalogs/n3_minus_identity.cat")});
  CHECK(r.code == 0);
  CHECK(count(r.out, "RULED_OUT") == 6);
  CHECK(has(r.out, "group diagonal_signs order 8 CASE2 parts (2,2,2)"));
  CHECK(run({"conjecture", fixture("catalogs/bad_generator.cat")}).code == 2);
  CHECK(run({"conjecture", fixture("polytopes/cp2.poly")}).code == 3);
}

TEST_CASE("potential subcommands") {
  auto c = run({"potential", "crit", fixture("potentials/w_cp2.lp"), "--bound", "6"});
  CHECK(c.code == 0);
  CHECK(has(c.out, "critical 3 bound 6"));
  auto k = run({"potential", "rk1", fixture("potentials/symmetric.lp")});
  CHECK(has(k.out, "case SYMMETRIC_PM"));
  CHECK(run({"potential", "rk1", fixture("potentials/two_variable.lp")}).code == 2);
  auto h = run({"potential", "hessian", fixture("potentials/w_cp2.lp"), "--group", "ORDER3"});
  CHECK(h.code == 0);
  CHECK(has(h.out, "ORDER3 PASS epsilon 1"));
  CHECK(run({"potential", "hessian", fixture("potentials/w_hyperbolic.lp"), "--group", "ORDER2_F"}).code == 2);
  CHECK(run({"potential", "crit", fixture("potentials/w_cp2.lp"), "--bound", "0"}).code != 0);
}

TEST_CASE("clifford and qform") {
  auto c = run({"clifford", fixture("potentials/embedded.lp"), "--at", "1/2,0"});
  CHECK(c.code == 0);
  CHECK(has(c.out, "lambda 1 mu 0 nu 0"));
  CHECK(run({"clifford", fixture("potentials/w_cp2.lp"), "--at", "1/2,0"}).code == 2);
  auto q = run({"qform", "1", "1", "0"});
  CHECK(q.code == 0);
  CHECK(has(q.out, "diag(1,-1)"));
  CHECK(run({"qform", "2", "0", "2"}).code == 2);
  CHECK(run({"qform", "x", "0", "2"}).code == 3);
}

TEST_CASE("argument errors") {
  CHECK(run({}).code == 3);
  CHECK(run({"frobnicate"}).code == 3);
  CHECK(run({"toric", fixture("polytopes/cp2.poly"), "--unknown"}).code == 3);
}

TEST_CASE("json lines") {
  for (std::vector<std::string> args : {std::vector<std::string>{"--json", "toric", fixture("polytopes/cp2.poly")},
                                        {"--json", "classify2d"},
                                        {"--json", "qform", "1", "1", "0"},
                                        {"--json", "conjecture", fixture("catalogs/n3_minus_identity.cat")}}) {
    auto r = run(args);
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::size_t lines = 0;
    for (std::string line; std::getline(in, line); ++lines)
      CHECK(nlohmann::json::accept(line));
    CHECK(lines > 0);
  }
  auto q = nlohmann::json::parse(run({"--json", "qform", "1", "1", "0"}).out);
  CHECK(q["canonical"] == "diag(1,-1)");
}

TEST_CASE("output is deterministic") {
  for (const char* name : {"cp2", "cube3", "bl3cp2", "cp2xcp1"}) {
    auto a = run({"toric", fixture(std::string("polytopes/") + name + ".poly")});
    auto b = run({"toric", fixture(std::string("polytopes/") + name + ".poly")});
    CHECK(a.out == b.out);
  }
  CHECK(run({"classify2d"}).out == run({"classify2d"}).out);
}
