#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <set>

#include "lagmon/classify.hpp"
#include "lagmon/error.hpp"
#include "lagmon/monodromy.hpp"
#include "support.hpp"

using namespace lagmon;
using lagmon::test::fixture;
using lagmon::test::uniform;

namespace {

const std::set<std::string> inadmissible = {"2t", "3t", "4", "4ft", "6", "6ft"};

MatrixGroup entry(const std::string& name) {
  for (const auto& e : catalog_n2().entries)
    if (e.name == name)
      return e.group;
  FAIL("missing class " << name);
  return {};
}

IntegerMatrix random_unimodular(long bound) {
  while (true) {
    IntegerMatrix u{{uniform(-bound, bound), uniform(-bound, bound)}, {uniform(-bound, bound), uniform(-bound, bound)}};
    if (abs(determinant(u)) == 1)
      return u;
  }
}

// Rebuilds the homomorphism on the full multiplication table of g.
bool table_verified(const MatrixGroup& g, const SymmetricEmbedding& e) {
  const auto& elems = g.elements();
  const std::size_t order = elems.size();
  std::vector<std::vector<std::size_t>> mul(order, std::vector<std::size_t>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      mul[a][b] = g.index_of(elems[a] * elems[b]);
  std::size_t degree = 0;
  std::vector<std::size_t> block;
  for (std::size_t b = 0; b < e.parts.size(); ++b)
    for (std::size_t i = 0; i < e.parts[b]; ++i, ++degree)
      block.push_back(b);
  for (const auto& p : e.images)
    for (std::size_t i = 0; i < degree; ++i)
      if (block[p[i]] != block[i])
        return false;
  std::vector<std::optional<Permutation>> phi(order);
  const std::size_t id = g.index_of(IntegerMatrix::identity(g.dim()));
  phi[id] = identity_permutation(degree);
  std::vector<std::size_t> queue{id};
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (std::size_t j = 0; j < e.generators.size(); ++j) {
      std::size_t b = mul[queue[q]][g.index_of(e.generators[j])];
      if (!phi[b]) {
        phi[b] = compose(*phi[queue[q]], e.images[j]);
        queue.push_back(b);
      }
    }
  std::set<Permutation> distinct;
  for (const auto& p : phi) {
    if (!p)
      return false;
    distinct.insert(*p);
  }
  if (distinct.size() != order)
    return false;
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      if (*phi[mul[a][b]] != compose(*phi[a], *phi[b]))
        return false;
  return true;
}

IntegerMatrix companion(const std::vector<Integer>& poly) {
  const std::size_t n = poly.size() - 1;
  IntegerMatrix c(n, n);
  for (std::size_t i = 1; i < n; ++i)
    c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i)
    c(i, n - 1) = -poly[i];
  return c;
}

// Orders of block-diagonal companion matrices of cyclotomic polynomials of total degree k.
std::set<std::size_t> companion_orders(std::size_t k) {
  std::set<std::size_t> out;
  std::vector<std::size_t> ds;
  for (std::size_t d = 1; d <= 60; ++d)
    if (euler_phi(d) <= k)
      ds.push_back(d);
  std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&)> rec =
      [&](std::size_t from, std::size_t used, std::vector<std::size_t>& chosen) {
        if (used == k) {
          IntegerMatrix m(k, k);
          std::size_t at = 0;
          for (auto d : chosen) {
            auto c = companion(cyclotomic_polynomial(d));
            for (std::size_t i = 0; i < c.rows(); ++i)
              for (std::size_t j = 0; j < c.cols(); ++j)
                m(at + i, at + j) = c(i, j);
            at += c.rows();
          }
          out.insert(*matrix_order(m, 1000));
          return;
        }
        for (std::size_t i = from; i < ds.size(); ++i)
          if (used + euler_phi(ds[i]) <= k) {
            chosen.push_back(ds[i]);
            rec(i, used + euler_phi(ds[i]), chosen);
            chosen.pop_back();
          }
      };
  std::vector<std::size_t> chosen;
  rec(0, 0, chosen);
  return out;
}

} // namespace

TEST_CASE("the built-in catalog") {
  auto c = catalog_n2();
  CHECK(c.entries.size() == 13);
  CHECK(entry("2f").elements() == MatrixGroup::generate(2, {-IntegerMatrix::identity(2), {{1, 0}, {0, -1}}}).elements());
  CHECK(entry("2f").order() == 4);
  CHECK(entry("6ft").order() == 12);
  std::set<std::string> labels;
  for (const auto& e : c.entries) {
    CHECK(identify_class_n2(e.group).name == e.name);
    labels.insert(e.name);
  }
  CHECK(labels.size() == 13);
}

TEST_CASE("identification examples") {
  CHECK(identify_class_n2(MatrixGroup::generate(2, {{{0, 1}, {1, 0}}})).name == "1t");
  CHECK(identify_class_n2(MatrixGroup::generate(2, {{{1, 0}, {0, -1}}})).name == "1f");
  CHECK(toric_class_n2(lagmon::test::polytope_fixture("cp2")) == "3f");
  CHECK_THROWS_AS(identify_class_n2(MatrixGroup::trivial(3)), Error);
}

TEST_CASE("identification is conjugation invariant") {
  for (const auto& e : catalog_n2().entries)
    for (int t = 0; t < 100; ++t) {
      auto u = random_unimodular(5);
      CHECK_MESSAGE(identify_class_n2(e.group.conjugate_by(u)).name == e.name, e.name);
    }
}

TEST_CASE("classification table") {
  std::set<std::string> impossible, realized, toric_impossible;
  for (const auto& r : classify_n2()) {
    if (r.tag == "IMPOSSIBLE")
      impossible.insert(r.name);
    else if (r.tag == "TORIC_REALIZED")
      realized.insert(r.name);
    else if (r.tag == "TORIC_IMPOSSIBLE")
      toric_impossible.insert(r.name);
    CHECK((r.tag == "IMPOSSIBLE") == !r.admissibility.admissible);
  }
  CHECK(impossible == inadmissible);
  CHECK(realized == std::set<std::string>{"1", "1f", "1t", "2f", "3f"});
  CHECK(toric_impossible == std::set<std::string>{"2", "3"});
}

TEST_CASE("toric classes of the table polytopes") {
  std::map<std::string, std::string> expect = {{"CP2", "3f"}, {"CP1xCP1", "2f"}, {"Bl1CP2", "1t"}, {"Bl2CP2", "1"},
                                                {"Bl3CP2", "1"},  {"CxCP1", "1f"},   {"C2", "1t"}};
  for (const auto& p : table1_polytopes())
    CHECK_MESSAGE(toric_class_n2(p.polytope) == expect.at(p.name), p.name);
}

TEST_CASE("catalog ingestion") {
  auto reps = ingest_catalog(read_text_file(fixture("catalogs/n3_representatives.cat")));
  CHECK(reps.entries.size() == 4);
  CHECK(reps.dim == 3);
  CHECK(ingest_catalog(read_text_file(fixture("catalogs/empty.cat"))).entries.empty());
  CHECK_THROWS_AS(ingest_catalog(read_text_file(fixture("catalogs/bad_generator.cat"))), Error);
  auto q = ingest_catalog(read_text_file(fixture("catalogs/qclass.cat")));
  CHECK(q.qclass);
  CHECK_FALSE(q.warnings.empty());
  CHECK_THROWS_AS(ingest_catalog("group a\ndim 2\ngroup a\ndim 2\n"), Error);
  CHECK_THROWS_AS(ingest_catalog("group a\ndim 2\ngroup b\ndim 3\n"), Error);
  CHECK_THROWS_AS(ingest_catalog("group a\ndim 2\ngen\n1 1\n0 1\n"), Error);
}

TEST_CASE("symmetric embeddings") {
  auto klein = MatrixGroup::generate(2, {-IntegerMatrix::identity(2), {{1, 0}, {0, -1}}});
  auto e = embed_symmetric_product(klein, {2, 2});
  REQUIRE(e.has_value());
  CHECK(verify_embedding(klein, *e));
  CHECK(table_verified(klein, *e));
  auto c4 = MatrixGroup::generate(2, {{{0, -1}, {1, 0}}});
  CHECK_FALSE(embed_symmetric_product(c4, {2, 2, 2}).has_value());
  auto s3 = entry("3f");
  auto f = embed_symmetric_product(s3, {3});
  REQUIRE(f.has_value());
  CHECK(table_verified(s3, *f));
  CHECK_FALSE(embed_symmetric_product(entry("6ft"), {3}).has_value());
}

TEST_CASE("embedding witnesses survive table verification") {
  for (const auto& c : catalog_n2().entries)
    for (const auto& parts : symmetric_partitions(2)) {
      auto e = embed_symmetric_product(c.group, parts);
      if (e) {
        CHECK(verify_embedding(c.group, *e));
        CHECK_MESSAGE(table_verified(c.group, *e), c.name);
      }
    }
  auto cat = ingest_catalog(read_text_file(fixture("catalogs/n3_minus_identity.cat")));
  for (const auto& c : cat.entries)
    for (const auto& parts : symmetric_partitions(3)) {
      auto e = embed_symmetric_product(c.group, parts);
      if (e)
        CHECK_MESSAGE(table_verified(c.group, *e), c.name);
    }
}

TEST_CASE("symmetric partitions") {
  auto p = symmetric_partitions(3);
  for (const auto& parts : p) {
    std::size_t s = 0;
    for (auto x : parts) {
      CHECK(x >= 2);
      s += x - 1;
    }
    CHECK(s == 3);
  }
  CHECK(std::find(p.begin(), p.end(), std::vector<std::size_t>{2, 2, 2}) != p.end());
  CHECK(std::find(p.begin(), p.end(), std::vector<std::size_t>{4}) != p.end());
  CHECK(std::find(p.begin(), p.end(), std::vector<std::size_t>{3, 2}) != p.end());
}

TEST_CASE("finite orders in GL(k,Z)") {
  CHECK_FALSE(gl_order_feasible(5, 3));
  CHECK(gl_order_feasible(6, 3));
  CHECK(gl_order_feasible(4, 2));
  for (std::size_t k = 1; k <= 4; ++k) {
    auto orders = companion_orders(k);
    for (std::size_t m = 1; m <= 30; ++m)
      CHECK_MESSAGE(gl_order_feasible(m, k) == (orders.count(m) > 0), "m=" << m << " k=" << k);
  }
  std::set<std::size_t> three;
  for (std::size_t m = 1; m <= 30; ++m)
    if (gl_order_feasible(m, 3))
      three.insert(m);
  CHECK(three == std::set<std::size_t>{1, 2, 3, 4, 6});
}

TEST_CASE("conjecture filter") {
  auto cat = ingest_catalog(read_text_file(fixture("catalogs/n3_minus_identity.cat")));
  for (const auto& v : conjecture_filter(cat)) {
    if (v.name.rfind("minus_identity_", 0) == 0)
      CHECK_MESSAGE(v.status == ConjectureStatus::RuledOut, v.name);
    if (v.name == "diagonal_signs") {
      CHECK(v.status == ConjectureStatus::Case2);
      REQUIRE(v.embedding.has_value());
      CHECK(v.embedding->parts == std::vector<std::size_t>{2, 2, 2});
    }
    if (v.embedding)
      CHECK(verify_embedding(MatrixGroup::generate(3, v.embedding->generators), *v.embedding));
  }
  std::set<std::string> ruled;
  for (const auto& v : conjecture_filter(catalog_n2())) {
    if (v.status == ConjectureStatus::RuledOut)
      ruled.insert(v.name);
    else
      CHECK_MESSAGE((v.status == ConjectureStatus::Case1Necessary || v.status == ConjectureStatus::Case2 ||
                     v.status == ConjectureStatus::Both),
                    v.name);
  }
  CHECK(ruled == inadmissible);
}
