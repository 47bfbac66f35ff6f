#include "lagmon/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "lagmon/error.hpp"
#include "lagmon/monodromy.hpp"
#include "lagmon/text_io.hpp"

namespace lagmon {

namespace {

const IntegerMatrix kR2{{-1, 0}, {0, -1}};
const IntegerMatrix kR3{{0, -1}, {1, -1}};
const IntegerMatrix kR4{{0, -1}, {1, 0}};
const IntegerMatrix kR6{{1, -1}, {1, 0}};
const IntegerMatrix kGf{{1, 0}, {0, -1}};
const IntegerMatrix kGt{{0, 1}, {1, 0}};
const IntegerMatrix kS3t{{-1, 1}, {0, 1}};

IntVector primitive_column_kernel(const IntegerMatrix& m) {
  LatticeBasis k = kernel_lattice(m.transpose());
  if (k.rank() != 1)
    fail(ErrorCode::Unrecognized, "reflection " + m.to_string() + " has no one-dimensional eigenspace");
  return k.vector(0);
}

// Cycle lengths inside each block, used to skip conjugate choices for the first generator.
std::vector<std::vector<std::size_t>> block_cycle_type(const Permutation& p, const std::vector<std::size_t>& parts) {
  std::vector<std::vector<std::size_t>> key;
  std::vector<bool> seen(p.size(), false);
  std::size_t start = 0;
  for (std::size_t b : parts) {
    std::vector<std::size_t> lens;
    for (std::size_t i = start; i < start + b; ++i) {
      if (seen[i])
        continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
        seen[j] = true;
        ++len;
      }
      lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    key.push_back(std::move(lens));
    start += b;
  }
  return key;
}

struct EmbeddingSearch {
  EmbeddingSearch(const GroupTable& t, const PermutationGroup& g, std::vector<std::size_t> p)
      : table(t), target(g), parts(std::move(p)) {}

  const GroupTable& table;
  const PermutationGroup& target;
  std::vector<std::size_t> parts;  // empty: no conjugacy pruning
  std::size_t budget = 50000000;
  std::size_t work = 0;

  std::vector<int> gens;
  std::vector<Permutation> images;
  std::vector<std::vector<const Permutation*>> by_order;

  // Extends the first k generator images to the subgroup they generate;
  // false if the map is not a well-defined injective homomorphism.
  bool consistent(std::size_t k) {
    const std::size_t n = table.order();
    const std::size_t degree = target.degree();
    const Permutation id = identity_permutation(degree);
    std::vector<Permutation> img(n);
    std::vector<bool> have(n, false);
    std::vector<int> queue{0};
    img[0] = id;
    have[0] = true;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int a = queue[qi];
      for (std::size_t j = 0; j < k; ++j) {
        ++work;
        const int b = table.mul[static_cast<std::size_t>(a)][static_cast<std::size_t>(gens[j])];
        Permutation im = compose(img[static_cast<std::size_t>(a)], images[j]);
        if (have[static_cast<std::size_t>(b)]) {
          if (img[static_cast<std::size_t>(b)] != im)
            return false;
          continue;
        }
        if (b != 0 && im == id)
          return false;
        img[static_cast<std::size_t>(b)] = std::move(im);
        have[static_cast<std::size_t>(b)] = true;
        queue.push_back(b);
      }
    }
    if (work > budget)
      fail(ErrorCode::TooLarge, "embedding search exceeded its budget of " + std::to_string(budget) + " steps");
    return true;
  }

  bool assign(std::size_t i) {
    if (i == gens.size())
      return true;
    const std::size_t ord = table.element_order[static_cast<std::size_t>(gens[i])];
    if (ord >= by_order.size())
      return false;
    std::set<std::vector<std::vector<std::size_t>>> classes;
    for (const Permutation* c : by_order[ord]) {
      if (i == 0 && !parts.empty() && !classes.insert(block_cycle_type(*c, parts)).second)
        continue;
      images[i] = *c;
      if (consistent(i + 1) && assign(i + 1))
        return true;
    }
    return false;
  }

  std::optional<std::vector<Permutation>> run() {
    gens = table.generators;
    images.assign(gens.size(), Permutation{});
    for (const auto& p : target.elements()) {
      std::size_t o = permutation_order(p);
      if (by_order.size() <= o)
        by_order.resize(o + 1);
      by_order[o].push_back(&p);
    }
    if (target.order() % table.order() != 0)
      return std::nullopt;
    if (!assign(0))
      return std::nullopt;
    return images;
  }
};

PermutationGroup symmetric_product(const std::vector<std::size_t>& parts) {
  std::size_t degree = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  std::vector<Permutation> gens;
  std::size_t start = 0;
  for (std::size_t b : parts) {
    if (b >= 2) {
      Permutation t = identity_permutation(degree);
      std::swap(t[start], t[start + 1]);
      gens.push_back(t);
      Permutation c = identity_permutation(degree);
      for (std::size_t i = 0; i < b; ++i)
        c[start + i] = static_cast<int>(start + (i + 1) % b);
      gens.push_back(c);
    }
    start += b;
  }
  return PermutationGroup::generate(degree, gens);
}

PermutationGroup dihedral(std::size_t m) {
  Permutation rot(m), ref(m);
  for (std::size_t i = 0; i < m; ++i) {
    rot[i] = static_cast<int>((i + 1) % m);
    ref[i] = static_cast<int>((m - i) % m);
  }
  return PermutationGroup::generate(m, {rot, ref});
}

bool embeds_abstractly(const GroupTable& t, const PermutationGroup& target) {
  EmbeddingSearch s(t, target, {});
  return s.run().has_value();
}

std::size_t factorial(std::size_t n) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= n; ++i)
    f *= i;
  return f;
}

} // namespace

GroupCatalog catalog_n2() {
  struct Spec {
    const char* name;
    std::vector<IntegerMatrix> gens;
  };
  const std::vector<Spec> specs{
      {"1", {}},           {"1f", {kGf}},        {"1t", {kGt}},        {"2", {kR2}},        {"2f", {kR2, kGf}},
      {"2t", {kR2, kGt}},  {"3", {kR3}},         {"3f", {kR3, kGt}},   {"3t", {kR3, kS3t}}, {"4", {kR4}},
      {"4ft", {kR4, kGf}}, {"6", {kR6}},         {"6ft", {kR6, kGt}},
  };
  GroupCatalog c;
  c.dim = 2;
  for (const auto& s : specs)
    c.entries.push_back({s.name, MatrixGroup::generate(2, s.gens)});
  return c;
}

ClassLabel2D identify_class_n2(const MatrixGroup& g) {
  if (g.dim() != 2)
    fail(ErrorCode::DimensionMismatch, "identification needs a subgroup of GL(2,Z)");
  const std::size_t m = g.rotation_subgroup().order();
  std::vector<IntegerMatrix> reflections;
  std::optional<IntegerMatrix> rho;
  for (const auto& e : g.elements()) {
    if (determinant(e) == -1)
      reflections.push_back(e);
    else if (matrix_order(e) == m)
      rho = e;
  }
  if (m != 1 && m != 2 && m != 3 && m != 4 && m != 6)
    fail(ErrorCode::Unrecognized, "rotation subgroup of order " + std::to_string(m));
  std::string name = std::to_string(m);
  if (!reflections.empty()) {
    if (m == 4 || m == 6) {
      name += "ft";
    } else {
      const IntegerMatrix id = IntegerMatrix::identity(2);
      std::set<char> kinds;
      for (const auto& r : reflections) {
        IntVector plus = primitive_column_kernel(r - id);
        char kind;
        if (m == 3) {
          IntegerMatrix d = *rho - id;
          LatticeBasis image(2, {d.column(0), d.column(1)});
          kind = image.contains(plus) ? 't' : 'f';
        } else {
          IntVector minus = primitive_column_kernel(r + id);
          IntegerMatrix b(2, 2);
          b(0, 0) = plus[0];
          b(1, 0) = plus[1];
          b(0, 1) = minus[0];
          b(1, 1) = minus[1];
          Integer det = abs(determinant(b));
          if (det == 1)
            kind = 'f';
          else if (det == 2)
            kind = 't';
          else
            fail(ErrorCode::Unrecognized, "reflection " + r.to_string() + " has eigenbasis index " + det.get_str());
        }
        kinds.insert(kind);
      }
      if (kinds.size() != 1)
        fail(ErrorCode::Unrecognized, "reflections of one group disagree on the f/t type");
      name += *kinds.begin();
    }
  }
  for (auto& e : catalog_n2().entries)
    if (e.name == name)
      return {name, std::move(e.group)};
  fail(ErrorCode::Unrecognized, "no class named " + name);
}

std::vector<NamedPolytope> table1_polytopes() {
  auto make = [](std::vector<std::pair<long, long>> normals, CompactnessMode mode) {
    std::vector<Facet> fs;
    for (auto [a, b] : normals)
      fs.push_back({IntVector{a, b}, Rational(1)});
    return DelzantPolytope(2, std::move(fs), mode);
  };
  const auto C = CompactnessMode::Compact;
  const auto V = CompactnessMode::VertexRequired;
  return {
      {"CP2", make({{1, 0}, {0, 1}, {-1, -1}}, C)},
      {"CP1xCP1", make({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, C)},
      {"Bl1CP2", make({{0, 1}, {-1, -1}, {1, 0}, {1, 1}}, C)},
      {"Bl2CP2", make({{0, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, 0}}, C)},
      {"Bl3CP2", make({{1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, 0}}, C)},
      {"CxCP1", make({{0, -1}, {1, 0}, {0, 1}}, V)},
      {"C2", make({{1, 0}, {0, 1}}, V)},
  };
}

std::string toric_class_n2(const DelzantPolytope& p) {
  if (p.dim() != 2)
    fail(ErrorCode::DimensionMismatch, "toric surfaces only");
  ValidationReport v = validate_delzant(p);
  if (!v.pass())
    fail(ErrorCode::InvalidInput, std::string("polytope fails the Delzant conditions: ") + v.message);
  ToricFiberData d = toric_fiber_data(monotone_normalize(p));
  return identify_class_n2(induced_matrix_group(d, hamiltonian_monodromy(d))).name;
}

std::vector<ClassificationRow> classify_n2() {
  std::map<std::string, std::vector<std::string>> realized;
  for (const auto& t : table1_polytopes())
    realized[toric_class_n2(t.polytope)].push_back(t.name);
  std::vector<ClassificationRow> rows;
  for (const auto& e : catalog_n2().entries) {
    ClassificationRow r;
    r.name = e.name;
    r.order = e.group.order();
    r.admissibility = admissible_group(e.group);
    if (!r.admissibility.admissible) {
      r.tag = "IMPOSSIBLE";
      r.reason = "moves a forced critical point";
    } else if (realized.count(e.name)) {
      r.tag = "TORIC_REALIZED";
      r.realized_by = realized[e.name];
    } else if (e.group.order() == 3) {
      r.tag = "TORIC_IMPOSSIBLE";
      r.reason = "no product of symmetric groups has order 3";
    } else if (e.group.order() == 2 && e.group.rotation_subgroup().order() == 2) {
      r.tag = "TORIC_IMPOSSIBLE";
      r.reason = "a transposition of two normals reverses orientation";
    } else {
      r.tag = "OPEN";
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

GroupCatalog ingest_catalog(const std::string& text) {
  ParsedCatalog pc = parse_catalog(text);
  GroupCatalog c;
  c.qclass = pc.kind == "qclass";
  if (c.qclass)
    c.warnings.push_back("catalog declares rational classes; fixed-point counts need integral representatives");
  std::set<std::string> names;
  for (const auto& g : pc.groups) {
    if (!names.insert(g.name).second)
      fail(ErrorCode::ParseError, "line " + std::to_string(g.line) + ": duplicate group name " + g.name);
    if (c.dim == 0)
      c.dim = g.dim;
    else if (c.dim != g.dim)
      fail(ErrorCode::DimensionMismatch, "line " + std::to_string(g.line) + ": group " + g.name + " has dimension " +
                                             std::to_string(g.dim) + " but the catalog has " + std::to_string(c.dim));
    try {
      c.entries.push_back({g.name, MatrixGroup::generate(g.dim, g.generators)});
    } catch (const Error& e) {
      fail(e.code(), "group " + g.name + ": " + e.message());
    }
  }
  return c;
}

std::optional<SymmetricEmbedding> embed_symmetric_product(const MatrixGroup& g, const std::vector<std::size_t>& parts,
                                                          std::size_t max_order) {
  if (g.order() > max_order)
    fail(ErrorCode::TooLarge, "group of order " + std::to_string(g.order()) + " exceeds the embedding bound " +
                                  std::to_string(max_order));
  std::size_t bound = 1;
  for (std::size_t b : parts)
    bound *= factorial(b);
  if (bound % g.order() != 0)
    return std::nullopt;
  GroupTable t = group_table(g);
  PermutationGroup target = symmetric_product(parts);
  EmbeddingSearch s(t, target, parts);
  auto images = s.run();
  if (!images)
    return std::nullopt;
  std::vector<std::size_t> pos = table_element_indices(g);
  SymmetricEmbedding e;
  e.parts = parts;
  e.images = *images;
  for (int gi : t.generators)
    e.generators.push_back(g.elements()[pos[static_cast<std::size_t>(gi)]]);
  if (!verify_embedding(g, e))
    fail(ErrorCode::Unrecognized, "embedding witness failed verification");
  return e;
}

bool verify_embedding(const MatrixGroup& g, const SymmetricEmbedding& e) {
  if (e.generators.size() != e.images.size())
    return false;
  const std::size_t degree = std::accumulate(e.parts.begin(), e.parts.end(), std::size_t{0});
  std::vector<std::size_t> block(degree);
  std::size_t start = 0;
  for (std::size_t b = 0; b < e.parts.size(); ++b)
    for (std::size_t i = 0; i < e.parts[b]; ++i)
      block[start++] = b;
  for (const auto& p : e.images) {
    if (p.size() != degree || !is_permutation(p))
      return false;
    for (std::size_t i = 0; i < degree; ++i)
      if (block[static_cast<std::size_t>(p[i])] != block[i])
        return false;
  }
  // Extend along words in the generators, then test every product.
  std::map<IntegerMatrix, Permutation> phi;
  std::vector<IntegerMatrix> queue{IntegerMatrix::identity(g.dim())};
  phi[queue[0]] = identity_permutation(degree);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const IntegerMatrix a = queue[qi];
    for (std::size_t j = 0; j < e.generators.size(); ++j) {
      IntegerMatrix b = a * e.generators[j];
      if (!phi.count(b)) {
        phi[b] = compose(phi[a], e.images[j]);
        queue.push_back(b);
      }
    }
  }
  if (phi.size() != g.order())
    return false;
  std::set<Permutation> images;
  for (const auto& [m, p] : phi)
    images.insert(p);
  if (images.size() != phi.size())
    return false;
  for (const auto& [a, pa] : phi)
    for (const auto& [b, pb] : phi) {
      auto it = phi.find(a * b);
      if (it == phi.end() || it->second != compose(pa, pb))
        return false;
    }
  return true;
}

bool gl_order_feasible(std::size_t m, std::size_t k) {
  if (m == 0 || k == 0)
    fail(ErrorCode::InvalidInput, "order and dimension must be positive");
  std::vector<std::size_t> divs;
  for (std::size_t d = 1; d <= m; ++d)
    if (m % d == 0)
      divs.push_back(d);
  // best[l]: least total cyclotomic degree of a block sum of order l.
  std::map<std::size_t, std::size_t> best{{1, 0}};
  for (std::size_t d : divs) {
    if (d == 1)
      continue;
    auto next = best;
    for (const auto& [l, cost] : best) {
      std::size_t ll = std::lcm(l, d);
      std::size_t c = cost + euler_phi(d);
      auto it = next.find(ll);
      if (it == next.end() || it->second > c)
        next[ll] = c;
    }
    best = std::move(next);
  }
  auto it = best.find(m);
  return it != best.end() && it->second <= k;
}

std::vector<std::vector<std::size_t>> symmetric_partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t left, std::size_t maxpart) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t p = std::min(maxpart, left + 1); p >= 2; --p) {
      cur.push_back(p);
      self(self, left - (p - 1), p);
      cur.pop_back();
    }
  };
  rec(rec, n, n + 1);
  return out;
}

const char* conjecture_status_name(ConjectureStatus s) {
  switch (s) {
    case ConjectureStatus::RuledOut: return "RULED_OUT";
    case ConjectureStatus::Case1Necessary: return "CASE1_NECESSARY";
    case ConjectureStatus::Case2: return "CASE2";
    case ConjectureStatus::Both: return "BOTH";
    case ConjectureStatus::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::vector<ConjectureVerdict> conjecture_filter(const GroupCatalog& c) {
  std::vector<ConjectureVerdict> out;
  for (const auto& entry : c.entries) {
    const MatrixGroup& g = entry.group;
    const std::size_t n = g.dim();
    ConjectureVerdict v;
    v.name = entry.name;
    v.order = g.order();
    v.admissibility = admissible_group(g);
    GroupTable t = group_table(g);
    std::set<std::size_t> orders(t.element_order.begin(), t.element_order.end());
    v.element_orders.assign(orders.begin(), orders.end());
    if (!v.admissibility.admissible) {
      v.status = ConjectureStatus::RuledOut;
      out.push_back(std::move(v));
      continue;
    }
    for (const auto& parts : symmetric_partitions(n)) {
      try {
        v.embedding = embed_symmetric_product(g, parts);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::TooLarge)
          throw;
        v.notes.push_back(std::string("embedding search abandoned: ") + e.what());
      }
      if (v.embedding)
        break;
    }
    const std::size_t k = n - 1;
    if (k == 0) {
      v.case1 = g.order() == 1;
    } else if (k == 1) {
      v.case1 = g.order() <= 2;
    } else if (k == 2) {
      try {
        v.case1 = embeds_abstractly(t, dihedral(4)) || embeds_abstractly(t, dihedral(6));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::TooLarge)
          throw;
        v.notes.push_back(std::string("dihedral embedding search abandoned: ") + e.what());
      }
    } else {
      v.case1 = std::all_of(v.element_orders.begin(), v.element_orders.end(),
                            [&](std::size_t m) { return gl_order_feasible(m, k); });
    }
    if (v.case1 && v.embedding)
      v.status = ConjectureStatus::Both;
    else if (v.embedding)
      v.status = ConjectureStatus::Case2;
    else if (v.case1)
      v.status = ConjectureStatus::Case1Necessary;
    else
      v.status = ConjectureStatus::Unknown;
    if (c.qclass)
      v.notes.push_back("rational-class representative: verdict depends on the integral form");
    out.push_back(std::move(v));
  }
  return out;
}

} // namespace lagmon
