#include "lagmon/groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "lagmon/error.hpp"

namespace lagmon {

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    c[i] = a[static_cast<std::size_t>(b[i])];
  return c;
}

Permutation inverse(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    q[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return q;
}

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int x : p) {
    if (x < 0 || static_cast<std::size_t>(x) >= p.size() || seen[static_cast<std::size_t>(x)])
      return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

std::size_t permutation_order(const Permutation& p) {
  std::size_t order = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

std::string cycle_notation(const Permutation& p) {
  std::ostringstream os;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i))
      continue;
    os << '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      os << (first ? "" : " ") << j + 1;
      first = false;
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

namespace {

template <class T, class Mul>
std::vector<T> closure(const T& identity, const std::vector<T>& gens, Mul mul, std::size_t cap,
                       bool& overflow) {
  std::set<T> seen{identity};
  std::deque<T> queue{identity};
  overflow = false;
  while (!queue.empty()) {
    T x = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gens) {
      T y = mul(x, s);
      if (seen.insert(y).second) {
        if (seen.size() > cap) {
          overflow = true;
          return {};
        }
        queue.push_back(std::move(y));
      }
    }
  }
  return std::vector<T>(seen.begin(), seen.end());
}

// Scans the sorted elements and keeps each one not yet generated.
template <class T, class Mul>
std::vector<T> greedy_generators(const T& identity, const std::vector<T>& sorted, Mul mul) {
  std::vector<T> gens;
  std::set<T> span{identity};
  for (const auto& x : sorted) {
    if (span.count(x))
      continue;
    gens.push_back(x);
    bool overflow = false;
    auto c = closure(identity, gens, mul, sorted.size() + 1, overflow);
    span = std::set<T>(c.begin(), c.end());
  }
  return gens;
}

template <class T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> elements,
                                   std::vector<Permutation> generators)
    : degree_(degree), elements_(std::move(elements)), generators_(std::move(generators)) {
  for (const auto& p : elements_)
    if (p.size() != degree_ || !is_permutation(p))
      fail(ErrorCode::InvalidInput, "permutation of wrong degree in group");
  sort_unique(elements_);
  if (elements_.empty())
    elements_.push_back(identity_permutation(degree_));
  if (generators_.empty())
    generators_ = greedy_generators(identity_permutation(degree_), elements_, compose);
}

PermutationGroup PermutationGroup::generate(std::size_t degree, const std::vector<Permutation>& generators,
                                            std::size_t cap) {
  for (const auto& g : generators)
    if (g.size() != degree || !is_permutation(g))
      fail(ErrorCode::InvalidInput, "generator is not a permutation of degree " + std::to_string(degree));
  bool overflow = false;
  auto elems = closure(identity_permutation(degree), generators, compose, cap, overflow);
  if (overflow)
    fail(ErrorCode::SearchTooLarge, "permutation group exceeds " + std::to_string(cap) + " elements");
  std::vector<Permutation> gens;
  for (const auto& g : generators)
    if (g != identity_permutation(degree))
      gens.push_back(g);
  return PermutationGroup(degree, std::move(elems), std::move(gens));
}

PermutationGroup PermutationGroup::trivial(std::size_t degree) {
  return PermutationGroup(degree, {identity_permutation(degree)});
}

bool PermutationGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

bool PermutationGroup::is_subgroup_of(const PermutationGroup& other) const {
  return degree_ == other.degree_ &&
         std::all_of(elements_.begin(), elements_.end(), [&](const Permutation& p) { return other.contains(p); });
}

MatrixGroup::MatrixGroup(std::size_t dim, std::vector<IntegerMatrix> elements,
                         std::vector<IntegerMatrix> generators)
    : dim_(dim), elements_(std::move(elements)), generators_(std::move(generators)) {
  for (const auto& g : elements_)
    if (g.rows() != dim_ || g.cols() != dim_)
      fail(ErrorCode::DimensionMismatch, "group element of wrong dimension");
  sort_unique(elements_);
  if (elements_.empty())
    elements_.push_back(IntegerMatrix::identity(dim_));
  auto mul = [](const IntegerMatrix& a, const IntegerMatrix& b) { return a * b; };
  if (generators_.empty())
    generators_ = greedy_generators(IntegerMatrix::identity(dim_), elements_, mul);
}

MatrixGroup MatrixGroup::generate(std::size_t dim, const std::vector<IntegerMatrix>& generators,
                                  std::size_t cap) {
  const IntegerMatrix id = IntegerMatrix::identity(dim);
  std::vector<IntegerMatrix> gens;
  for (const auto& g : generators) {
    if (g.rows() != dim || g.cols() != dim)
      fail(ErrorCode::DimensionMismatch, "generator is not " + std::to_string(dim) + "x" + std::to_string(dim));
    if (!matrix_order(g))  // throws NON_UNIMODULAR
      fail(ErrorCode::NotFinite, "generator " + g.to_string() + " has infinite order");
    if (g != id)
      gens.push_back(g);
  }
  bool overflow = false;
  auto mul = [](const IntegerMatrix& a, const IntegerMatrix& b) { return a * b; };
  auto elems = closure(id, gens, mul, cap, overflow);
  if (overflow)
    fail(ErrorCode::NotFinite, "group closure exceeds " + std::to_string(cap) + " elements");
  return MatrixGroup(dim, std::move(elems), std::move(gens));
}

MatrixGroup MatrixGroup::trivial(std::size_t dim) {
  return MatrixGroup(dim, {IntegerMatrix::identity(dim)});
}

bool MatrixGroup::contains(const IntegerMatrix& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

std::size_t MatrixGroup::index_of(const IntegerMatrix& g) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || *it != g)
    fail(ErrorCode::InvalidInput, "matrix " + g.to_string() + " is not in the group");
  return static_cast<std::size_t>(it - elements_.begin());
}

MatrixGroup MatrixGroup::conjugate_by(const IntegerMatrix& u) const {
  IntegerMatrix ui = unimodular_inverse(u);
  std::vector<IntegerMatrix> elems, gens;
  for (const auto& g : elements_)
    elems.push_back(u * g * ui);
  for (const auto& g : generators_)
    gens.push_back(u * g * ui);
  return MatrixGroup(dim_, std::move(elems), std::move(gens));
}

MatrixGroup MatrixGroup::rotation_subgroup() const {
  std::vector<IntegerMatrix> elems;
  for (const auto& g : elements_)
    if (determinant(g) == 1)
      elems.push_back(g);
  return MatrixGroup(dim_, std::move(elems));
}

namespace {

template <class T, class Mul>
GroupTable build_table(const std::vector<T>& sorted, const T& identity, const std::vector<T>& gens, Mul mul,
                       std::vector<std::size_t>& order_map) {
  // table index -> position in sorted list, identity first
  order_map.clear();
  std::size_t id_pos = static_cast<std::size_t>(
      std::lower_bound(sorted.begin(), sorted.end(), identity) - sorted.begin());
  order_map.push_back(id_pos);
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (i != id_pos)
      order_map.push_back(i);
  std::vector<int> pos_to_index(sorted.size());
  for (std::size_t k = 0; k < order_map.size(); ++k)
    pos_to_index[order_map[k]] = static_cast<int>(k);
  auto index_of = [&](const T& x) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    if (it == sorted.end() || !(*it == x))
      fail(ErrorCode::InvalidInput, "element list is not closed under multiplication");
    return pos_to_index[static_cast<std::size_t>(it - sorted.begin())];
  };

  const std::size_t n = sorted.size();
  GroupTable t;
  t.mul.assign(n, std::vector<int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t.mul[a][b] = index_of(mul(sorted[order_map[a]], sorted[order_map[b]]));
  t.inverse.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (t.mul[a][b] == 0)
        t.inverse[a] = static_cast<int>(b);
  t.element_order.assign(n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    int x = static_cast<int>(a);
    std::size_t k = 1;
    while (x != 0) {
      x = t.mul[static_cast<std::size_t>(x)][a];
      ++k;
    }
    t.element_order[a] = k;
  }
  for (const auto& g : gens)
    t.generators.push_back(index_of(g));
  return t;
}

} // namespace

GroupTable group_table(const MatrixGroup& g) {
  std::vector<std::size_t> order_map;
  auto mul = [](const IntegerMatrix& a, const IntegerMatrix& b) { return a * b; };
  return build_table(g.elements(), IntegerMatrix::identity(g.dim()), g.generators(), mul, order_map);
}

GroupTable group_table(const PermutationGroup& g) {
  std::vector<std::size_t> order_map;
  return build_table(g.elements(), identity_permutation(g.degree()), g.generators(), compose, order_map);
}

std::vector<std::size_t> table_element_indices(const MatrixGroup& g) {
  std::vector<std::size_t> order_map;
  const auto& sorted = g.elements();
  std::size_t id_pos = g.index_of(IntegerMatrix::identity(g.dim()));
  order_map.push_back(id_pos);
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (i != id_pos)
      order_map.push_back(i);
  return order_map;
}

} // namespace lagmon
