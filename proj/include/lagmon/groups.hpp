#pragma once

// Finite groups stored by explicit, sorted element lists: permutation groups
// on {0..N-1} and finite subgroups of GL(n, Z). Both keep a generating set
// alongside the elements; when none is supplied one is picked greedily from
// the sorted element list.

#include <cstddef>
#include <string>
#include <vector>

#include "lagmon/intlat.hpp"

namespace lagmon {

// One-line notation, 0-based: p[i] is the image of i.
using Permutation = std::vector<int>;

Permutation identity_permutation(std::size_t n);
// (a * b)(i) = a(b(i))
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
std::size_t permutation_order(const Permutation& p);
bool is_permutation(const Permutation& p);
// 1-based cycle notation, fixed points omitted; the identity prints as "()".
std::string cycle_notation(const Permutation& p);

class PermutationGroup {
public:
  PermutationGroup() = default;
  // Elements must already form a group; they are sorted and deduplicated.
  PermutationGroup(std::size_t degree, std::vector<Permutation> elements,
                   std::vector<Permutation> generators = {});

  static PermutationGroup generate(std::size_t degree, const std::vector<Permutation>& generators,
                                   std::size_t cap = 1000000);
  static PermutationGroup trivial(std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const PermutationGroup& other) const;

  friend bool operator==(const PermutationGroup& a, const PermutationGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }

private:
  std::size_t degree_ = 0;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
};

class MatrixGroup {
public:
  MatrixGroup() = default;
  // Elements must already form a group; they are sorted and deduplicated.
  MatrixGroup(std::size_t dim, std::vector<IntegerMatrix> elements,
              std::vector<IntegerMatrix> generators = {});

  // Closure of the generators. NON_UNIMODULAR for a generator with |det| != 1,
  // NOT_FINITE when a generator has infinite order or the closure passes the cap.
  static MatrixGroup generate(std::size_t dim, const std::vector<IntegerMatrix>& generators,
                              std::size_t cap = 10000);
  static MatrixGroup trivial(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<IntegerMatrix>& elements() const { return elements_; }
  const std::vector<IntegerMatrix>& generators() const { return generators_; }
  bool contains(const IntegerMatrix& g) const;
  std::size_t index_of(const IntegerMatrix& g) const;  // throws if absent

  // u * g * u^-1 for every element and generator.
  MatrixGroup conjugate_by(const IntegerMatrix& u) const;
  // Orientation-preserving part (det = +1).
  MatrixGroup rotation_subgroup() const;

  friend bool operator==(const MatrixGroup& a, const MatrixGroup& b) {
    return a.dim_ == b.dim_ && a.elements_ == b.elements_;
  }

private:
  std::size_t dim_ = 0;
  std::vector<IntegerMatrix> elements_;
  std::vector<IntegerMatrix> generators_;
};

// Multiplication table of an abstract finite group; index 0 is the identity.
struct GroupTable {
  std::vector<std::vector<int>> mul;  // mul[a][b] = index of a*b
  std::vector<int> inverse;
  std::vector<std::size_t> element_order;
  std::vector<int> generators;

  std::size_t order() const { return mul.size(); }
};

// Rows follow the group's element order, rotated so that the identity is 0.
GroupTable group_table(const MatrixGroup& g);
GroupTable group_table(const PermutationGroup& g);
// Index i of the table corresponds to this element of g.
std::vector<std::size_t> table_element_indices(const MatrixGroup& g);

} // namespace lagmon
