#include "lagmon/monodromy.hpp"

#include "lagmon/error.hpp"

namespace lagmon {

namespace {

// Orthogonal projection onto K (x) Q as an N x N rational matrix. Two
// saturated lattices coincide iff their projections do.
RatMatrix projection_matrix(const LatticeBasis& k) {
  const std::size_t N = k.ambient_rank(), r = k.rank();
  RatMatrix pi(N, RatVector(N, Rational(0)));
  if (r == 0)
    return pi;
  const IntegerMatrix& b = k.basis();
  RatMatrix gram(r, RatVector(r, Rational(0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t t = 0; t < N; ++t)
        gram[i][j] += Rational(b(i, t) * b(j, t));
  // c = gram^-1 b, column by column
  RatMatrix c(r, RatVector(N));
  for (std::size_t t = 0; t < N; ++t) {
    RatVector col(r);
    for (std::size_t i = 0; i < r; ++i)
      col[i] = b(i, t);
    RatVector x = *solve_rational(gram, col, r);
    for (std::size_t i = 0; i < r; ++i)
      c[i][t] = x[i];
  }
  for (std::size_t s = 0; s < N; ++s)
    for (std::size_t t = 0; t < N; ++t)
      for (std::size_t i = 0; i < r; ++i)
        pi[s][t] += Rational(b(i, s)) * c[i][t];
  return pi;
}

Permutation block_cycle(std::size_t degree, const std::vector<std::size_t>& block, std::size_t len) {
  Permutation p = identity_permutation(degree);
  for (std::size_t i = 0; i < len; ++i)
    p[block[i]] = static_cast<int>(block[(i + 1) % len]);
  return p;
}

} // namespace

NormalPartition coefficient_partition(const LatticeBasis& k) {
  NormalPartition p;
  const std::size_t N = k.ambient_rank();
  std::vector<bool> placed(N, false);
  for (std::size_t i = 0; i < N; ++i) {
    if (placed[i])
      continue;
    std::vector<std::size_t> block{i};
    placed[i] = true;
    IntVector ci = k.basis().column(i);
    for (std::size_t j = i + 1; j < N; ++j)
      if (!placed[j] && k.basis().column(j) == ci) {
        block.push_back(j);
        placed[j] = true;
      }
    p.blocks.push_back(std::move(block));
  }
  return p;
}

IntVector permute_vector(const Permutation& sigma, const IntVector& a) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[static_cast<std::size_t>(sigma[i])] = a[i];
  return out;
}

LatticeBasis permute_lattice(const Permutation& sigma, const LatticeBasis& k) {
  std::vector<IntVector> gens;
  for (std::size_t i = 0; i < k.rank(); ++i)
    gens.push_back(permute_vector(sigma, k.vector(i)));
  return LatticeBasis(k.ambient_rank(), gens);
}

PermutationGroup hamiltonian_monodromy(const ToricFiberData& d) {
  const std::size_t N = d.relations.ambient_rank();
  std::vector<Permutation> gens;
  for (const auto& block : coefficient_partition(d.relations).blocks) {
    if (block.size() < 2)
      continue;
    gens.push_back(block_cycle(N, block, 2));
    if (block.size() > 2)
      gens.push_back(block_cycle(N, block, block.size()));
  }
  return PermutationGroup::generate(N, gens);
}

PermutationGroup symplectic_monodromy(const ToricFiberData& d, const SearchLimits& limits) {
  const std::size_t N = d.relations.ambient_rank();
  if (N > limits.max_degree)
    fail(ErrorCode::SearchTooLarge, std::to_string(N) + " facets exceed the setwise search bound of " +
                                        std::to_string(limits.max_degree));
  const RatMatrix pi = projection_matrix(d.relations);
  std::vector<Permutation> found;
  Permutation sigma(N, -1);
  std::vector<bool> used(N, false);

  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == N) {
      if (!lattice_equal(permute_lattice(sigma, d.relations), d.relations))
        fail(ErrorCode::Unrecognized, "setwise search accepted " + cycle_notation(sigma) + " wrongly");
      found.push_back(sigma);
      if (found.size() > limits.max_order)
        fail(ErrorCode::SearchTooLarge, "setwise stabiliser exceeds " + std::to_string(limits.max_order) +
                                            " elements");
      return;
    }
    for (std::size_t t = 0; t < N; ++t) {
      if (used[t] || pi[t][t] != pi[i][i])
        continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = pi[static_cast<std::size_t>(sigma[j])][t] == pi[j][i];
      if (!ok)
        continue;
      sigma[i] = static_cast<int>(t);
      used[t] = true;
      self(self, i + 1);
      used[t] = false;
    }
    sigma[i] = -1;
  };
  recurse(recurse, 0);
  return PermutationGroup(N, std::move(found));
}

IntegerMatrix induced_matrix(const ToricFiberData& d, const Permutation& sigma) {
  const IntegerMatrix a = d.polytope.normal_matrix();
  const std::size_t N = a.rows(), n = a.cols();
  if (sigma.size() != N)
    fail(ErrorCode::InconsistentPermutation, "permutation degree differs from the number of facets");
  // Rows of M^T solve a M^T = a_sigma, one column of M^T at a time.
  RatMatrix ra = to_rational(a);
  IntegerMatrix m(n, n);
  for (std::size_t row = 0; row < n; ++row) {
    RatVector rhs(N);
    for (std::size_t j = 0; j < N; ++j)
      rhs[j] = a(static_cast<std::size_t>(sigma[j]), row);
    auto x = solve_rational(ra, rhs, n);
    if (!x)
      fail(ErrorCode::InconsistentPermutation, cycle_notation(sigma) + " is not induced by a linear map");
    for (std::size_t i = 0; i < n; ++i) {
      if ((*x)[i].get_den() != 1)
        fail(ErrorCode::InconsistentPermutation, cycle_notation(sigma) + " induces a non-integral map");
      m(row, i) = (*x)[i].get_num();
    }
  }
  Integer det = determinant(m);
  if (det != 1 && det != -1)
    fail(ErrorCode::InconsistentPermutation, cycle_notation(sigma) + " induces a non-unimodular map");
  return m;
}

MatrixGroup induced_matrix_group(const ToricFiberData& d, const PermutationGroup& g) {
  std::vector<IntegerMatrix> elems, gens;
  for (const auto& s : g.elements())
    elems.push_back(induced_matrix(d, s));
  for (const auto& s : g.generators())
    gens.push_back(induced_matrix(d, s));
  return MatrixGroup(d.polytope.dim(), std::move(elems), std::move(gens));
}

bool partition_bound_check(const NormalPartition& p, std::size_t n) {
  std::size_t sum = 0;
  for (const auto& b : p.blocks)
    sum += b.size() - 1;
  return sum <= n;
}

} // namespace lagmon
