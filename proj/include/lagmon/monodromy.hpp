#pragma once

// Monodromy of toric fibres: permutations of the facet normals fixing the
// relation lattice K pointwise (Hamiltonian) or setwise (symplectic), and
// their action on H_1 of the fibre.

#include <cstddef>
#include <vector>

#include "lagmon/groups.hpp"
#include "lagmon/intlat.hpp"
#include "lagmon/toric.hpp"

namespace lagmon {

// Blocks of 0-based indices, each sorted, ordered by least element.
struct NormalPartition {
  std::vector<std::vector<std::size_t>> blocks;
};

NormalPartition coefficient_partition(const LatticeBasis& k);

// sigma acts on Z^N by moving coordinate i to position sigma(i).
IntVector permute_vector(const Permutation& sigma, const IntVector& a);
LatticeBasis permute_lattice(const Permutation& sigma, const LatticeBasis& k);

PermutationGroup hamiltonian_monodromy(const ToricFiberData& d);

struct SearchLimits {
  std::size_t max_degree = 12;
  std::size_t max_order = 1000000;
};

PermutationGroup symplectic_monodromy(const ToricFiberData& d, const SearchLimits& limits = {});

// The matrix M with M nu_j = nu_sigma(j) for all j.
IntegerMatrix induced_matrix(const ToricFiberData& d, const Permutation& sigma);
MatrixGroup induced_matrix_group(const ToricFiberData& d, const PermutationGroup& g);

// sum over blocks of (size - 1) <= n
bool partition_bound_check(const NormalPartition& p, std::size_t n);

} // namespace lagmon
