#pragma once

// Polytopes {x : <x, nu_j> >= -lambda_j}, the Delzant conditions, the
// monotone fibre and its toric data (relation lattice and superpotential).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lagmon/intlat.hpp"
#include "lagmon/laurent.hpp"

namespace lagmon {

enum class CompactnessMode { Compact, VertexRequired };

struct Facet {
  IntVector normal;
  Rational offset;
};

class DelzantPolytope {
public:
  DelzantPolytope() = default;
  // Rejects non-primitive or repeated normals and fewer than n facets.
  DelzantPolytope(std::size_t dim, std::vector<Facet> facets, CompactnessMode mode = CompactnessMode::Compact);

  std::size_t dim() const { return dim_; }
  std::size_t facet_count() const { return facets_.size(); }
  const std::vector<Facet>& facets() const { return facets_; }
  CompactnessMode mode() const { return mode_; }

  // N x n matrix whose rows are the normals.
  IntegerMatrix normal_matrix() const;
  // Translation x -> x + t.
  DelzantPolytope translated(const RatVector& t) const;

private:
  std::size_t dim_ = 0;
  std::vector<Facet> facets_;
  CompactnessMode mode_ = CompactnessMode::Compact;
};

enum class DelzantFailure { None, NoVertex, NotSimple, NotSmooth, RedundantFacet, NotCompact };

const char* delzant_failure_name(DelzantFailure f);

struct ValidationReport {
  DelzantFailure failure = DelzantFailure::None;
  std::vector<RatVector> vertices;
  std::optional<RatVector> witness_vertex;
  std::vector<std::size_t> witness_facets;  // 0-based
  std::optional<Integer> witness_determinant;
  bool unchecked_topology = false;  // vertex mode cannot see H_1 of the ambient manifold
  std::string message;

  bool pass() const { return failure == DelzantFailure::None; }
};

ValidationReport validate_delzant(const DelzantPolytope& p);

// Moves the point with equal facet distances to the origin; NOT_MONOTONE
// when there is none or it lies outside. A free common distance is set to 1.
DelzantPolytope monotone_normalize(const DelzantPolytope& p);

struct ToricFiberData {
  DelzantPolytope polytope;
  LatticeBasis relations;
  LaurentPolynomial superpotential;
};

ToricFiberData toric_fiber_data(const DelzantPolytope& p);

} // namespace lagmon
