#pragma once

// Finite subgroups of GL(2,Z) up to conjugacy, the admissibility verdicts and
// toric realisations for each class, and the filter for higher-dimensional
// catalogues against the two cases of the conjecture.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lagmon/groups.hpp"
#include "lagmon/intlat.hpp"
#include "lagmon/toric.hpp"
#include "lagmon/torussym.hpp"

namespace lagmon {

struct ClassLabel2D {
  std::string name;  // 1, 1f, 1t, 2, 2f, 2t, 3, 3f, 3t, 4, 4ft, 6, 6ft
  MatrixGroup representative;
};

struct CatalogEntry {
  std::string name;
  MatrixGroup group;
};

struct GroupCatalog {
  std::size_t dim = 0;
  std::vector<CatalogEntry> entries;
  bool qclass = false;  // declared as rational classes; fixed-point counts need integral ones
  std::vector<std::string> warnings;
};

GroupCatalog catalog_n2();

ClassLabel2D identify_class_n2(const MatrixGroup& g);

struct NamedPolytope {
  std::string name;
  DelzantPolytope polytope;
};

// The toric surfaces of the realisation table.
std::vector<NamedPolytope> table1_polytopes();

// Class of the induced action of the pointwise monodromy of a monotone polytope.
std::string toric_class_n2(const DelzantPolytope& p);

struct ClassificationRow {
  std::string name;
  std::size_t order = 0;
  AdmissibilityReport admissibility;
  std::string tag;  // IMPOSSIBLE, TORIC_REALIZED, TORIC_IMPOSSIBLE
  std::vector<std::string> realized_by;
  std::string reason;
};

std::vector<ClassificationRow> classify_n2();

// Parses the catalogue text format, closes and validates every group.
GroupCatalog ingest_catalog(const std::string& text);

// Generator images in the product of symmetric groups on consecutive blocks
// of sizes parts[0], parts[1], ... of {0, ..., sum - 1}.
struct SymmetricEmbedding {
  std::vector<std::size_t> parts;
  std::vector<IntegerMatrix> generators;
  std::vector<Permutation> images;
};

// Exhaustive search for an injective homomorphism; TOO_LARGE above max_order
// elements or when the search exceeds its node budget.
std::optional<SymmetricEmbedding> embed_symmetric_product(const MatrixGroup& g, const std::vector<std::size_t>& parts,
                                                          std::size_t max_order = 2000);
// Independent check of a witness on the full multiplication table.
bool verify_embedding(const MatrixGroup& g, const SymmetricEmbedding& e);

// Some element of GL(k,Z) has order exactly m.
bool gl_order_feasible(std::size_t m, std::size_t k);

// Partitions with parts >= 2 and sum of (part - 1) equal to n, in descending
// lexicographic order.
std::vector<std::vector<std::size_t>> symmetric_partitions(std::size_t n);

enum class ConjectureStatus { RuledOut, Case1Necessary, Case2, Both, Unknown };

const char* conjecture_status_name(ConjectureStatus s);

struct ConjectureVerdict {
  std::string name;
  std::size_t order = 0;
  ConjectureStatus status = ConjectureStatus::Unknown;
  AdmissibilityReport admissibility;
  std::optional<SymmetricEmbedding> embedding;
  bool case1 = false;
  std::vector<std::size_t> element_orders;  // distinct, ascending
  std::vector<std::string> notes;
};

std::vector<ConjectureVerdict> conjecture_filter(const GroupCatalog& c);

} // namespace lagmon
