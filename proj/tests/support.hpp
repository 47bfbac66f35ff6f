#pragma once

#include <random>
#include <string>

#include "lagmon/intlat.hpp"
#include "lagmon/text_io.hpp"
#include "lagmon/toric.hpp"

namespace lagmon::test {

inline std::string fixture(const std::string& rel) { return std::string(LAGMON_FIXTURE_DIR) + "/" + rel; }

inline DelzantPolytope polytope_fixture(const std::string& name) {
  return parse_polytope(read_text_file(fixture("polytopes/" + name + ".poly")));
}

inline std::mt19937& rng() {
  static std::mt19937 g(20240611);
  return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline IntegerMatrix random_matrix(std::size_t r, std::size_t c, long bound) {
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = uniform(-bound, bound);
  return m;
}

inline DelzantPolytope facets(std::size_t dim, const std::vector<std::vector<long>>& normals, long offset = 1,
                              CompactnessMode mode = CompactnessMode::Compact) {
  std::vector<Facet> fs;
  for (const auto& n : normals) {
    Facet f;
    for (long x : n)
      f.normal.push_back(x);
    f.offset = offset;
    fs.push_back(f);
  }
  return DelzantPolytope(dim, fs, mode);
}

} // namespace lagmon::test
