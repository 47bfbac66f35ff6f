#pragma once

// Line-oriented text formats for polytopes, groups, catalogues and Laurent
// polynomials. Tokens are whitespace separated and '#' starts a comment.
// Parse failures raise PARSE_ERROR naming the line.

#include <cstddef>
#include <string>
#include <vector>

#include "lagmon/intlat.hpp"
#include "lagmon/laurent.hpp"
#include "lagmon/toric.hpp"
#include "lagmon/torussym.hpp"

namespace lagmon {

std::string read_text_file(const std::string& path);

// dim n / mode compact|vertex / facet nu_1 .. nu_n lambda
DelzantPolytope parse_polytope(const std::string& text);

struct ParsedGroup {
  std::string name;
  std::size_t dim = 0;
  std::vector<IntegerMatrix> generators;
  std::size_t line = 0;
};

// dim n / gen followed by n rows of n integers, repeated
ParsedGroup parse_group(const std::string& text);

struct ParsedCatalog {
  std::string kind = "zclass";
  std::vector<ParsedGroup> groups;
};

// optional kind zclass|qclass, then blocks group <name> / dim n / gen rows
ParsedCatalog parse_catalog(const std::string& text);

// dim n / term c e_1 .. e_n
LaurentPolynomial parse_laurent(const std::string& text);

// "0,1/2" or "(0,1/2)"
TorsionPoint parse_point(const std::string& text);

Rational parse_rational(const std::string& token);
Integer parse_integer(const std::string& token);

} // namespace lagmon
