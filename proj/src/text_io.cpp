#include "lagmon/text_io.hpp"

#include <fstream>
#include <sstream>

#include "lagmon/error.hpp"

namespace lagmon {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::istringstream ls(raw);
    Line l{number, {}};
    for (std::string t; ls >> t;)
      l.tokens.push_back(t);
    if (!l.tokens.empty())
      out.push_back(std::move(l));
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& msg) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

Integer integer_at(const Line& l, std::size_t i) {
  try {
    return parse_integer(l.tokens[i]);
  } catch (const Error&) {
    parse_fail(l.number, "expected an integer, found '" + l.tokens[i] + "'");
  }
}

std::size_t dimension_at(const Line& l) {
  if (l.tokens.size() != 2 || l.tokens[0] != "dim")
    parse_fail(l.number, "expected 'dim <n>'");
  Integer n = integer_at(l, 1);
  if (n < 1 || n > 64)
    parse_fail(l.number, "dimension " + n.get_str() + " out of range");
  return n.get_ui();
}

// Reads gen blocks starting at lines[i] until a line that is not part of one.
std::vector<IntegerMatrix> read_generators(const std::vector<Line>& lines, std::size_t& i, std::size_t dim) {
  std::vector<IntegerMatrix> gens;
  while (i < lines.size() && lines[i].tokens[0] == "gen") {
    if (lines[i].tokens.size() != 1)
      parse_fail(lines[i].number, "'gen' takes no arguments");
    const std::size_t start = lines[i].number;
    ++i;
    IntegerMatrix m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r, ++i) {
      if (i >= lines.size())
        parse_fail(start, "generator has fewer than " + std::to_string(dim) + " rows");
      const Line& l = lines[i];
      if (l.tokens.size() != dim)
        parse_fail(l.number, "expected " + std::to_string(dim) + " entries, found " + std::to_string(l.tokens.size()));
      for (std::size_t c = 0; c < dim; ++c)
        m(r, c) = integer_at(l, c);
    }
    gens.push_back(std::move(m));
  }
  return gens;
}

} // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    fail(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Integer parse_integer(const std::string& token) {
  Integer x;
  if (token.empty() || x.set_str(token, 10) != 0)
    fail(ErrorCode::ParseError, "not an integer: '" + token + "'");
  return x;
}

Rational parse_rational(const std::string& token) {
  auto slash = token.find('/');
  if (slash == std::string::npos)
    return Rational(parse_integer(token));
  Integer num = parse_integer(token.substr(0, slash));
  Integer den = parse_integer(token.substr(slash + 1));
  if (den == 0)
    fail(ErrorCode::ParseError, "zero denominator in '" + token + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

DelzantPolytope parse_polytope(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty())
    fail(ErrorCode::ParseError, "empty polytope file");
  const std::size_t dim = dimension_at(lines[0]);
  CompactnessMode mode = CompactnessMode::Compact;
  std::vector<Facet> facets;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens[0] == "mode") {
      if (l.tokens.size() != 2 || (l.tokens[1] != "compact" && l.tokens[1] != "vertex"))
        parse_fail(l.number, "expected 'mode compact' or 'mode vertex'");
      if (!facets.empty())
        parse_fail(l.number, "mode must precede the facets");
      mode = l.tokens[1] == "compact" ? CompactnessMode::Compact : CompactnessMode::VertexRequired;
    } else if (l.tokens[0] == "facet") {
      if (l.tokens.size() != dim + 2)
        parse_fail(l.number, "facet needs " + std::to_string(dim) + " normal entries and an offset");
      Facet f;
      for (std::size_t c = 0; c < dim; ++c)
        f.normal.push_back(integer_at(l, c + 1));
      try {
        f.offset = parse_rational(l.tokens[dim + 1]);
      } catch (const Error&) {
        parse_fail(l.number, "bad offset '" + l.tokens[dim + 1] + "'");
      }
      facets.push_back(std::move(f));
    } else {
      parse_fail(l.number, "unknown keyword '" + l.tokens[0] + "'");
    }
  }
  try {
    return DelzantPolytope(dim, std::move(facets), mode);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvalidInput || e.code() == ErrorCode::DimensionMismatch)
      fail(ErrorCode::ParseError, e.message());
    throw;
  }
}

ParsedGroup parse_group(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty())
    fail(ErrorCode::ParseError, "empty group file");
  ParsedGroup g;
  g.line = lines[0].number;
  g.dim = dimension_at(lines[0]);
  std::size_t i = 1;
  g.generators = read_generators(lines, i, g.dim);
  if (i < lines.size())
    parse_fail(lines[i].number, "unexpected '" + lines[i].tokens[0] + "'");
  return g;
}

ParsedCatalog parse_catalog(const std::string& text) {
  auto lines = tokenize(text);
  ParsedCatalog c;
  std::size_t i = 0;
  if (i < lines.size() && lines[i].tokens[0] == "kind") {
    const Line& l = lines[i];
    if (l.tokens.size() != 2 || (l.tokens[1] != "zclass" && l.tokens[1] != "qclass"))
      parse_fail(l.number, "expected 'kind zclass' or 'kind qclass'");
    c.kind = l.tokens[1];
    ++i;
  }
  while (i < lines.size()) {
    const Line& head = lines[i];
    if (head.tokens[0] != "group" || head.tokens.size() != 2)
      parse_fail(head.number, "expected 'group <name>'");
    ParsedGroup g;
    g.name = head.tokens[1];
    g.line = head.number;
    if (++i >= lines.size())
      parse_fail(head.number, "group " + g.name + " has no dimension");
    g.dim = dimension_at(lines[i]);
    ++i;
    g.generators = read_generators(lines, i, g.dim);
    c.groups.push_back(std::move(g));
  }
  return c;
}

LaurentPolynomial parse_laurent(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty())
    fail(ErrorCode::ParseError, "empty polynomial file");
  const std::size_t dim = dimension_at(lines[0]);
  LaurentPolynomial w(dim);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    if (l.tokens[0] != "term")
      parse_fail(l.number, "unknown keyword '" + l.tokens[0] + "'");
    if (l.tokens.size() != dim + 2)
      parse_fail(l.number, "term needs a coefficient and " + std::to_string(dim) + " exponents");
    Integer c = integer_at(l, 1);
    Exponent e(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      Integer x = integer_at(l, k + 2);
      if (!x.fits_slong_p())
        parse_fail(l.number, "exponent out of range");
      e[k] = x.get_si();
    }
    w.add_term(e, c);
  }
  return w;
}

TorsionPoint parse_point(const std::string& text) {
  std::string s = text;
  if (!s.empty() && s.front() == '(')
    s.erase(0, 1);
  if (!s.empty() && s.back() == ')')
    s.pop_back();
  RatVector coords;
  std::istringstream in(s);
  for (std::string part; std::getline(in, part, ',');)
    coords.push_back(parse_rational(part));
  if (coords.empty())
    fail(ErrorCode::ParseError, "empty point '" + text + "'");
  return TorsionPoint(std::move(coords));
}

} // namespace lagmon
