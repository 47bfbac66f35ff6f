#include "lagmon/toric.hpp"

#include <map>
#include <set>

#include "lagmon/error.hpp"

namespace lagmon {

namespace {

Rational pairing(const RatVector& x, const IntVector& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += x[i] * Rational(v[i]);
  return s;
}

std::string vector_string(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

// Calls f on every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i)
    idx[i] = i;
  if (k > n)
    return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1)
      --i;
    if (i == 0)
      return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j)
      idx[j] = idx[j - 1] + 1;
  }
}

} // namespace

DelzantPolytope::DelzantPolytope(std::size_t dim, std::vector<Facet> facets, CompactnessMode mode)
    : dim_(dim), facets_(std::move(facets)), mode_(mode) {
  if (dim_ == 0)
    fail(ErrorCode::InvalidInput, "polytope dimension must be positive");
  if (facets_.size() < dim_)
    fail(ErrorCode::InvalidInput, std::to_string(facets_.size()) + " facets cannot bound a polytope of dimension " +
                                      std::to_string(dim_));
  std::set<IntVector> seen;
  for (std::size_t j = 0; j < facets_.size(); ++j) {
    auto& f = facets_[j];
    f.offset.canonicalize();
    if (f.normal.size() != dim_)
      fail(ErrorCode::DimensionMismatch, "facet " + std::to_string(j + 1) + " normal has " +
                                             std::to_string(f.normal.size()) + " entries");
    if (content(f.normal) != 1)
      fail(ErrorCode::InvalidInput, "facet " + std::to_string(j + 1) + " normal is not primitive");
    if (!seen.insert(f.normal).second)
      fail(ErrorCode::InvalidInput, "facet " + std::to_string(j + 1) + " repeats an earlier normal");
  }
}

IntegerMatrix DelzantPolytope::normal_matrix() const {
  IntegerMatrix m(facets_.size(), dim_);
  for (std::size_t j = 0; j < facets_.size(); ++j)
    for (std::size_t i = 0; i < dim_; ++i)
      m(j, i) = facets_[j].normal[i];
  return m;
}

DelzantPolytope DelzantPolytope::translated(const RatVector& t) const {
  // <x - t, nu> >= -lambda  <=>  <x, nu> >= -(lambda - <t, nu>)
  std::vector<Facet> fs = facets_;
  for (auto& f : fs)
    f.offset -= pairing(t, f.normal);
  return DelzantPolytope(dim_, std::move(fs), mode_);
}

const char* delzant_failure_name(DelzantFailure f) {
  switch (f) {
    case DelzantFailure::None: return "PASS";
    case DelzantFailure::NoVertex: return "NO_VERTEX";
    case DelzantFailure::NotSimple: return "NOT_SIMPLE";
    case DelzantFailure::NotSmooth: return "NOT_SMOOTH";
    case DelzantFailure::RedundantFacet: return "REDUNDANT_FACET";
    case DelzantFailure::NotCompact: return "NOT_COMPACT";
  }
  return "UNKNOWN";
}

ValidationReport validate_delzant(const DelzantPolytope& p) {
  ValidationReport r;
  const std::size_t n = p.dim(), N = p.facet_count();
  const auto& fs = p.facets();
  r.unchecked_topology = p.mode() == CompactnessMode::VertexRequired;

  std::map<RatVector, std::vector<std::size_t>> active;
  for_each_subset(N, n, [&](const std::vector<std::size_t>& idx) {
    RatMatrix a;
    RatVector b;
    for (std::size_t j : idx) {
      RatVector row(n);
      for (std::size_t i = 0; i < n; ++i)
        row[i] = fs[j].normal[i];
      a.push_back(std::move(row));
      b.push_back(-fs[j].offset);
    }
    if (rational_rank(a) < n)
      return;
    RatVector x = *solve_rational(a, b, n);
    if (active.count(x))
      return;
    std::vector<std::size_t> on;
    for (std::size_t j = 0; j < N; ++j) {
      Rational s = pairing(x, fs[j].normal) + fs[j].offset;
      if (s < 0)
        return;
      if (s == 0)
        on.push_back(j);
    }
    active.emplace(std::move(x), std::move(on));
  });
  for (const auto& [x, on] : active)
    r.vertices.push_back(x);

  auto failing = [&](DelzantFailure f, std::string msg) {
    r.failure = f;
    r.message = std::move(msg);
    return r;
  };

  if (active.empty())
    return failing(DelzantFailure::NoVertex, "no vertex: the polyhedron is empty or contains a line");

  for (const auto& [x, on] : active)
    if (on.size() != n) {
      r.witness_vertex = x;
      r.witness_facets = on;
      return failing(DelzantFailure::NotSimple, "vertex " + vector_string(x) + " lies on " +
                                                    std::to_string(on.size()) + " facets");
    }

  for (const auto& [x, on] : active) {
    IntegerMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        m(k, i) = fs[on[k]].normal[i];
    Integer det = determinant(m);
    if (det != 1 && det != -1) {
      r.witness_vertex = x;
      r.witness_facets = on;
      r.witness_determinant = det;
      return failing(DelzantFailure::NotSmooth, "normals at vertex " + vector_string(x) + " have determinant " +
                                                    det.get_str());
    }
  }

  std::vector<bool> touched(N, false);
  for (const auto& [x, on] : active)
    for (std::size_t j : on)
      touched[j] = true;
  for (std::size_t j = 0; j < N; ++j)
    if (!touched[j]) {
      r.witness_facets = {j};
      return failing(DelzantFailure::RedundantFacet, "facet " + std::to_string(j + 1) + " contains no vertex");
    }

  if (p.mode() == CompactnessMode::Compact) {
    // Each edge leaving a vertex along a direction d with <d, nu_k> = delta must hit another facet.
    for (const auto& [x, on] : active) {
      RatMatrix a;
      for (std::size_t j : on) {
        RatVector row(n);
        for (std::size_t i = 0; i < n; ++i)
          row[i] = fs[j].normal[i];
        a.push_back(std::move(row));
      }
      for (std::size_t k = 0; k < n; ++k) {
        RatVector e(n, Rational(0));
        e[k] = 1;
        RatVector d = *solve_rational(a, e, n);
        bool bounded = false;
        for (std::size_t j = 0; j < N && !bounded; ++j)
          bounded = pairing(d, fs[j].normal) < 0;
        if (!bounded) {
          r.witness_vertex = x;
          r.witness_facets = on;
          return failing(DelzantFailure::NotCompact, "unbounded edge " + vector_string(d) + " at vertex " +
                                                         vector_string(x));
        }
      }
    }
  }
  r.message = "PASS";
  return r;
}

DelzantPolytope monotone_normalize(const DelzantPolytope& p) {
  const std::size_t n = p.dim(), N = p.facet_count();
  // Unknowns (q_1..q_n, c) with <q, nu_j> - c = -lambda_j.
  RatMatrix a;
  RatVector b;
  for (const auto& f : p.facets()) {
    RatVector row(n + 1);
    for (std::size_t i = 0; i < n; ++i)
      row[i] = f.normal[i];
    row[n] = -1;
    a.push_back(std::move(row));
    b.push_back(-f.offset);
  }
  bool c_free = false;
  for (const auto& k : rational_kernel(a, n + 1))
    if (k[n] != 0)
      c_free = true;
  if (c_free) {
    RatVector row(n + 1, Rational(0));
    row[n] = 1;
    a.push_back(std::move(row));
    b.push_back(1);
  }
  auto sol = solve_rational(a, b, n + 1);
  if (!sol)
    fail(ErrorCode::NotMonotone, "no point has equal lattice distance to all " + std::to_string(N) + " facets");
  if ((*sol)[n] <= 0)
    fail(ErrorCode::NotMonotone, "the equidistant point lies outside the polytope");
  RatVector q(sol->begin(), sol->begin() + static_cast<long>(n));
  for (auto& x : q)
    x = -x;
  return p.translated(q);
}

ToricFiberData toric_fiber_data(const DelzantPolytope& p) {
  ToricFiberData d;
  d.polytope = p;
  d.relations = kernel_lattice(p.normal_matrix());
  d.superpotential = LaurentPolynomial(p.dim());
  for (const auto& f : p.facets()) {
    Exponent e(p.dim());
    for (std::size_t i = 0; i < p.dim(); ++i)
      e[i] = f.normal[i].get_si();
    d.superpotential.add_term(e, 1);
  }
  return d;
}

} // namespace lagmon
