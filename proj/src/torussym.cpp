#include "lagmon/torussym.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "lagmon/error.hpp"

namespace lagmon {

namespace {

Rational frac(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - Rational(q);
}

constexpr std::size_t kMaxFixedPoints = 1000000;

} // namespace

TorsionPoint::TorsionPoint(RatVector coords) : coords_(std::move(coords)) {
  for (auto& c : coords_) {
    c.canonicalize();
    c = frac(c);
  }
}

std::size_t TorsionPoint::order() const {
  Integer l = 1;
  for (const auto& c : coords_)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l.get_ui();
}

std::string TorsionPoint::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i)
    os << (i ? "," : "") << lagmon::to_string(coords_[i]);
  os << ')';
  return os.str();
}

TorsionPoint apply_monomial(const IntegerMatrix& g, const TorsionPoint& p) {
  if (g.rows() != p.dim() || g.cols() != p.dim())
    fail(ErrorCode::DimensionMismatch, "matrix and torsion point dimensions differ");
  RatVector out(p.dim(), Rational(0));
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = 0; j < p.dim(); ++j)
      out[i] += Rational(g(j, i)) * p[j];
  return TorsionPoint(std::move(out));
}

std::vector<TorsionPoint> torsion_grid(std::size_t dim, std::size_t m) {
  std::vector<TorsionPoint> out;
  std::vector<std::size_t> a(dim, 0);
  while (true) {
    RatVector c(dim);
    for (std::size_t i = 0; i < dim; ++i)
      c[i] = Rational(static_cast<long>(a[i]), static_cast<long>(m));
    out.emplace_back(std::move(c));
    std::size_t i = dim;
    while (i > 0 && ++a[i - 1] == m)
      a[--i] = 0;
    if (i == 0)
      break;
  }
  return out;
}

bool FixedPointSet::contains(const TorsionPoint& p) const {
  if (finite)
    return std::binary_search(points.begin(), points.end(), p);
  fail(ErrorCode::InvalidInput, "membership in an infinite fixed-point set is not supported");
}

FixedPointSet monomial_fixed_points(const std::vector<IntegerMatrix>& gs) {
  FixedPointSet result;
  if (gs.empty())
    fail(ErrorCode::InvalidInput, "fixed points of an empty matrix list");
  const std::size_t n = gs.front().rows();
  IntegerMatrix a(gs.size() * n, n);
  for (std::size_t k = 0; k < gs.size(); ++k) {
    const auto& g = gs[k];
    if (g.rows() != n || g.cols() != n)
      fail(ErrorCode::DimensionMismatch, "matrices of different dimensions");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        a(k * n + i, j) = g(j, i) - (i == j ? 1 : 0);
  }
  SmithForm s = smith_normal_form(a);
  // v = V w with d_i w_i in Z; a zero d_i leaves w_i free.
  std::vector<Integer> divisors(n, Integer(0));
  for (std::size_t i = 0; i < n && i < a.rows(); ++i)
    divisors[i] = s.d(i, i);
  Integer total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (divisors[i] == 0) {
      result.finite = false;
      RatVector dir(n);
      for (std::size_t r = 0; r < n; ++r)
        dir[r] = s.v(r, i);
      result.kernel.push_back(std::move(dir));
      divisors[i] = 1;
    }
    total *= divisors[i];
  }
  if (total > kMaxFixedPoints)
    fail(ErrorCode::TooLarge, "fixed-point set has " + total.get_str() + " points");
  std::set<TorsionPoint> pts;
  std::vector<Integer> w(n, Integer(0));
  while (true) {
    RatVector v(n, Rational(0));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t i = 0; i < n; ++i)
        if (w[i] != 0)
          v[r] += Rational(s.v(r, i) * w[i], divisors[i]);
    pts.insert(TorsionPoint(std::move(v)));
    std::size_t i = n;
    while (i > 0 && ++w[i - 1] == divisors[i - 1])
      w[--i] = 0;
    if (i == 0)
      break;
  }
  result.points.assign(pts.begin(), pts.end());
  return result;
}

FixedPointSet forced_critical_points(const MatrixGroup& g) {
  const std::size_t n = g.dim();
  GroupTable t = group_table(g);
  std::vector<std::size_t> pos = table_element_indices(g);
  const std::size_t order = t.order();
  const IntegerMatrix id = IntegerMatrix::identity(n);

  using Key = std::vector<bool>;
  auto extend = [&](const Key& h, std::size_t x) {
    Key k = h;
    k[0] = true;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < order; ++i)
      if (k[i])
        members.push_back(i);
    std::vector<std::size_t> gens{x};
    for (std::size_t i = 0; i < order; ++i)
      if (k[i] && i != 0)
        gens.push_back(i);
    for (std::size_t m = 0; m < members.size(); ++m)
      for (std::size_t s : gens) {
        std::size_t y = static_cast<std::size_t>(t.mul[members[m]][s]);
        if (!k[y]) {
          k[y] = true;
          members.push_back(y);
        }
      }
    return k;
  };
  auto full_rank = [&](const std::vector<std::size_t>& gens) {
    IntegerMatrix stack(gens.size() * n, n);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      IntegerMatrix d = g.elements()[pos[gens[k]]] - id;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          stack(k * n + i, j) = d(i, j);
    }
    return rank(stack) == n;
  };

  std::set<TorsionPoint> forced;
  std::map<Key, std::vector<std::size_t>> level;
  level[Key(order, false)] = {};
  std::set<Key> seen;
  for (std::size_t depth = 1; depth <= n && !level.empty(); ++depth) {
    std::map<Key, std::vector<std::size_t>> next;
    for (const auto& [h, gens] : level) {
      for (std::size_t x = 1; x < order; ++x) {
        if (h[x])
          continue;
        Key k = extend(h, x);
        if (!seen.insert(k).second)
          continue;
        std::vector<std::size_t> chain = gens;
        chain.push_back(x);
        if (full_rank(chain)) {
          std::vector<IntegerMatrix> mats;
          for (std::size_t c : chain)
            mats.push_back(g.elements()[pos[c]]);
          for (const auto& p : monomial_fixed_points(mats).points)
            forced.insert(p);
        } else {
          next.emplace(std::move(k), std::move(chain));
        }
      }
    }
    level = std::move(next);
  }
  FixedPointSet result;
  result.points.assign(forced.begin(), forced.end());
  return result;
}

AdmissibilityReport admissible_group(const MatrixGroup& g) {
  AdmissibilityReport report;
  report.forced = forced_critical_points(g);
  std::vector<IntegerMatrix> order = g.generators();
  for (const auto& e : g.elements())
    if (std::find(order.begin(), order.end(), e) == order.end())
      order.push_back(e);
  for (const auto& e : order)
    for (const auto& p : report.forced.points)
      if (apply_monomial(e, p) != p) {
        report.admissible = false;
        report.witness_element = e;
        report.witness_point = p;
        return report;
      }
  return report;
}

} // namespace lagmon
