#pragma once

// Torsion points of the torus of local systems, written additively in
// (Q/Z)^n, and the monomial automorphisms psi_g : v -> g^T v acting on them.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lagmon/groups.hpp"
#include "lagmon/intlat.hpp"

namespace lagmon {

class TorsionPoint {
public:
  TorsionPoint() = default;
  explicit TorsionPoint(RatVector coords);  // reduced into [0, 1)

  std::size_t dim() const { return coords_.size(); }
  const RatVector& coords() const { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  // Least common denominator of the coordinates.
  std::size_t order() const;
  std::string to_string() const;  // (0,1/2)

  friend bool operator==(const TorsionPoint& a, const TorsionPoint& b) { return a.coords_ == b.coords_; }
  friend bool operator!=(const TorsionPoint& a, const TorsionPoint& b) { return !(a == b); }
  friend bool operator<(const TorsionPoint& a, const TorsionPoint& b) { return a.coords_ < b.coords_; }

private:
  RatVector coords_;
};

// psi_g(v) = g^T v mod 1.
TorsionPoint apply_monomial(const IntegerMatrix& g, const TorsionPoint& p);

// Every point with all coordinate denominators dividing m, lexicographically.
std::vector<TorsionPoint> torsion_grid(std::size_t dim, std::size_t m);

struct FixedPointSet {
  bool finite = true;
  std::vector<TorsionPoint> points;  // sorted; all points when finite, coset representatives otherwise
  std::vector<RatVector> kernel;     // directions of the positive-dimensional part when infinite

  std::size_t size() const { return points.size(); }
  bool contains(const TorsionPoint& p) const;
};

// Common fixed points of psi_g for all g in gs, via the Smith form of the
// stacked congruence (g^T - I) v = 0 mod 1.
FixedPointSet monomial_fixed_points(const std::vector<IntegerMatrix>& gs);

// Union of the fixed sets of all families of at most n group elements whose
// 1-eigenspaces intersect trivially.
FixedPointSet forced_critical_points(const MatrixGroup& g);

struct AdmissibilityReport {
  bool admissible = true;
  FixedPointSet forced;
  std::optional<IntegerMatrix> witness_element;
  std::optional<TorsionPoint> witness_point;
};

// A group is admissible when every element fixes every forced critical point.
AdmissibilityReport admissible_group(const MatrixGroup& g);

} // namespace lagmon
