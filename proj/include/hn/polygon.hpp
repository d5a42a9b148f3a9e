#pragma once

#include <vector>

#include "hn/bundle.hpp"
#include "hn/rational.hpp"

namespace hn {

struct LatticePoint {
  long long x = 0;
  long long y = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// Harder-Narasimhan polygon: a convex lattice path from the origin whose
// segment slopes are strictly decreasing. Segments are the HN vectors of the
// bundle's summands, so the polygon determines the bundle and vice versa.
class HNPolygon {
 public:
  HNPolygon() = default;  // the zero polygon, a single vertex at the origin

  // Validates: first vertex (0,0), x strictly increasing, segment slopes
  // strictly decreasing. Throws invalid-polygon otherwise.
  static HNPolygon from_vertices(std::vector<LatticePoint> verts);

  const std::vector<LatticePoint>& vertices() const { return verts_; }
  long long width() const { return verts_.back().x; }
  const LatticePoint& right_endpoint() const { return verts_.back(); }

  // Piecewise-linear value at x, for 0 <= x <= width(); out-of-range error
  // otherwise.
  Rational evaluate(const Rational& x) const;

  // Slope on [i-1, i] for 1 <= i <= width(). Vertices sit on the integer
  // lattice, so the polygon is linear on every such interval.
  Slope slope_on_unit_interval(long long i) const;

  // True iff (j, evaluate(j)) is a vertex, for 0 <= j <= width(). Endpoints
  // always count.
  bool has_vertex_at(long long j) const;

  friend bool operator==(const HNPolygon&, const HNPolygon&) = default;

 private:
  std::vector<LatticePoint> verts_{{0, 0}};
};

// Vertices are the running sums of hn_vectors(v), prefixed by the origin.
HNPolygon polygon_of(const Bundle& v);
// Inverse of polygon_of: a segment with displacement (R, D) decodes to
// O(D'/R')^{+m} where D/R = D'/R' in lowest terms and m = R/R'.
Bundle bundle_of(const HNPolygon& p);

// True iff the last vertices coincide (the first is always the origin).
bool same_endpoints(const HNPolygon& p, const HNPolygon& q);

// True iff p(x) <= q(x) for all x. Polygons with different right-endpoint
// x-coordinates compare false by convention. Decided exactly at the union of
// vertex x-coordinates, which suffices for piecewise-linear functions whose
// breakpoints all lie there.
bool lies_on_or_below(const HNPolygon& p, const HNPolygon& q);

// The slope on [i-1, i] for i = 1..width, as a flat array.
std::vector<Slope> unit_slopes(const HNPolygon& p);

// Twice the area enclosed between the polygon and the chord joining its two
// endpoints. Integer because the vertices are lattice points.
long long twice_area_above_chord(const HNPolygon& p);

}  // namespace hn
