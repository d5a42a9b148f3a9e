#include "hn/degrees.hpp"

#include "hn/errors.hpp"
#include "hn/polygon.hpp"

namespace hn {

long long pos_part_degree(const Bundle& v) {
  long long d = 0;
  for (const auto& p : v.summands())
    if (p.slope >= Rational(0)) d += p.mult * p.slope.num();
  return d;
}

long long hom_degree(const Bundle& e, const Bundle& f) {
  long long total = 0;
  for (const auto& a : e.summands()) {
    long long er = a.mult * a.slope.den();
    long long ed = a.mult * a.slope.num();
    for (const auto& b : f.summands()) {
      if (a.slope > b.slope) continue;
      long long fr = b.mult * b.slope.den();
      long long fd = b.mult * b.slope.num();
      total += er * fd - ed * fr;
    }
  }
  return total;
}

long long hom_degree_oracle(const Bundle& e, const Bundle& f) {
  return pos_part_degree(tensor(dual(e), f));
}

long long parallelogram_degree(const Bundle& e, const Bundle& f) {
  if (e.is_zero() || f.is_zero())
    throw DomainError("slope-order", "parallelogram degree needs nonzero bundles");
  if (e.mu_max() > f.mu_min())
    throw DomainError("slope-order", "parallelogram degree needs mu_max(e) <= mu_min(f)");
  return e.rank() * f.degree() - e.degree() * f.rank();
}

long long aut_degree(const Bundle& v) { return hom_degree(v, v); }

long long aut_degree_via_area(const Bundle& v) {
  return twice_area_above_chord(polygon_of(v));
}

Bundle vertical_stretch(const Bundle& v, long long c) {
  if (c < 1) throw DomainError("invalid-argument", "stretch factor must be >= 1");
  HNPolygon p = polygon_of(v);
  std::vector<LatticePoint> verts;
  verts.reserve(p.vertices().size());
  for (const auto& pt : p.vertices()) verts.push_back({pt.x, c * pt.y});
  return bundle_of(HNPolygon::from_vertices(std::move(verts)));
}

}  // namespace hn
