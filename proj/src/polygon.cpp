#include "hn/polygon.hpp"

#include <algorithm>
#include <cstdlib>

#include "hn/errors.hpp"

namespace hn {

HNPolygon HNPolygon::from_vertices(std::vector<LatticePoint> verts) {
  if (verts.empty() || verts.front() != LatticePoint{0, 0})
    throw DomainError("invalid-polygon", "polygon must start at the origin");
  for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
    if (verts[i + 1].x <= verts[i].x)
      throw DomainError("invalid-polygon", "x-coordinates must strictly increase");
  }
  for (std::size_t i = 0; i + 2 < verts.size(); ++i) {
    Rational s0(verts[i + 1].y - verts[i].y, verts[i + 1].x - verts[i].x);
    Rational s1(verts[i + 2].y - verts[i + 1].y, verts[i + 2].x - verts[i + 1].x);
    if (!(s1 < s0))
      throw DomainError("invalid-polygon", "segment slopes must strictly decrease");
  }
  HNPolygon p;
  p.verts_ = std::move(verts);
  return p;
}

Rational HNPolygon::evaluate(const Rational& x) const {
  if (x < Rational(0) || x > Rational(width()))
    throw DomainError("out-of-range", "x outside [0, " + std::to_string(width()) + "]");
  for (std::size_t i = 0; i + 1 < verts_.size(); ++i) {
    if (x <= Rational(verts_[i + 1].x)) {
      Rational run(verts_[i + 1].x - verts_[i].x);
      Rational rise(verts_[i + 1].y - verts_[i].y);
      return Rational(verts_[i].y) + (x - Rational(verts_[i].x)) * rise / run;
    }
  }
  return Rational(verts_.back().y);  // single-vertex polygon, x == 0
}

Slope HNPolygon::slope_on_unit_interval(long long i) const {
  if (i < 1 || i > width())
    throw DomainError("out-of-range", "unit interval index outside [1, width]");
  for (std::size_t k = 0; k + 1 < verts_.size(); ++k) {
    if (verts_[k].x <= i - 1 && i <= verts_[k + 1].x)
      return Rational(verts_[k + 1].y - verts_[k].y, verts_[k + 1].x - verts_[k].x);
  }
  throw DomainError("out-of-range", "unit interval not covered");  // unreachable
}

bool HNPolygon::has_vertex_at(long long j) const {
  if (j < 0 || j > width())
    throw DomainError("out-of-range", "vertex query outside [0, width]");
  return std::any_of(verts_.begin(), verts_.end(),
                     [j](const LatticePoint& v) { return v.x == j; });
}

HNPolygon polygon_of(const Bundle& v) {
  std::vector<LatticePoint> verts{{0, 0}};
  long long x = 0;
  long long y = 0;
  for (const auto& vec : hn_vectors(v)) {
    x += vec.rank;
    y += vec.degree;
    verts.push_back({x, y});
  }
  return HNPolygon::from_vertices(std::move(verts));
}

Bundle bundle_of(const HNPolygon& p) {
  std::vector<Bundle::Summand> parts;
  const auto& verts = p.vertices();
  for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
    long long run = verts[i + 1].x - verts[i].x;
    long long rise = verts[i + 1].y - verts[i].y;
    Rational slope(rise, run);
    parts.push_back({slope, run / slope.den()});
  }
  return Bundle::from_summands(std::move(parts));
}

bool same_endpoints(const HNPolygon& p, const HNPolygon& q) {
  return p.right_endpoint() == q.right_endpoint();
}

bool lies_on_or_below(const HNPolygon& p, const HNPolygon& q) {
  if (p.width() != q.width()) return false;
  for (const auto& v : p.vertices())
    if (Rational(v.y) > q.evaluate(Rational(v.x))) return false;
  for (const auto& v : q.vertices())
    if (p.evaluate(Rational(v.x)) > Rational(v.y)) return false;
  return true;
}

std::vector<Slope> unit_slopes(const HNPolygon& p) {
  std::vector<Slope> slopes;
  slopes.reserve(static_cast<std::size_t>(p.width()));
  const auto& verts = p.vertices();
  for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
    long long run = verts[i + 1].x - verts[i].x;
    Rational s(verts[i + 1].y - verts[i].y, run);
    for (long long k = 0; k < run; ++k) slopes.push_back(s);
  }
  return slopes;
}

long long twice_area_above_chord(const HNPolygon& p) {
  // Shoelace sum over the path; the closing chord back to the origin
  // contributes nothing.
  long long sum = 0;
  const auto& verts = p.vertices();
  for (std::size_t i = 0; i + 1 < verts.size(); ++i)
    sum += verts[i].x * verts[i + 1].y - verts[i + 1].x * verts[i].y;
  return std::llabs(sum);
}

}  // namespace hn
