#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hn/bundle.hpp"

namespace hn {

// e slopewise dominates f: rank(e^{>=mu}) >= rank(f^{>=mu}) for every mu.
// Decided exactly at the union of the HN slopes of both bundles, since both
// truncation ranks are step functions changing only there.
bool slopewise_dominates(const Bundle& e, const Bundle& f);

// Slopewise dominance where every rank equality forces the truncations to be
// equal as bundles. Checked at the union of slopes plus a threshold above
// both maxima, where both truncations vanish.
bool strongly_slopewise_dominates(const Bundle& e, const Bundle& f);

// The same predicates decided on HN polygons: the slope of HN(f) on each unit
// interval [i-1, i] must not exceed that of HN(e), and (for the strong form)
// at every integer j where both polygons have vertices, the slope of HN(f) on
// [j-1, j] must not exceed the slope of HN(e) on [j, j+1] unless the polygons
// agree on [0, j]. When j is the right endpoint of HN(e) there is no interval
// [j, j+1], and agreement on [0, j] is required outright.
bool dominates_via_polygons(const Bundle& e, const Bundle& f, bool strong);

// Core of the polygon route on precomputed unit-slope arrays, for callers
// that sweep many pairs.
bool unit_slopes_dominate(const std::vector<Slope>& e_slopes,
                          const std::vector<Slope>& f_slopes, bool strong);

// Surj(e, f) is nonempty iff e^dual strongly slopewise dominates f^dual.
bool surj_exists(const Bundle& e, const Bundle& f);

// Inj(e, f) is nonempty iff f slopewise dominates e (the ambient bundle
// dominates the sub).
bool inj_exists(const Bundle& e, const Bundle& f);

// Verdict plus the witness that decided it, for diagnostics.
struct DominanceExplanation {
  bool holds = false;
  std::string detail;
  std::optional<Rational> failing_mu;        // truncation route
  std::optional<long long> failing_interval; // polygon route: slope on [i-1, i]
};

DominanceExplanation explain_dominance(const Bundle& e, const Bundle& f,
                                       bool strong, bool via_polygons);

}  // namespace hn
