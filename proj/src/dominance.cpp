#include "hn/dominance.hpp"

#include "hn/polygon.hpp"
#include "hn/text.hpp"

namespace hn {

namespace {

// Walks the distinct slopes of e and f in decreasing order, maintaining
// rank(e^{>=mu}), rank(f^{>=mu}) and whether the consumed summand prefixes
// are still identical. Calls visit(mu, re, rf, prefix_equal) after each step.
template <typename Visit>
void threshold_walk(const Bundle& e, const Bundle& f, Visit visit) {
  const auto& es = e.summands();
  const auto& fs = f.summands();
  std::size_t ie = 0, jf = 0;
  long long re = 0, rf = 0;
  bool prefix_equal = true;
  while (ie < es.size() || jf < fs.size()) {
    Slope mu = ie < es.size() && jf < fs.size()
                   ? std::max(es[ie].slope, fs[jf].slope)
                   : (ie < es.size() ? es[ie].slope : fs[jf].slope);
    bool te = ie < es.size() && es[ie].slope == mu;
    bool tf = jf < fs.size() && fs[jf].slope == mu;
    if (te && tf)
      prefix_equal = prefix_equal && es[ie].mult == fs[jf].mult;
    else
      prefix_equal = false;  // prefixes diverge and can never re-align
    if (te) {
      re += es[ie].mult * es[ie].slope.den();
      ++ie;
    }
    if (tf) {
      rf += fs[jf].mult * fs[jf].slope.den();
      ++jf;
    }
    if (!visit(mu, re, rf, prefix_equal)) return;
  }
}

}  // namespace

bool slopewise_dominates(const Bundle& e, const Bundle& f) {
  bool ok = true;
  threshold_walk(e, f, [&](const Slope&, long long re, long long rf, bool) {
    if (re < rf) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

bool strongly_slopewise_dominates(const Bundle& e, const Bundle& f) {
  // Above both maxima the truncations are zero, so the sentinel threshold
  // holds trivially; every other threshold is visited by the walk.
  bool ok = true;
  threshold_walk(e, f, [&](const Slope&, long long re, long long rf, bool eq) {
    if (re < rf || (re == rf && !eq)) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

bool unit_slopes_dominate(const std::vector<Slope>& se, const std::vector<Slope>& sf,
                          bool strong) {
  const std::size_t re = se.size();
  const std::size_t rf = sf.size();
  if (rf > re) return false;
  for (std::size_t i = 0; i < rf; ++i)
    if (sf[i] > se[i]) return false;
  if (!strong) return true;
  for (std::size_t j = 1; j <= rf; ++j) {
    bool vf = j == rf || sf[j - 1] != sf[j];
    bool ve = j == re || se[j - 1] != se[j];
    if (!vf || !ve) continue;
    if (j < re && sf[j - 1] <= se[j]) continue;
    // No admissible slope past j: the polygons must agree on [0, j].
    for (std::size_t k = 0; k < j; ++k)
      if (se[k] != sf[k]) return false;
  }
  return true;
}

bool dominates_via_polygons(const Bundle& e, const Bundle& f, bool strong) {
  return unit_slopes_dominate(unit_slopes(polygon_of(e)), unit_slopes(polygon_of(f)),
                              strong);
}

bool surj_exists(const Bundle& e, const Bundle& f) {
  return strongly_slopewise_dominates(dual(e), dual(f));
}

bool inj_exists(const Bundle& e, const Bundle& f) {
  return slopewise_dominates(f, e);
}

DominanceExplanation explain_dominance(const Bundle& e, const Bundle& f, bool strong,
                                       bool via_polygons) {
  DominanceExplanation out;
  if (via_polygons) {
    auto se = unit_slopes(polygon_of(e));
    auto sf = unit_slopes(polygon_of(f));
    if (sf.size() > se.size()) {
      out.detail = "rank(f) exceeds rank(e), so HN(e) has no slope on [" +
                   std::to_string(se.size()) + ", " + std::to_string(se.size() + 1) + "]";
      out.failing_interval = static_cast<long long>(se.size()) + 1;
      return out;
    }
    for (std::size_t i = 0; i < sf.size(); ++i) {
      if (sf[i] > se[i]) {
        out.failing_interval = static_cast<long long>(i) + 1;
        out.detail = "slope of HN(f) on [" + std::to_string(i) + ", " +
                     std::to_string(i + 1) + "] is " + sf[i].str() +
                     " > " + se[i].str() + " of HN(e)";
        return out;
      }
    }
    if (strong && !unit_slopes_dominate(se, sf, true)) {
      for (std::size_t j = 1; j <= sf.size(); ++j) {
        bool vf = j == sf.size() || sf[j - 1] != sf[j];
        bool ve = j == se.size() || se[j - 1] != se[j];
        if (!vf || !ve) continue;
        if (j < se.size() && sf[j - 1] <= se[j]) continue;
        bool agree = true;
        for (std::size_t k = 0; k < j && agree; ++k) agree = se[k] == sf[k];
        if (!agree) {
          out.failing_interval = static_cast<long long>(j);
          out.detail = "both polygons have a vertex at " + std::to_string(j) +
                       " with no admissible slope past it, yet they differ on [0, " +
                       std::to_string(j) + "]";
          return out;
        }
      }
    }
    out.holds = true;
    out.detail = "every unit-interval slope of HN(f) is dominated";
    return out;
  }
  bool failed = false;
  threshold_walk(e, f, [&](const Slope& mu, long long re, long long rf, bool eq) {
    if (re < rf) {
      out.failing_mu = mu;
      out.detail = "rank(e^{>=" + mu.str() + "}) = " + std::to_string(re) + " < " +
                   std::to_string(rf) + " = rank(f^{>=" + mu.str() + "})";
      failed = true;
      return false;
    }
    if (strong && re == rf && !eq) {
      out.failing_mu = mu;
      out.detail = "equal truncation ranks at mu = " + mu.str() +
                   " but e^{>=mu} and f^{>=mu} differ";
      failed = true;
      return false;
    }
    return true;
  });
  out.holds = !failed;
  if (out.holds) out.detail = "truncation ranks dominate at every threshold";
  return out;
}

}  // namespace hn
