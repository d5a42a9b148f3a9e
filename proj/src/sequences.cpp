#include "hn/sequences.hpp"

#include <algorithm>

#include "hn/degrees.hpp"
#include "hn/dominance.hpp"
#include "hn/errors.hpp"
#include "hn/moduli.hpp"
#include "hn/polygon.hpp"
#include "hn/text.hpp"

namespace hn {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Exists: return "Exists";
    case Verdict::NotExists: return "NotExists";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

const char* to_string(SemistableHypothesis h) {
  switch (h) {
    case SemistableHypothesis::D: return "D";
    case SemistableHypothesis::E: return "E";
    case SemistableHypothesis::F: return "F";
    case SemistableHypothesis::None: return "none";
  }
  return "none";
}

Decision decide_extension(const Bundle& d, const Bundle& e, const Bundle& f) {
  Decision out;
  out.rank_degree_additive =
      e.rank() == d.rank() + f.rank() && e.degree() == d.degree() + f.degree();
  out.cond_dominance_kernel = strongly_slopewise_dominates(e, d);
  out.cond_dominance_image = strongly_slopewise_dominates(dual(e), dual(f));
  HNPolygon pe = polygon_of(e);
  HNPolygon pdf = polygon_of(direct_sum(d, f));
  out.endpoints_match = same_endpoints(pe, pdf);
  out.cond_polygon = out.endpoints_match && lies_on_or_below(pe, pdf);
  out.slope_gap_ok = d.is_zero() || f.is_zero() || d.mu_max() < f.mu_min();
  out.hypothesis_semistable = d.is_semistable()   ? SemistableHypothesis::D
                              : e.is_semistable() ? SemistableHypothesis::E
                              : f.is_semistable() ? SemistableHypothesis::F
                                                  : SemistableHypothesis::None;
  if (!out.cond_dominance_kernel || !out.cond_dominance_image || !out.cond_polygon)
    out.verdict = Verdict::NotExists;
  else if (out.hypothesis_semistable != SemistableHypothesis::None && out.slope_gap_ok)
    out.verdict = Verdict::Exists;
  else
    out.verdict = Verdict::Unknown;
  return out;
}

namespace {

bool vertex_lex_less(const Bundle& a, const Bundle& b) {
  const auto va = polygon_of(a).vertices();
  const auto vb = polygon_of(b).vertices();
  return std::lexicographical_compare(
      va.begin(), va.end(), vb.begin(), vb.end(),
      [](const LatticePoint& p, const LatticePoint& q) {
        return p.x != q.x ? p.x < q.x : p.y < q.y;
      });
}

// Reduced slopes in [lo, hi] with denominator at most max_den, descending.
std::vector<Slope> slopes_in_window(long long max_den, const Rational& lo,
                                    const Rational& hi) {
  std::vector<Slope> slopes;
  for (long long b = 1; b <= max_den; ++b) {
    long long a_lo = ceil_ll(lo * Rational(b));
    long long a_hi = floor_ll(hi * Rational(b));
    for (long long a = a_lo; a <= a_hi; ++a) {
      if (detail::gcd128(a, b) == 1) slopes.push_back(Rational(a, b));
    }
  }
  std::sort(slopes.begin(), slopes.end(), std::greater<Slope>());
  return slopes;
}

void enumerate_rec(const std::vector<Slope>& slopes, std::size_t from, long long rank,
                   long long degree, const Rational& lo,
                   std::vector<Bundle::Summand>& prefix, std::vector<Bundle>& out) {
  if (rank == 0) {
    if (degree == 0) out.push_back(Bundle::from_summands(prefix));
    return;
  }
  if (Rational(degree) < Rational(rank) * lo) return;
  for (std::size_t i = from; i < slopes.size(); ++i) {
    const Slope& s = slopes[i];
    // Every remaining slope is <= s, so the degree cannot exceed rank * s;
    // later candidates only shrink the bound.
    if (Rational(degree) > Rational(rank) * s) break;
    long long b = s.den();
    long long a = s.num();
    for (long long m = 1; m * b <= rank; ++m) {
      prefix.push_back({s, m});
      enumerate_rec(slopes, i + 1, rank - m * b, degree - m * a, lo, prefix, out);
      prefix.pop_back();
    }
  }
}

}  // namespace

std::vector<Bundle> enumerate_bundles(long long rank, long long degree,
                                      const SlopeWindow& w) {
  if (rank < 0) throw DomainError("invalid-argument", "negative rank");
  if (rank == 0) {
    if (degree == 0) return {Bundle()};
    return {};
  }
  std::vector<Bundle> out;
  auto slopes = slopes_in_window(rank, w.lo, w.hi);
  std::vector<Bundle::Summand> prefix;
  enumerate_rec(slopes, 0, rank, degree, w.lo, prefix, out);
  std::sort(out.begin(), out.end(), vertex_lex_less);
  return out;
}

std::vector<Bundle> enumerate_bundles_of_rank(long long rank, const SlopeWindow& w) {
  std::vector<Bundle> out;
  if (rank == 0) return {Bundle()};
  long long d_lo = ceil_ll(w.lo * Rational(rank));
  long long d_hi = floor_ll(w.hi * Rational(rank));
  for (long long d = d_lo; d <= d_hi; ++d) {
    auto batch = enumerate_bundles(rank, d, w);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

std::vector<Bundle> kernel_candidates(const Bundle& e, const Bundle& f) {
  long long rk = e.rank() - f.rank();
  long long dk = e.degree() - f.degree();
  if (rk < 0) return {};
  if (rk == 0) return dk == 0 ? std::vector<Bundle>{Bundle()} : std::vector<Bundle>{};
  if (f.is_zero()) return {e};  // only the trivial surjection e ->> 0
  SlopeWindow w;
  w.hi = e.mu_max();
  w.lo = Rational(dk) - w.hi * Rational(rk - 1);
  w.max_rank = rk;
  std::vector<Bundle> out;
  for (auto& k : enumerate_bundles(rk, dk, w))
    if (inj_exists(k, e)) out.push_back(std::move(k));
  return out;
}

SlopeWindow default_extension_window(const Bundle& d, const Bundle& f) {
  SlopeWindow w;
  w.lo = d.is_zero() ? (f.is_zero() ? Rational(0) : f.mu_min()) : d.mu_min();
  w.hi = f.is_zero() ? (d.is_zero() ? Rational(0) : d.mu_max()) : f.mu_max();
  w.max_rank = std::max<long long>(1, d.rank() + f.rank());
  return w;
}

std::vector<Bundle> extension_candidates(const Bundle& d, const Bundle& f,
                                         const SlopeWindow& w) {
  Bundle df = direct_sum(d, f);
  HNPolygon pdf = polygon_of(df);
  Bundle fd = dual(f);
  std::vector<Bundle> out;
  for (auto& v : enumerate_bundles(df.rank(), df.degree(), w)) {
    if (!strongly_slopewise_dominates(v, d)) continue;
    if (!strongly_slopewise_dominates(dual(v), fd)) continue;
    if (!lies_on_or_below(polygon_of(v), pdf)) continue;
    out.push_back(std::move(v));
  }
  return out;
}

bool VerifyReport::all_rows_pass() const {
  return std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.pass; });
}

bool VerifyReport::inequality_ok() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const VerifyRow& r) { return r.lhs <= r.bound; });
}

bool VerifyReport::equality_unique() const {
  for (const auto& r : rows)
    if (r.equality != (r.candidate == expected_equality_candidate)) return false;
  return expected_present;
}

bool VerifyReport::ok() const {
  return preconditions_ok && expected_present && equality_count == 1 && all_rows_pass();
}

namespace {

VerifyReport precondition_failure(std::string note) {
  VerifyReport rep;
  rep.preconditions_ok = false;
  rep.precondition_note = std::move(note);
  return rep;
}

}  // namespace

VerifyReport verify_key_inequality_kernel(const Bundle& d, const Bundle& e,
                                          const Bundle& f) {
  if (!d.is_semistable())
    return precondition_failure("d is not semistable");
  if (!d.is_zero() && !f.is_zero() && !(d.mu_max() < f.mu_min()))
    return precondition_failure("mu_max(d) < mu_min(f) fails");
  Decision dec = decide_extension(d, e, f);
  if (!dec.cond_dominance_kernel || !dec.cond_dominance_image || !dec.cond_polygon)
    return precondition_failure("the extension conditions fail for (d, e, f)");

  VerifyReport rep;
  rep.expected_equality_candidate = d;
  HNPolygon pe = polygon_of(e);
  for (const Bundle& k : kernel_candidates(e, f)) {
    if (!lies_on_or_below(pe, polygon_of(direct_sum(f, k)))) continue;
    VerifyRow row;
    row.candidate = k;
    row.lhs = hom_degree(k, e) - hom_degree(k, f) - hom_degree(k, k);
    row.bound = 0;
    row.equality = row.lhs == row.bound;
    row.pass = row.lhs <= row.bound && row.equality == (k == d);
    rep.equality_count += row.equality ? 1 : 0;
    rep.expected_present = rep.expected_present || k == d;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

VerifyReport verify_key_inequality_extension(const Bundle& d, const Bundle& e,
                                             const Bundle& f, const SlopeWindow& w) {
  if (!e.is_semistable() || e.is_zero())
    return precondition_failure("e is not a nonzero semistable bundle");
  if (e.rank() != d.rank() + f.rank() || e.degree() != d.degree() + f.degree())
    return precondition_failure("rank/degree additivity fails");
  if (d.is_zero() || f.is_zero())
    return precondition_failure("d and f must be nonzero for the strict slope chain");
  if (!(d.mu_max() < e.slope() && e.slope() < f.mu_min()))
    return precondition_failure("mu_max(d) < slope(e) < mu_min(f) fails");

  VerifyReport rep;
  rep.expected_equality_candidate = e;
  const long long bound = hom_degree(d, f);
  for (const Bundle& v : extension_candidates(d, f, w)) {
    VerifyRow row;
    row.candidate = v;
    row.lhs = hom_degree(d, v) + hom_degree(v, f) - hom_degree(d, f) - hom_degree(v, v);
    row.bound = bound;
    row.equality = row.lhs == row.bound;
    row.pass = row.lhs <= row.bound && row.equality == (v == e);
    rep.equality_count += row.equality ? 1 : 0;
    rep.expected_present = rep.expected_present || v == e;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

KernelLemmaReport check_nonsemistable_kernel_lemma(const Bundle& d, const Bundle& f,
                                                   const Bundle& k) {
  KernelLemmaReport rep;
  auto fail = [&rep](const char* note) {
    rep.preconditions_ok = false;
    rep.precondition_note = note;
    return rep;
  };
  if (!d.is_semistable() || d.is_zero()) return fail("d is not a nonzero semistable bundle");
  if (k.is_semistable()) return fail("k is semistable");
  if (d.rank() != k.rank() || d.degree() != k.degree())
    return fail("d and k must share rank and degree");
  if (f.is_zero() || !(d.mu_max() < f.mu_min())) return fail("mu_max(d) < mu_min(f) fails");

  HNPolygon low = polygon_of(direct_sum(f, d));
  HNPolygon high = polygon_of(direct_sum(f, k));
  rep.polygon_le = lies_on_or_below(low, high);
  rep.expected_prefix = truncate(f, k.mu_max(), Cmp::Ge).rank();

  // Union of the (integer) breakpoints of both polygons.
  std::vector<long long> xs;
  for (const auto& v : low.vertices()) xs.push_back(v.x);
  for (const auto& v : high.vertices()) xs.push_back(v.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  // Both polygons are linear between consecutive union breakpoints, so
  // equality at two consecutive breakpoints means equality on the whole
  // segment, and the initial agreement interval ends at a breakpoint.
  std::size_t idx = 0;
  while (idx + 1 < xs.size() &&
         low.evaluate(Rational(xs[idx + 1])) == high.evaluate(Rational(xs[idx + 1])))
    ++idx;
  rep.agree_prefix = xs[idx];

  // Strict divergence on the open interval between the agreement prefix and
  // the shared right endpoint. polygon_le rules out crossings, so touching
  // could only happen at breakpoints.
  bool strictly_apart = true;
  for (std::size_t i = idx + 1; i + 1 < xs.size(); ++i) {
    if (low.evaluate(Rational(xs[i])) == high.evaluate(Rational(xs[i]))) {
      strictly_apart = false;
      break;
    }
  }
  rep.agreement_exact = strictly_apart && rep.agree_prefix == rep.expected_prefix;
  return rep;
}

namespace {

std::vector<Bundle> semistable_in_window(long long max_rank, const SlopeWindow& w) {
  std::vector<Bundle> out;
  for (long long b = 1; b <= max_rank; ++b) {
    long long a_lo = ceil_ll(w.lo * Rational(b));
    long long a_hi = floor_ll(w.hi * Rational(b));
    for (long long a = a_lo; a <= a_hi; ++a) {
      if (detail::gcd128(a, b) != 1) continue;
      for (long long m = 1; m * b <= max_rank; ++m)
        out.push_back(Bundle::semistable(Rational(a, b), m));
    }
  }
  std::sort(out.begin(), out.end(), vertex_lex_less);
  return out;
}

void note_violation(SweepStats& stats, const std::string& text) {
  if (stats.notes.size() < 8) stats.notes.push_back(text);
}

std::string triple_text(const Bundle& d, const Bundle& e, const Bundle& f) {
  return "d = " + to_text(d) + ", e = " + to_text(e) + ", f = " + to_text(f);
}

}  // namespace

SweepStats sweep_step1(const SlopeWindow& w) {
  SweepStats stats;
  for (const Bundle& d : semistable_in_window(w.max_rank - 1, w)) {
    for (long long rf = 1; rf + d.rank() <= w.max_rank; ++rf) {
      for (const Bundle& f : enumerate_bundles_of_rank(rf, w)) {
        if (!(d.mu_max() < f.mu_min())) continue;
        ++stats.pairs_screened;
        for (const Bundle& e : extension_candidates(d, f, w)) {
          ++stats.triples_checked;
          VerifyReport rep = verify_key_inequality_kernel(d, e, f);
          stats.rows_checked += static_cast<long long>(rep.rows.size());
          if (!rep.inequality_ok()) ++stats.inequality_violations;
          if (!rep.equality_unique()) ++stats.equality_violations;
          if (!rep.ok()) {
            ++stats.violations;
            note_violation(stats, std::string("step1 ") +
                                      (rep.inequality_ok() ? "equality-uniqueness"
                                                           : "inequality") +
                                      ": " + triple_text(d, e, f));
          }
          ++stats.stratum_checked;
          if (dim_surj_stratum(e, f, d) != dim_hom(e, f)) {
            ++stats.stratum_violations;
            note_violation(stats, "step1 stratum: " + triple_text(d, e, f));
          }
        }
      }
    }
  }
  return stats;
}

SweepStats sweep_step2(const SlopeWindow& w) {
  SweepStats stats;
  for (long long rd = 1; rd < w.max_rank; ++rd) {
    for (const Bundle& d : enumerate_bundles_of_rank(rd, w)) {
      for (long long rf = 1; rf + rd <= w.max_rank; ++rf) {
        for (const Bundle& f : enumerate_bundles_of_rank(rf, w)) {
          if (!(d.mu_max() < f.mu_min())) continue;
          Bundle e = semistable_of(rd + rf, d.degree() + f.degree());
          if (!(d.mu_max() < e.slope() && e.slope() < f.mu_min())) continue;
          ++stats.pairs_screened;
          ++stats.triples_checked;
          VerifyReport rep = verify_key_inequality_extension(d, e, f, w);
          stats.rows_checked += static_cast<long long>(rep.rows.size());
          if (!rep.inequality_ok()) ++stats.inequality_violations;
          if (!rep.equality_unique()) ++stats.equality_violations;
          if (!rep.ok()) {
            ++stats.violations;
            note_violation(stats, std::string("step2 ") +
                                      (rep.inequality_ok() ? "equality-uniqueness"
                                                           : "inequality") +
                                      ": " + triple_text(d, e, f));
          }
          ++stats.stratum_checked;
          if (dim_ext_stratum(d, f, e) != dim_ext_total(f, d)) {
            ++stats.stratum_violations;
            note_violation(stats, "step2 stratum: " + triple_text(d, e, f));
          }
        }
      }
    }
  }
  return stats;
}

SweepStats sweep_kernel_lemma(const SlopeWindow& w) {
  SweepStats stats;
  for (long long rk = 2; rk <= w.max_rank; ++rk) {
    for (const Bundle& k : enumerate_bundles_of_rank(rk, w)) {
      if (k.is_semistable()) continue;
      Bundle d = semistable_of(k.rank(), k.degree());
      for (long long rf = 1; rf <= w.max_rank; ++rf) {
        for (const Bundle& f : enumerate_bundles_of_rank(rf, w)) {
          if (!(d.mu_max() < f.mu_min())) continue;
          ++stats.pairs_screened;
          ++stats.triples_checked;
          KernelLemmaReport rep = check_nonsemistable_kernel_lemma(d, f, k);
          ++stats.rows_checked;
          if (!rep.ok()) {
            ++stats.violations;
            note_violation(stats, "kernel-lemma: d = " + to_text(d) + ", f = " +
                                      to_text(f) + ", k = " + to_text(k));
          }
        }
      }
    }
  }
  return stats;
}

}  // namespace hn
