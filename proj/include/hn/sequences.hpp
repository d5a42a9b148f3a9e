#pragma once

#include <string>
#include <vector>

#include "hn/bundle.hpp"

namespace hn {

enum class Verdict { Exists, NotExists, Unknown };

enum class SemistableHypothesis { D, E, F, None };

const char* to_string(Verdict v);
const char* to_string(SemistableHypothesis h);

// Outcome of the extension-existence test for 0 -> d -> e -> f -> 0, with
// per-condition diagnostics. The three conditions are necessary
// unconditionally; they are also sufficient when one of the bundles is
// semistable and mu_max(d) < mu_min(f), and Unknown encodes exactly the
// triples where that sufficiency hypothesis is unmet.
struct Decision {
  Verdict verdict = Verdict::Unknown;
  bool cond_dominance_kernel = false;  // e strongly slopewise dominates d
  bool cond_dominance_image = false;   // e^dual strongly slopewise dominates f^dual
  bool cond_polygon = false;           // HN(e) <= HN(d + f) with the same endpoints
  SemistableHypothesis hypothesis_semistable = SemistableHypothesis::None;
  bool slope_gap_ok = false;  // mu_max(d) < mu_min(f); vacuous for zero d or f
  // Diagnostics feeding cond_polygon.
  bool rank_degree_additive = false;
  bool endpoints_match = false;
};

Decision decide_extension(const Bundle& d, const Bundle& e, const Bundle& f);

// Slope bounds making enumerations finite; max_rank is the knob for the
// sweep drivers.
struct SlopeWindow {
  Slope lo;
  Slope hi;
  long long max_rank = 1;
};

// All HN types of the given rank and degree whose slopes lie in [w.lo, w.hi];
// equivalently all convex lattice paths (0,0) -> (rank, degree) with strictly
// decreasing segment slopes in the window. Sorted lexicographically by vertex
// list. Rank 0 yields the zero bundle when degree is 0, nothing otherwise.
std::vector<Bundle> enumerate_bundles(long long rank, long long degree,
                                      const SlopeWindow& w);

// Every bundle of the given rank with all slopes in the window, in
// degree-ascending then vertex-lexicographic order.
std::vector<Bundle> enumerate_bundles_of_rank(long long rank, const SlopeWindow& w);

// Kernel types compatible with a surjection e ->> f: rank(e) - rank(f) and
// degree(e) - degree(f), screened by embeddability into e. The slope window is
// forced: no HN slope of an embeddable kernel can exceed mu_max(e), and none
// can drop below degree(k) - mu_max(e) * (rank(k) - 1) once the others are
// capped. A rank-0 f yields {e} (the trivial surjection).
std::vector<Bundle> kernel_candidates(const Bundle& e, const Bundle& f);

// Window [mu_min(d), mu_max(f)] (falling back to the other bundle's slopes
// when one side is zero): the necessity screen confines every middle term's
// slopes to this interval.
SlopeWindow default_extension_window(const Bundle& d, const Bundle& f);

// Middle-term types v that pass the necessity screen for an extension of f
// by d: v strongly dominates d, v^dual strongly dominates f^dual, and
// HN(v) <= HN(d + f) with the same endpoints.
std::vector<Bundle> extension_candidates(const Bundle& d, const Bundle& f,
                                         const SlopeWindow& w);

// One candidate row of a verification harness.
struct VerifyRow {
  Bundle candidate;
  long long lhs = 0;
  long long bound = 0;
  bool equality = false;
  bool pass = false;
};

struct VerifyReport {
  bool preconditions_ok = true;
  std::string precondition_note;
  Bundle expected_equality_candidate;
  bool expected_present = false;
  long long equality_count = 0;
  std::vector<VerifyRow> rows;

  bool all_rows_pass() const;
  // lhs <= bound on every row.
  bool inequality_ok() const;
  // Equality attained exactly at the expected candidate and nowhere else.
  bool equality_unique() const;
  // Preconditions met, every row passes, and equality is attained exactly at
  // the expected candidate.
  bool ok() const;
};

// For every kernel candidate k of (e, f) with HN(e) <= HN(f + k), checks
//   hom_degree(k,e) - hom_degree(k,f) - hom_degree(k,k) <= 0
// with equality iff k = d. Requires d semistable, the three extension
// conditions, and mu_max(d) < mu_min(f); unmet preconditions are reported in
// the result, never ignored.
VerifyReport verify_key_inequality_kernel(const Bundle& d, const Bundle& e,
                                          const Bundle& f);

// For every extension candidate v of (d, f) in the window, checks
//   hom(d,v) + hom(v,f) - hom(d,f) - hom(v,v) <= hom(d,f)
// with equality iff v = e. Requires e semistable with additive rank/degree
// and mu_max(d) < slope(e) < mu_min(f).
VerifyReport verify_key_inequality_extension(const Bundle& d, const Bundle& e,
                                             const Bundle& f, const SlopeWindow& w);

struct KernelLemmaReport {
  bool preconditions_ok = true;
  std::string precondition_note;
  bool polygon_le = false;      // HN(f + d) <= HN(f + k)
  long long agree_prefix = 0;   // the polygons agree exactly on [0, agree_prefix]
  long long expected_prefix = 0;  // rank(f^{>= mu_max(k)})
  bool agreement_exact = false;

  bool ok() const { return preconditions_ok && polygon_le && agreement_exact; }
};

// Checks that HN(f + k) lies above HN(f + d) and that the polygons agree
// precisely on [0, rank(f^{>= mu_max(k)})], diverging strictly afterwards up
// to the (always shared) right endpoint. Requires d semistable, k not
// semistable, matching rank/degree, and mu_max(d) < mu_min(f).
KernelLemmaReport check_nonsemistable_kernel_lemma(const Bundle& d, const Bundle& f,
                                                   const Bundle& k);

// Aggregates for the exhaustive harness drivers. Violation notes keep the
// first few offending triples in canonical text form. Inequality violations
// (lhs > bound) are counted separately from failures of the
// equality-uniqueness clause (equality attained away from the expected
// candidate), since the two halves of the assertion can fail independently.
struct SweepStats {
  long long pairs_screened = 0;
  long long triples_checked = 0;
  long long rows_checked = 0;
  long long violations = 0;
  long long inequality_violations = 0;
  long long equality_violations = 0;
  long long stratum_checked = 0;
  long long stratum_violations = 0;
  std::vector<std::string> notes;

  bool ok() const { return violations == 0 && stratum_violations == 0; }
};

// All triples with d semistable meeting the preconditions, with ranks bounded
// by w.max_rank and slopes in the window; runs verify_key_inequality_kernel
// and checks dim_surj_stratum(e,f,d) == dim_hom(e,f) on each.
SweepStats sweep_step1(const SlopeWindow& w);

// All triples with semistable middle term e meeting the preconditions; runs
// verify_key_inequality_extension and checks
// dim_ext_stratum(d,f,e) == dim_ext_total(f,d) on each.
SweepStats sweep_step2(const SlopeWindow& w);

// All (d, f, k) with d semistable, k not, matching rank/degree and the slope
// gap, with rank(k) <= w.max_rank and rank(f) <= w.max_rank; runs
// check_nonsemistable_kernel_lemma on each.
SweepStats sweep_kernel_lemma(const SlopeWindow& w);

}  // namespace hn
