#include "hn/json_io.hpp"

#include "hn/text.hpp"

namespace hn {

using nlohmann::json;

json slope_json(const Slope& s) { return s.str(); }

json bundle_json(const Bundle& v) {
  json summands = json::array();
  for (const auto& p : v.summands())
    summands.push_back({{"slope", slope_json(p.slope)}, {"multiplicity", p.mult}});
  return {{"rank", v.rank()},
          {"degree", v.degree()},
          {"summands", summands},
          {"text", to_text(v)}};
}

json polygon_json(const HNPolygon& p) {
  json verts = json::array();
  for (const auto& v : p.vertices()) verts.push_back({v.x, v.y});
  return verts;
}

json decision_json(const Decision& d) {
  return {{"verdict", to_string(d.verdict)},
          {"cond_dominance_kernel", d.cond_dominance_kernel},
          {"cond_dominance_image", d.cond_dominance_image},
          {"cond_polygon", d.cond_polygon},
          {"hypothesis_semistable", to_string(d.hypothesis_semistable)},
          {"slope_gap_ok", d.slope_gap_ok},
          {"rank_degree_additive", d.rank_degree_additive},
          {"endpoints_match", d.endpoints_match}};
}

json stratum_json(const StratumDims& dims) {
  return {{"total", dims.total}, {"stratum", dims.stratum}, {"gap", dims.gap}};
}

json verify_report_json(const VerifyReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows) {
    rows.push_back({{"candidate", to_text(r.candidate)},
                    {"lhs", r.lhs},
                    {"bound", r.bound},
                    {"equality", r.equality},
                    {"pass", r.pass}});
  }
  return {{"ok", rep.ok()},
          {"preconditions_ok", rep.preconditions_ok},
          {"precondition_note", rep.precondition_note},
          {"expected_equality_candidate", to_text(rep.expected_equality_candidate)},
          {"expected_present", rep.expected_present},
          {"equality_count", rep.equality_count},
          {"rows", rows}};
}

json kernel_lemma_json(const KernelLemmaReport& rep) {
  return {{"ok", rep.ok()},
          {"preconditions_ok", rep.preconditions_ok},
          {"precondition_note", rep.precondition_note},
          {"polygon_le", rep.polygon_le},
          {"agree_prefix", rep.agree_prefix},
          {"expected_prefix", rep.expected_prefix},
          {"agreement_exact", rep.agreement_exact}};
}

json sweep_json(const SweepStats& stats) {
  return {{"ok", stats.ok()},
          {"pairs_screened", stats.pairs_screened},
          {"triples_checked", stats.triples_checked},
          {"rows_checked", stats.rows_checked},
          {"violations", stats.violations},
          {"inequality_violations", stats.inequality_violations},
          {"equality_violations", stats.equality_violations},
          {"stratum_checked", stats.stratum_checked},
          {"stratum_violations", stats.stratum_violations},
          {"notes", stats.notes}};
}

}  // namespace hn
