// hnbundle: command-line front end for the Harder-Narasimhan polygon calculus.
// Exit codes: 0 success, 1 domain error, 2 parse error, 3 verification
// violation. Domain and parse failures print one machine-parsable line on
// stderr.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hn/degrees.hpp"
#include "hn/dominance.hpp"
#include "hn/errors.hpp"
#include "hn/json_io.hpp"
#include "hn/moduli.hpp"
#include "hn/polygon.hpp"
#include "hn/render.hpp"
#include "hn/sequences.hpp"
#include "hn/text.hpp"

namespace {

using nlohmann::json;

int g_exit = 0;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

void cmd_info(const std::string& text) {
  hn::Bundle v = hn::parse_bundle(text);
  json out = hn::bundle_json(v);
  out["polygon"] = hn::polygon_json(hn::polygon_of(v));
  json vecs = json::array();
  for (const auto& vec : hn::hn_vectors(v)) vecs.push_back({vec.rank, vec.degree});
  out["hn_vectors"] = vecs;
  out["semistable"] = v.is_semistable();
  if (v.is_zero()) {
    out["slope"] = nullptr;
    out["mu_max"] = nullptr;
    out["mu_min"] = nullptr;
  } else {
    out["slope"] = hn::slope_json(v.slope());
    out["mu_max"] = hn::slope_json(v.mu_max());
    out["mu_min"] = hn::slope_json(v.mu_min());
  }
  emit(out);
}

void emit_op(const std::string& op, const hn::Bundle& result) {
  emit({{"op", op}, {"result", hn::bundle_json(result)}});
}

void cmd_deg(const std::string& kind, const std::vector<std::string>& args,
             bool oracle) {
  json out;
  out["kind"] = kind;
  long long value = 0;
  long long check = 0;
  bool has_check = false;
  if (kind == "hom") {
    hn::Bundle e = hn::parse_bundle(args.at(0));
    hn::Bundle f = hn::parse_bundle(args.at(1));
    value = hn::hom_degree(e, f);
    if (oracle) {
      check = hn::hom_degree_oracle(e, f);
      has_check = true;
    }
  } else if (kind == "aut") {
    hn::Bundle v = hn::parse_bundle(args.at(0));
    value = hn::aut_degree(v);
    if (oracle) {
      check = hn::aut_degree_via_area(v);
      has_check = true;
    }
  } else {  // pos
    hn::Bundle v = hn::parse_bundle(args.at(0));
    value = hn::pos_part_degree(v);
    if (oracle) {
      check = hn::truncate(v, hn::Rational(0), hn::Cmp::Ge).degree();
      has_check = true;
    }
  }
  out["value"] = value;
  if (has_check) {
    out["oracle"] = check;
    out["agrees"] = value == check;
    if (value != check) g_exit = 3;
  }
  emit(out);
}

void cmd_dominates(const std::string& etext, const std::string& ftext, bool strong,
                   bool via_polygons) {
  hn::Bundle e = hn::parse_bundle(etext);
  hn::Bundle f = hn::parse_bundle(ftext);
  hn::DominanceExplanation ex = hn::explain_dominance(e, f, strong, via_polygons);
  json out = {{"holds", ex.holds},
              {"strong", strong},
              {"via_polygons", via_polygons},
              {"detail", ex.detail}};
  out["failing_mu"] = ex.failing_mu ? json(ex.failing_mu->str()) : json(nullptr);
  out["failing_interval"] =
      ex.failing_interval ? json(*ex.failing_interval) : json(nullptr);
  emit(out);
}

void cmd_dims(const std::string& kind, const std::vector<std::string>& args) {
  json out;
  out["kind"] = kind;
  if (kind == "hom") {
    out["value"] = hn::dim_hom(hn::parse_bundle(args.at(0)), hn::parse_bundle(args.at(1)));
  } else if (kind == "aut") {
    out["value"] = hn::dim_aut(hn::parse_bundle(args.at(0)));
  } else if (kind == "h1") {
    out["value"] = hn::dim_h1(hn::parse_bundle(args.at(0)));
  } else if (kind == "surj-stratum") {
    auto dims = hn::surj_stratum_dims(hn::parse_bundle(args.at(0)),
                                      hn::parse_bundle(args.at(1)),
                                      hn::parse_bundle(args.at(2)));
    out.update(hn::stratum_json(dims));
  } else if (kind == "ext-stratum") {
    hn::Bundle d = hn::parse_bundle(args.at(0));
    hn::Bundle f = hn::parse_bundle(args.at(1));
    hn::Bundle e = hn::parse_bundle(args.at(2));
    out["stratum"] = hn::dim_ext_stratum(d, f, e);
    try {
      auto dims = hn::ext_stratum_dims(d, f, e);
      out["total"] = dims.total;
      out["gap"] = dims.gap;
    } catch (const hn::DomainError&) {
      out["total"] = nullptr;  // slope gap unmet: the total has no formula here
      out["gap"] = nullptr;
    }
  } else {  // ext-total
    out["value"] = hn::dim_ext_total(hn::parse_bundle(args.at(0)),
                                     hn::parse_bundle(args.at(1)));
  }
  emit(out);
}

void cmd_decide(const std::string& dt, const std::string& et, const std::string& ft) {
  hn::Decision dec = hn::decide_extension(hn::parse_bundle(dt), hn::parse_bundle(et),
                                          hn::parse_bundle(ft));
  emit(hn::decision_json(dec));
}

void cmd_enumerate(long long rank, long long degree, const std::string& lo,
                   const std::string& hi) {
  hn::SlopeWindow w{hn::parse_rational(lo), hn::parse_rational(hi), std::max(rank, 1LL)};
  if (w.lo > w.hi) throw hn::DomainError("invalid-argument", "window lo exceeds hi");
  auto bundles = hn::enumerate_bundles(rank, degree, w);
  json names = json::array();
  for (const auto& b : bundles) names.push_back(hn::to_text(b));
  emit({{"rank", rank},
        {"degree", degree},
        {"lo", w.lo.str()},
        {"hi", w.hi.str()},
        {"count", bundles.size()},
        {"bundles", names}});
}

void finish_verify(const hn::VerifyReport& rep) {
  emit(hn::verify_report_json(rep));
  if (!rep.preconditions_ok)
    g_exit = 1;
  else if (!rep.ok())
    g_exit = 3;
}

void cmd_verify_step1(const std::string& dt, const std::string& et,
                      const std::string& ft) {
  finish_verify(hn::verify_key_inequality_kernel(
      hn::parse_bundle(dt), hn::parse_bundle(et), hn::parse_bundle(ft)));
}

void cmd_verify_step2(const std::string& dt, const std::string& et,
                      const std::string& ft, const std::string& lo,
                      const std::string& hi) {
  hn::Bundle d = hn::parse_bundle(dt);
  hn::Bundle e = hn::parse_bundle(et);
  hn::Bundle f = hn::parse_bundle(ft);
  hn::SlopeWindow w = hn::default_extension_window(d, f);
  if (!lo.empty()) w.lo = hn::parse_rational(lo);
  if (!hi.empty()) w.hi = hn::parse_rational(hi);
  finish_verify(hn::verify_key_inequality_extension(d, e, f, w));
}

void cmd_verify_kernel_lemma(const std::string& dt, const std::string& ft,
                             const std::string& kt) {
  hn::KernelLemmaReport rep = hn::check_nonsemistable_kernel_lemma(
      hn::parse_bundle(dt), hn::parse_bundle(ft), hn::parse_bundle(kt));
  emit(hn::kernel_lemma_json(rep));
  if (!rep.preconditions_ok)
    g_exit = 1;
  else if (!rep.ok())
    g_exit = 3;
}

void cmd_verify_sweep(long long max_rank, const std::string& lo, const std::string& hi) {
  hn::SlopeWindow w{hn::parse_rational(lo), hn::parse_rational(hi), max_rank};
  if (w.lo > w.hi) throw hn::DomainError("invalid-argument", "window lo exceeds hi");
  hn::SweepStats s1 = hn::sweep_step1(w);
  hn::SweepStats s2 = hn::sweep_step2(w);
  hn::SweepStats s3 = hn::sweep_kernel_lemma(w);
  emit({{"max_rank", max_rank},
        {"lo", w.lo.str()},
        {"hi", w.hi.str()},
        {"step1", hn::sweep_json(s1)},
        {"step2", hn::sweep_json(s2)},
        {"kernel_lemma", hn::sweep_json(s3)},
        {"ok", s1.ok() && s2.ok() && s3.ok()}});
  if (!(s1.ok() && s2.ok() && s3.ok())) g_exit = 3;
}

void cmd_plot(const std::vector<std::string>& texts, const std::string& svg_path,
              bool ascii) {
  std::vector<hn::HNPolygon> polygons;
  std::vector<std::string> labels;
  for (const auto& t : texts) {
    hn::Bundle v = hn::parse_bundle(t);
    polygons.push_back(hn::polygon_of(v));
    labels.push_back(hn::to_text(v));
  }
  if (!svg_path.empty()) {
    std::ofstream out(svg_path);
    if (!out) throw hn::DomainError("io-error", "cannot write " + svg_path);
    out << hn::render_svg(polygons, labels);
    emit({{"svg", svg_path}, {"polygons", polygons.size()}});
  }
  if (ascii || svg_path.empty()) std::cout << hn::render_ascii(polygons, labels);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harder-Narasimhan polygon calculus for vector bundles on the "
               "Fargues-Fontaine curve"};
  app.require_subcommand(1);

  // info
  std::string info_bundle;
  auto* info = app.add_subcommand("info", "rank, degree, slopes, HN vectors, polygon");
  info->add_option("bundle", info_bundle, "bundle, e.g. \"O(1/2)^2 + O(-1)\"")->required();
  info->callback([&] { cmd_info(info_bundle); });

  // op dual|sum|tensor|twist
  auto* op = app.add_subcommand("op", "bundle algebra");
  op->require_subcommand(1);
  std::string op_a, op_b, op_lambda;
  auto* op_dual = op->add_subcommand("dual", "dual bundle");
  op_dual->add_option("bundle", op_a)->required();
  op_dual->callback([&] { emit_op("dual", hn::dual(hn::parse_bundle(op_a))); });
  auto* op_sum = op->add_subcommand("sum", "direct sum");
  op_sum->add_option("left", op_a)->required();
  op_sum->add_option("right", op_b)->required();
  op_sum->callback([&] {
    emit_op("sum", hn::direct_sum(hn::parse_bundle(op_a), hn::parse_bundle(op_b)));
  });
  auto* op_tensor = op->add_subcommand("tensor", "tensor product");
  op_tensor->add_option("left", op_a)->required();
  op_tensor->add_option("right", op_b)->required();
  op_tensor->callback([&] {
    emit_op("tensor", hn::tensor(hn::parse_bundle(op_a), hn::parse_bundle(op_b)));
  });
  auto* op_twist = op->add_subcommand("twist", "twist by O(lambda)");
  op_twist->add_option("bundle", op_a)->required();
  op_twist->add_option("lambda", op_lambda, "slope, e.g. -1/2")->required();
  op_twist->callback([&] {
    emit_op("twist", hn::twist(hn::parse_bundle(op_a), hn::parse_rational(op_lambda)));
  });

  // deg hom|aut|pos
  auto* deg = app.add_subcommand("deg", "positive-part degree calculus");
  deg->require_subcommand(1);
  static std::string deg_e, deg_f;
  bool deg_oracle = false;
  auto* deg_hom = deg->add_subcommand("hom", "deg(e* (x) f)^{>=0}");
  deg_hom->add_option("e", deg_e)->required();
  deg_hom->add_option("f", deg_f)->required();
  deg_hom->add_flag("--oracle", deg_oracle, "cross-check against the tensor-expansion route");
  deg_hom->callback([&] { cmd_deg("hom", {deg_e, deg_f}, deg_oracle); });
  auto* deg_aut = deg->add_subcommand("aut", "deg(v* (x) v)^{>=0}");
  deg_aut->add_option("v", deg_e)->required();
  deg_aut->add_flag("--oracle", deg_oracle, "cross-check against twice the chord area");
  deg_aut->callback([&] { cmd_deg("aut", {deg_e}, deg_oracle); });
  auto* deg_pos = deg->add_subcommand("pos", "deg(v)^{>=0}");
  deg_pos->add_option("v", deg_e)->required();
  deg_pos->add_flag("--oracle", deg_oracle, "recompute via truncation (same route)");
  deg_pos->callback([&] { cmd_deg("pos", {deg_e}, deg_oracle); });

  // dominates
  auto* dom = app.add_subcommand("dominates", "slopewise dominance of e over f");
  static std::string dom_e, dom_f;
  bool dom_strong = false, dom_poly = false;
  dom->add_option("e", dom_e)->required();
  dom->add_option("f", dom_f)->required();
  dom->add_flag("--strong", dom_strong, "strong slopewise dominance");
  dom->add_flag("--via-polygons", dom_poly, "decide on the HN polygons");
  dom->callback([&] { cmd_dominates(dom_e, dom_f, dom_strong, dom_poly); });

  // dims
  auto* dims = app.add_subcommand("dims", "moduli dimensions");
  dims->require_subcommand(1);
  static std::string dims_a, dims_b, dims_c;
  auto* dims_hom = dims->add_subcommand("hom", "dim Hom(e, f)");
  dims_hom->add_option("e", dims_a)->required();
  dims_hom->add_option("f", dims_b)->required();
  dims_hom->callback([&] { cmd_dims("hom", {dims_a, dims_b}); });
  auto* dims_aut = dims->add_subcommand("aut", "dim Aut(v)");
  dims_aut->add_option("v", dims_a)->required();
  dims_aut->callback([&] { cmd_dims("aut", {dims_a}); });
  auto* dims_h1 = dims->add_subcommand("h1", "dim H^1(e), mu_max(e) < 0");
  dims_h1->add_option("e", dims_a)->required();
  dims_h1->callback([&] { cmd_dims("h1", {dims_a}); });
  auto* dims_ss = dims->add_subcommand("surj-stratum", "dim Surj(e, f) with kernel type k");
  dims_ss->add_option("e", dims_a)->required();
  dims_ss->add_option("f", dims_b)->required();
  dims_ss->add_option("k", dims_c)->required();
  dims_ss->callback([&] { cmd_dims("surj-stratum", {dims_a, dims_b, dims_c}); });
  auto* dims_es = dims->add_subcommand("ext-stratum", "dim Ext(f, d) with middle type e");
  dims_es->add_option("d", dims_a)->required();
  dims_es->add_option("f", dims_b)->required();
  dims_es->add_option("e", dims_c)->required();
  dims_es->callback([&] { cmd_dims("ext-stratum", {dims_a, dims_b, dims_c}); });
  auto* dims_et = dims->add_subcommand("ext-total", "dim Ext(f, d), mu_max(d) < mu_min(f)");
  dims_et->add_option("f", dims_a)->required();
  dims_et->add_option("d", dims_b)->required();
  dims_et->callback([&] { cmd_dims("ext-total", {dims_a, dims_b}); });

  // decide
  auto* decide = app.add_subcommand("decide", "existence of 0 -> d -> e -> f -> 0");
  static std::string dec_d, dec_e, dec_f;
  decide->add_option("d", dec_d)->required();
  decide->add_option("e", dec_e)->required();
  decide->add_option("f", dec_f)->required();
  decide->callback([&] { cmd_decide(dec_d, dec_e, dec_f); });

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "HN types of fixed rank and degree");
  static long long enum_rank = 0, enum_degree = 0;
  static std::string enum_lo, enum_hi;
  enumerate->add_option("rank", enum_rank)->required();
  enumerate->add_option("degree", enum_degree)->required();
  enumerate->add_option("--lo", enum_lo, "slope lower bound")->required();
  enumerate->add_option("--hi", enum_hi, "slope upper bound")->required();
  enumerate->callback([&] { cmd_enumerate(enum_rank, enum_degree, enum_lo, enum_hi); });

  // verify
  auto* verify = app.add_subcommand("verify", "verification harnesses");
  verify->require_subcommand(1);
  static std::string ver_a, ver_b, ver_c, ver_lo, ver_hi;
  static long long ver_max_rank = 3;
  auto* ver1 = verify->add_subcommand("step1", "kernel-stratum inequality for one triple");
  ver1->add_option("d", ver_a)->required();
  ver1->add_option("e", ver_b)->required();
  ver1->add_option("f", ver_c)->required();
  ver1->callback([&] { cmd_verify_step1(ver_a, ver_b, ver_c); });
  auto* ver2 = verify->add_subcommand("step2", "extension-stratum inequality for one triple");
  ver2->add_option("d", ver_a)->required();
  ver2->add_option("e", ver_b)->required();
  ver2->add_option("f", ver_c)->required();
  ver2->add_option("--lo", ver_lo, "candidate slope lower bound (default: forced window)");
  ver2->add_option("--hi", ver_hi, "candidate slope upper bound (default: forced window)");
  ver2->callback([&] { cmd_verify_step2(ver_a, ver_b, ver_c, ver_lo, ver_hi); });
  auto* ver3 = verify->add_subcommand("kernel-lemma", "polygon comparison for a nonsemistable kernel");
  ver3->add_option("d", ver_a)->required();
  ver3->add_option("f", ver_b)->required();
  ver3->add_option("k", ver_c)->required();
  ver3->callback([&] { cmd_verify_kernel_lemma(ver_a, ver_b, ver_c); });
  auto* versweep = verify->add_subcommand("sweep", "exhaustive sweeps over a slope window");
  versweep->add_option("--max-rank", ver_max_rank, "rank bound")->required();
  versweep->add_option("--lo", ver_lo, "slope lower bound")->required();
  versweep->add_option("--hi", ver_hi, "slope upper bound")->required();
  versweep->callback([&] { cmd_verify_sweep(ver_max_rank, ver_lo, ver_hi); });

  // plot
  auto* plot = app.add_subcommand("plot", "render HN polygons");
  static std::vector<std::string> plot_bundles;
  static std::string plot_svg;
  bool plot_ascii = false;
  plot->add_option("bundles", plot_bundles, "one or more bundles")->required();
  plot->add_option("--svg", plot_svg, "write an SVG file");
  plot->add_flag("--ascii", plot_ascii, "print a character plot");
  plot->callback([&] { cmd_plot(plot_bundles, plot_svg, plot_ascii); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const hn::ParseError& e) {
    std::cerr << "parse-error: " << e.what() << "\n";
    return 2;
  } catch (const hn::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return g_exit;
}
