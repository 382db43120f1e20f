#include "qsh/cli.hpp"

#include <fstream>
#include <sstream>

namespace qsh {

static CliResult parse_error(const std::string& msg) {
  return CliResult{2, Json{{"error", msg}}};
}

static CliResult verify_tila(const Tila& t, const CoordinateLabels* labels,
                             const std::string& tag) {
  Json j = verification_record(t, labels);
  j["tag"] = tag.empty() ? Json(nullptr) : Json(tag);
  return CliResult{j["pass"].get<bool>() ? 0 : 1, j};
}

CliResult cmd_verify_tag(const std::string& tag) {
  try {
    CatalogCase cc = make_case(parse_tag(tag));
    Tila t = build_tila(cc.tau, cc.form);
    return verify_tila(t, cc.has_labels ? &cc.labels : nullptr, format_tag(cc.tag));
  } catch (const std::invalid_argument& e) {
    return parse_error(e.what());
  }
}

CliResult cmd_verify_file(const std::string& path) {
  try {
    std::ifstream in(path);
    if (!in) return parse_error("cannot open " + path);
    Json j;
    in >> j;
    TauElement tau = tau_from_json(j);
    SkewForm form = skewform_from_json(j.at("form"));
    if (!tau.symmetric())
      return parse_error("tau has C != 0; the verify command needs the symmetric form");
    if (!symtest(tau).pass)
      return CliResult{1, Json{{"error", "symtest failed"}, {"tag", nullptr}, {"pass", false}}};
    Tila t = build_tila(tau, form);
    return verify_tila(t, nullptr, "");
  } catch (const std::exception& e) {
    return parse_error(e.what());
  }
}

CliResult cmd_classify(int n, int grid_height, const Rational& grid_range) {
  if (n < 2) return parse_error("classify needs n > 1");
  if (grid_height < 1 || grid_range <= 0) return parse_error("bad grid parameters");
  Grid grid{grid_height, grid_range};
  std::vector<ClassOutcome> outcomes = classify_scan(n, grid);
  Json jout = Json::array();
  Json unmatched = Json::array();
  for (const ClassOutcome& o : outcomes) {
    jout.push_back(to_json(o));
    if (o.matched_tag == "unmatched") unmatched.push_back(to_json(o.normalized));
  }
  Json j{{"n", n},
         {"grid", Json{{"height", grid_height}, {"range", rat_to_string(grid_range)}}},
         {"outcomes", jout},
         {"unmatched", unmatched}};
  return CliResult{unmatched.empty() ? 0 : 1, j};
}

CliResult cmd_torsion(int n) {
  if (n < 2) return parse_error("torsion needs n >= 2");
  TorsionExample ex = torsion_example(n);
  TorsionReport tr = torsion_coefficient(ex.tauhat, ex.form, ex.m_basis);
  SolvableReport sr = solvable_subalgebra_report(ex.tauhat, ex.form, ex.m_basis);
  Json j{{"n", n},
         {"lambda", to_json(tr.lambda)},
         {"on_line", tr.on_line},
         {"closure_dim", sr.dim},
         {"solvable", sr.solvable}};
  return CliResult{tr.on_line ? 0 : 1, j};
}

static Json expected_json(const ExpectedReport& e) {
  return Json{{"dim_g", e.dim_g},
              {"dim_m", e.dim_m},
              {"dim_l", e.dim_l},
              {"semisimple_dim", e.semisimple_dim},
              {"radical_dim", e.radical_dim},
              {"r_qh_dim", e.r_qh_dim},
              {"r_deg_dim", e.r_deg_dim},
              {"ambient_degenerate", e.ambient_degenerate},
              {"radical_abelian", e.radical_abelian},
              {"linear_model", e.linear_model},
              {"iso_target", e.iso_target}};
}

CliResult cmd_catalog_list(int n) {
  if (n < 2) return parse_error("catalog-list needs n > 1");
  Json cases = Json::array();
  for (const CaseTag& tag : admissible_tags(n))
    cases.push_back(Json{{"tag", format_tag(tag)}, {"expected", expected_json(expected_report(tag))}});
  return CliResult{0, Json{{"n", n}, {"cases", cases}}};
}

CliResult cmd_killing(const std::string& tag) {
  try {
    CatalogCase cc = make_case(parse_tag(tag));
    Tila t = build_tila(cc.tau, cc.form);
    TraceFormReport trace = ambient_trace_form_on_m(t);
    RatMat b = killing_form(t.g);
    Json j{{"tag", format_tag(cc.tag)},
           {"intrinsic_rank", rank(b)},
           {"ambient_m_rank", trace.rank},
           {"degenerate", trace.degenerate}};
    return CliResult{0, j};
  } catch (const std::invalid_argument& e) {
    return parse_error(e.what());
  }
}

std::string render_report(const Json& j, bool pretty) {
  return j.dump(pretty ? 2 : -1) + "\n";
}

}  // namespace qsh
