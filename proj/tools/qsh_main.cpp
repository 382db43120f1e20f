// Command-line front end. Emits machine-readable JSON verification reports;
// exit 0 on success, 1 on failed checks, 2 on parse/validation errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "qsh/cli.hpp"

namespace {

int emit(const qsh::CliResult& result, const std::string& out_path, bool pretty) {
  std::string text = qsh::render_report(result.report, pretty);
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    out << text;
  }
  std::cout << text;
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for quaternionic skew-Hermitian transvection algebras"};
  app.require_subcommand(1);

  std::string out_path;
  bool pretty = false;
  app.add_option("--out", out_path, "also write the JSON report to this path");
  app.add_flag("--pretty", pretty, "indent the JSON output");

  std::string verify_tag, tau_file;
  CLI::App* verify = app.add_subcommand("verify", "build a case and verify every axiom");
  verify->add_option("tag", verify_tag, "catalog tag, e.g. ns-even:2,1,0");
  verify->add_option("--tau-file", tau_file, "JSON file with a tau element");

  int n = 2, grid_height = 4;
  std::string grid_range = "2";
  CLI::App* classify = app.add_subcommand("classify", "normal-form scan against the catalog");
  classify->add_option("--n", n, "quaternionic dimension")->required();
  classify->add_option("--grid-height", grid_height, "max numerator/denominator of grid rationals");
  classify->add_option("--grid-range", grid_range, "grid interval is [-range, range]");

  int torsion_n = 0;
  std::string torsion_tag;
  CLI::App* torsion = app.add_subcommand("torsion", "verify the conformally-symplectic example");
  torsion->add_option("--n", torsion_n, "quaternionic dimension");
  torsion->add_option("tag", torsion_tag, "alternatively: torsion:n");

  int list_n = 2, list_p = -1, list_q = -1;
  CLI::App* catalog = app.add_subcommand("catalog-list", "list admissible cases with expected data");
  catalog->add_option("--n", list_n, "quaternionic dimension")->required();
  catalog->add_option("--p", list_p, "filter on p");
  catalog->add_option("--q", list_q, "filter on q");

  std::string killing_tag;
  CLI::App* killing = app.add_subcommand("killing", "killing/trace form report for a case");
  killing->add_option("tag", killing_tag, "catalog tag")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  qsh::CliResult result;
  try {
    if (verify->parsed()) {
      if (verify_tag.empty() == tau_file.empty()) {
        std::cerr << "verify needs exactly one of: tag, --tau-file\n";
        return 2;
      }
      result = verify_tag.empty() ? qsh::cmd_verify_file(tau_file) : qsh::cmd_verify_tag(verify_tag);
    } else if (classify->parsed()) {
      qsh::Rational range;
      try {
        range = qsh::rat_from_string(grid_range);
      } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
      }
      result = qsh::cmd_classify(n, grid_height, range);
    } else if (torsion->parsed()) {
      if (!torsion_tag.empty()) {
        try {
          torsion_n = qsh::parse_torsion_tag(torsion_tag);
        } catch (const std::invalid_argument& e) {
          std::cerr << e.what() << "\n";
          return 2;
        }
      } else if (torsion_n == 0) {
        std::cerr << "torsion needs --n or a torsion:n tag\n";
        return 2;
      }
      result = qsh::cmd_torsion(torsion_n);
    } else if (catalog->parsed()) {
      result = qsh::cmd_catalog_list(list_n);
      if (result.exit_code == 0 && (list_p >= 0 || list_q >= 0)) {
        qsh::Json filtered = qsh::Json::array();
        for (const qsh::Json& c : result.report.at("cases")) {
          std::string tag = c.at("tag").get<std::string>();
          qsh::CaseTag parsed = qsh::parse_tag(tag);
          if ((list_p < 0 || parsed.p == list_p) && (list_q < 0 || parsed.q == list_q))
            filtered.push_back(c);
        }
        result.report["cases"] = filtered;
      }
    } else if (killing->parsed()) {
      result = qsh::cmd_killing(killing_tag);
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return emit(result, out_path, pretty);
}
