#pragma once

#include <string>

#include "qsh/json_io.hpp"

namespace qsh {

/// Command drivers behind the qsh binary. Exit codes: 0 success, 1 failed
/// checks / unmatched outcomes, 2 parse or validation failure. Reports are
/// deterministic: identical inputs produce byte-identical JSON.
struct CliResult {
  int exit_code = 0;
  Json report;
};

CliResult cmd_verify_tag(const std::string& tag);
CliResult cmd_verify_file(const std::string& path);
CliResult cmd_classify(int n, int grid_height, const Rational& grid_range);
CliResult cmd_torsion(int n);
CliResult cmd_catalog_list(int n);
CliResult cmd_killing(const std::string& tag);

/// Serialization used by the binary: sorted keys, stable layout.
std::string render_report(const Json& j, bool pretty);

}  // namespace qsh
