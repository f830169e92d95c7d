// gllcalc: index and generalized Loewy length of hypersurface and numerical
// semigroup rings over finite fields.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gll/error.hpp"
#include "gll/parser.hpp"
#include "gll/report.hpp"

namespace {

using namespace gll;

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return cli::kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << out_path << "\n";
    return cli::kExitUsage;
  }
  file << text;
  return cli::kExitOk;
}

std::vector<std::uint64_t> parse_gens(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || item.front() == '-')
      throw Error(ErrorKind::SyntaxError, "bad generator '" + item + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Index and generalized Loewy length over finite fields"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Write the report to FILE instead of stdout");

  auto* analyze = app.add_subcommand("analyze", "Analyze k[[x,y]]/(f)");
  std::string field_text, f_text;
  cli::AnalyzeOptions aopts;
  analyze->add_option("--field", field_text, "p, p^e or q")->required();
  analyze->add_option("--f", f_text, "Defining equation, e.g. 'x*y*(x+y)'")->required();
  analyze->add_option("--max-t", aopts.max_t, "Largest degree tried for a gr-regular form")->capture_default_str();
  analyze->add_flag("--exact", aopts.exact, "Run the exhaustive witness search");
  analyze->add_option("--max-g", aopts.max_g, "Largest level for --exact (default e+3)");
  analyze->add_option("--budget", aopts.budget, "Candidate budget for --exact")->capture_default_str();

  auto* semigroup = app.add_subcommand("semigroup", "Analyze k[H] for a numerical semigroup H");
  std::string gens_text;
  bool oracle = false;
  semigroup->add_option("--gens", gens_text, "Generators, e.g. 3,5")->required();
  semigroup->add_flag("--oracle", oracle, "Cross-check ggl by direct search");

  auto* scan = app.add_subcommand("scan", "Survey all forms of one degree up to linear changes");
  std::string scan_field;
  unsigned scan_order = 0;
  cli::ScanOptions sopts;
  scan->add_option("--field", scan_field, "p, p^e or q")->required();
  scan->add_option("--order", scan_order, "Degree e of the forms")->required();
  scan->add_option("--max-g", sopts.max_g, "Exhaustive search level when bounds differ");
  scan->add_option("--max-t", sopts.max_t)->capture_default_str();
  scan->add_option("--budget", sopts.budget)->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check every closed form and example family");
  std::string only, format = "table";
  bool inject = false;
  verify->add_option("--only", only, "Run one group")
      ->check(CLI::IsMember(cli::verify_groups()));
  verify->add_option("--format", format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  verify->add_flag("--inject-mismatch", inject, "Test mode: corrupt one expected value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitUsage;
  }

  try {
    if (*analyze) {
      const auto k = cli::parse_field(field_text);
      const auto f = cli::parse_poly(f_text, k);
      return emit(cli::analyze(f, aopts).dump(2) + "\n", out_path);
    }
    if (*semigroup) {
      return emit(cli::semigroup_report(parse_gens(gens_text), oracle).dump(2) + "\n", out_path);
    }
    if (*scan) {
      const auto k = cli::parse_field(scan_field);
      std::ostringstream ss;
      cli::write_scan_csv(ss, cli::scan_forms(k, scan_order, sopts));
      return emit(ss.str(), out_path);
    }
    if (*verify) {
      cli::VerifyOptions vopts;
      if (!only.empty()) vopts.only = only;
      vopts.inject_mismatch = inject;
      const auto rows = cli::run_verification(vopts);
      std::ostringstream ss;
      if (format == "csv") cli::write_rows_csv(ss, rows);
      else if (format == "json") ss << cli::rows_json(rows).dump(2) << "\n";
      else cli::write_rows_table(ss, rows);
      const int code = emit(ss.str(), out_path);
      if (code != cli::kExitOk) return code;
      return cli::all_rows_pass(rows) ? cli::kExitOk : cli::kExitMismatch;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::SearchSpaceTooLarge ? cli::kExitBudget : cli::kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return cli::kExitMismatch;
  }
  return cli::kExitUsage;
}
