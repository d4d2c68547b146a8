#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "logcsm/scenario.hpp"

namespace logcsm {
namespace {

struct OutputOptions {
  std::string format = "text";
  std::string out_path;
  bool timing = false;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "report format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", opts.out_path, "write the report to this path instead of stdout");
  cmd->add_flag("--timing", opts.timing, "include wall-clock duration (reports are then not reproducible)");
}

int emit(const Report& report, const OutputOptions& opts, std::ostream& out, std::ostream& err) {
  const std::string text = opts.format == "json" ? render_json(report.document) : render_text(report.document);
  if (opts.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << opts.out_path << "\n";
      return 2;
    }
    file << text;
  }
  return report.pass ? 0 : 1;
}

int run_scenario_text(const std::string& text, const OutputOptions& opts, std::ostream& out, std::ostream& err) {
  const Scenario scenario = parse_scenario(text);
  return emit(run_scenario(scenario, {opts.timing}), opts, out, err);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact CSM classes, compactly supported characteristic classes and Euler characteristics of SNC complements",
               "logcsm"};
  app.require_subcommand(1);

  OutputOptions compute_opts;
  std::string scenario_path;
  auto* compute = app.add_subcommand("compute", "evaluate a scenario file");
  compute->add_option("file", scenario_path, "scenario JSON file")->required();
  add_output_options(compute, compute_opts);

  OutputOptions run_opts;
  std::string catalog_name;
  auto* run = app.add_subcommand("run", "evaluate a built-in catalog scenario");
  run->add_option("name", catalog_name, "catalog entry name")->required();
  add_output_options(run, run_opts);

  OutputOptions verify_opts;
  SuiteBounds bounds;
  auto* verify = app.add_subcommand("verify", "randomized identity suite over products of projective spaces");
  verify->add_option("--seed", bounds.seed, "generator seed");
  verify->add_option("--max-dim", bounds.max_dim, "largest total ambient dimension (<= 3)");
  verify->add_option("--max-components", bounds.max_components, "largest number of components (<= 4)");
  verify->add_option("--max-multidegree", bounds.max_multidegree, "largest multidegree entry (<= 3)");
  verify->add_option("--count", bounds.count, "number of arrangements");
  add_output_options(verify, verify_opts);

  std::string show_name;
  auto* list = app.add_subcommand("catalog", "list built-in scenarios");
  list->add_option("--show", show_name, "print the scenario JSON of one entry");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out, err_out;
    const int code = app.exit(e, help_out, err_out);
    out << help_out.str();
    err << err_out.str();
    return code == 0 ? 0 : 2;
  }

  try {
    if (*compute) {
      std::ifstream file(scenario_path, std::ios::binary);
      if (!file) {
        err << "error: cannot open " << scenario_path << "\n";
        return 2;
      }
      std::stringstream buffer;
      buffer << file.rdbuf();
      return run_scenario_text(buffer.str(), compute_opts, out, err);
    }
    if (*run) {
      const CatalogEntry* entry = find_catalog_entry(catalog_name);
      if (!entry) {
        err << "error: unknown catalog entry '" << catalog_name << "' (see `logcsm catalog`)\n";
        return 2;
      }
      return run_scenario_text(entry->scenario_json, run_opts, out, err);
    }
    if (*verify) {
      return emit(verify_suite(bounds, {verify_opts.timing}), verify_opts, out, err);
    }
    if (*list) {
      if (!show_name.empty()) {
        const CatalogEntry* entry = find_catalog_entry(show_name);
        if (!entry) {
          err << "error: unknown catalog entry '" << show_name << "'\n";
          return 2;
        }
        out << entry->scenario_json << "\n";
        return 0;
      }
      std::size_t width = 0;
      for (const auto& e : catalog()) width = std::max(width, e.name.size());
      for (const auto& e : catalog()) {
        out << std::left << std::setw(static_cast<int>(width + 2)) << e.name << e.description << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace logcsm
