#include "brim/script.hpp"
#include "brim/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

// Semigroup instance where the fiber bound fails in dimension 1 while the
// fiber cone of the ideal itself is Cohen-Macaulay.
constexpr const char* kExampleScript =
    "ring R = semigroup(7, 15, 17, 33)\n"
    "ideal I = (t^7, t^17, t^33)\n"
    "ideal J = (t^7)\n"
    "module M = I (+) I\n"
    "compute invariants I\n"
    "compute invariants M\n"
    "check vasconcelos M\n"
    "check cm_fiber I reduction J\n";

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw brim::Error(brim::errc::parse_error, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

int write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(out_path);
  if (!file) {
    std::cerr << "cannot write '" << out_path << "'\n";
    return 2;
  }
  file << text;
  return 0;
}

std::string sweep_summary_text(const brim::Json& document) {
  std::ostringstream out;
  const brim::Json& summary = document.at("summary");
  out << "instances: " << summary.at("instances").get<int>() << '\n';
  out << "verdicts:";
  for (auto it = summary.at("verdicts").begin(); it != summary.at("verdicts").end(); ++it)
    out << ' ' << it.key() << '=' << it.value().get<int>();
  out << '\n';
  out << "errors: " << summary.at("errors").get<int>()
      << ", fit failures: " << summary.at("fit_failures").get<int>() << '\n';
  if (summary.contains("sally_leading_signs")) {
    const brim::Json& signs = summary.at("sally_leading_signs");
    out << "sally leading signs: negative=" << signs.at("negative").get<int>()
        << " zero=" << signs.at("zero").get<int>()
        << " positive=" << signs.at("positive").get<int>() << '\n';
  }
  std::vector<int> violated;
  for (const auto& entry : document.at("instances")) {
    if (!entry.contains("reports")) continue;
    for (const auto& report : entry.at("reports"))
      if (report.at("verdict") == "VIOLATED") violated.push_back(entry.at("index").get<int>());
  }
  if (!violated.empty()) {
    out << "violated instances:";
    for (int idx : violated) out << ' ' << idx;
    out << '\n';
  }
  out << "exit code: " << document.at("exit_code").get<int>() << '\n';
  return out.str();
}

int run_script_text(const std::string& text, const brim::CheckOptions& options, bool as_json,
                    const std::string& out_path) {
  const brim::SessionScript script = brim::parse_script(text);
  const brim::RunResult run = brim::run_script(script, options);
  const std::string rendered =
      as_json ? run.document.dump(2) + "\n" : brim::render_table(run);
  const int io = write_output(out_path, rendered);
  return io != 0 ? io : run.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Buchsbaum-Rim multiplicities, fiber cones, and reduction numbers"};
  app.set_version_flag("--version", std::string(brim::kVersionBanner));
  app.require_subcommand(1);

  std::string script_path;
  std::string out_path;
  bool as_json = false;
  long long nmax = 0;
  int verify_window = 3;
  long long smax = brim::kDefaultSMax;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--nmax", nmax, "largest n in the fit windows, 0 = automatic");
    cmd->add_option("--verify-window", verify_window, "points re-checked behind each fit");
    cmd->add_option("--smax", smax, "power budget for reduction searches");
    cmd->add_flag("--json", as_json, "emit the JSON document instead of tables");
    cmd->add_option("--out", out_path, "write output to this file instead of stdout");
  };

  CLI::App* run_cmd = app.add_subcommand("run", "execute a .brim script");
  run_cmd->add_option("script", script_path, "script file, or - for stdin")->required();
  add_common(run_cmd);

  bool show_example = false;
  CLI::App* example_cmd =
      app.add_subcommand("example", "run the built-in semigroup regression script");
  example_cmd->add_flag("--show", show_example, "print the script instead of running it");
  add_common(example_cmd);

  brim::SweepConfig config;
  std::vector<std::string> checks;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "run checks over generated instances");
  sweep_cmd->add_option("--dim", config.dim, "ring dimension")->check(CLI::Range(1, 3));
  sweep_cmd->add_option("--rank", config.rank, "module rank")->check(CLI::Range(1, 4));
  sweep_cmd->add_option("--count", config.count, "number of instances")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--seed", config.seed, "RNG seed");
  sweep_cmd->add_option("--check", checks,
                        "check to run (repeatable): vasconcelos, northcott, cm_fiber, "
                        "reduction_bound, sum_formulas, mixed_sum, prop_decomposition");
  sweep_cmd->add_flag("--mixed", config.mixed, "generate (I, J) reduction pairs");
  sweep_cmd->add_option("--max-exponent", config.max_exponent, "exponent box for generators")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--max-extra", config.max_extra_generators,
                        "extra generators beyond the pure powers")
      ->check(CLI::NonNegativeNumber);
  add_common(sweep_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  brim::CheckOptions options;
  options.fit.n_max = nmax;
  options.fit.verify_window = verify_window;
  options.s_max = smax;

  try {
    if (run_cmd->parsed()) {
      return run_script_text(read_input(script_path), options, as_json, out_path);
    }
    if (example_cmd->parsed()) {
      if (show_example) return write_output(out_path, kExampleScript);
      return run_script_text(kExampleScript, options, as_json, out_path);
    }
    if (!checks.empty()) config.checks = checks;
    config.options = options;
    const brim::SweepResult result = brim::run_sweep(config);
    const std::string rendered =
        as_json ? result.document.dump(2) + "\n" : sweep_summary_text(result.document);
    const int io = write_output(out_path, rendered);
    return io != 0 ? io : result.exit_code;
  } catch (const brim::ParseError& e) {
    std::cerr << "parse error at line " << e.line() << ", column " << e.column() << ": "
              << e.what() << '\n';
    return 2;
  } catch (const brim::Error& e) {
    std::cerr << brim::errc_name(e.code()) << ": " << e.what() << '\n';
    return e.code() == brim::errc::not_stabilized ? 3 : 2;
  }
}
