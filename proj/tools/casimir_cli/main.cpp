#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "casimir/casimir.h"
#include "json.hpp"
#include "config.hpp"
#include "output.hpp"
#include "runner.hpp"

namespace {

enum Exit { kOk = 0, kConfig = 1, kNumerical = 2, kGolden = 3 };

int run_selftest(const cli::RunConfig& c, std::ostream& os) {
  casimir_selftest* t = nullptr;
  if (casimir_selftest_run(1, 1, &t) != CASIMIR_OK) {
    std::cerr << "selftest: " << casimir_last_error() << "\n";
    return kNumerical;
  }
  const bool ok = casimir_selftest_passed(t) != 0;
  if (c.format == cli::Format::Json) {
    nlohmann::ordered_json j;
    j["passed"] = ok;
    j["report"] = casimir_selftest_report(t);
    casimir_log_reading sel;
    double improvement = 0.0;
    int decisive = 0;
    if (casimir_selftest_log_reading(t, &sel, &improvement, &decisive) == CASIMIR_OK) {
      j["log_reading"] = {{"selected", sel == CASIMIR_LOG_EPS2 ? "eps^2 ln eps" : "ln eps"},
                          {"improvement", improvement},
                          {"decisive", decisive != 0}};
    }
    os << j.dump(2) << "\n";
  } else {
    os << casimir_selftest_report(t);
    os << (ok ? "\nselftest: all checks passed\n" : "\nselftest: FAILURES\n");
  }
  casimir_selftest_destroy(t);
  return ok ? kOk : kNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casimir free energy of concentric hyperspheres"};
  app.set_help_flag("-h,--help", "Show help");
  std::string config_path;
  app.add_option("--config", config_path, "Flat key = value settings file; flags override it");

  std::map<std::string, std::string> flags;
  const std::map<std::string, std::string> help{
      {"mode", "point | sweep | compare | convergence | selftest"},
      {"dim", "Comma list of spatial dimensions"},
      {"eps", "Comma list, or lo:hi:n log-spaced range, of (a2-a1)/a1"},
      {"temp", "Comma list or lo:hi:n range of a1 T"},
      {"bc", "inner,outer with pc or ip; several pairs separated by ';', or all"},
      {"channel", "Comma list of te, tm, total"},
      {"a1", "Inner radius"},
      {"rel-tol", "Relative tolerance of the exact sums"},
      {"l-max", "Hard cap on the angular momentum sum"},
      {"p-max", "Hard cap on the Matsubara sum"},
      {"force", "Also compute -dE/dd (true/false)"},
      {"classical", "At T > 0 use only the p = 0 term for exact rows (true/false)"},
      {"format", "csv | json"},
      {"out", "Output path (default stdout)"},
      {"golden", "Compare rows with a stored result file; exit 3 on mismatch"},
      {"threads", "Worker threads over grid points"}};
  for (const auto& key : cli::known_keys()) app.add_option("--" + key, flags[key], help.at(key));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfig;
  }

  cli::RunConfig config;
  try {
    cli::RawSettings raw;
    if (!config_path.empty()) raw = cli::read_config_file(config_path);
    for (const auto& key : cli::known_keys())
      if (app.count("--" + key) > 0) raw[key] = flags[key];
    config = cli::resolve(raw);
  } catch (const cli::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  }

  std::ofstream file;
  if (!config.out.empty()) {
    file.open(config.out);
    if (!file) {
      std::cerr << "error: cannot write '" << config.out << "'\n";
      return kConfig;
    }
  }
  std::ostream& os = config.out.empty() ? std::cout : file;

  if (config.mode == cli::Mode::Selftest) return run_selftest(config, os);

  const cli::RunOutput out =
      config.mode == cli::Mode::Convergence ? cli::run_convergence(config) : cli::run_grid(config);
  if (config.format == cli::Format::Json)
    cli::write_json(os, config, out);
  else
    cli::write_csv(os, config, out);
  os.flush();

  for (const auto& e : out.errors) std::cerr << "warning: " << e << "\n";

  if (!config.golden.empty()) {
    const auto g = cli::compare_golden(config.golden, out);
    std::cerr << g.message << "\n";
    if (!g.match) return kGolden;
  }
  if (out.nonconverged || !out.errors.empty()) return kNumerical;
  return kOk;
}
