#pragma once

#include <string>
#include <vector>

#include "casimir/asymptotics/expansions.hpp"

namespace casimir::selftest {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

// Fit of the exact D = 3 mixed classical term against both readings of its ln(eps) term.
struct LogReadingReport {
  std::vector<double> eps;
  std::vector<double> exact_relative;        // classical_term / PFA
  std::vector<double> residual_eps2_log;     // exact - series with eps^2 ln eps
  std::vector<double> residual_as_printed;   // exact - series with ln eps
  asymptotics::LogReading selected = asymptotics::LogReading::EpsSquaredLog;
  // Smallest ratio of the rejected to the selected residual over the eps grid.
  double improvement = 0.0;
  bool decisive = false;
};

struct SelftestOptions {
  bool log_reading_fit = true;
  bool exact_checks = true;
};

struct SelftestReport {
  std::vector<CheckResult> checks;
  LogReadingReport log_reading;
  bool log_reading_ran = false;

  bool all_passed() const;
};

LogReadingReport fit_log_reading();

SelftestReport run_selftest(const SelftestOptions& options = {});

std::string format_report(const SelftestReport& report);

}  // namespace casimir::selftest
