#pragma once

#include <optional>
#include <string>
#include <vector>

#include "config.hpp"

namespace cli {

struct ResultRow {
  int D = 3;
  double a1 = 1.0;
  double a2 = 1.0;
  double eps = 0.0;
  double T = 0.0;
  casimir_bc bc_inner = CASIMIR_PC;
  casimir_bc bc_outer = CASIMIR_PC;
  casimir_channel channel = CASIMIR_TOTAL;
  std::string method;  // exact, pfa, expansion
  double energy = 0.0;
  std::optional<double> force;
  long l_used = 0;
  long p_used = 0;
  double error_estimate = 0.0;
  std::string status = "ok";  // ok or nonconverged
  // compare mode, exact rows only
  std::optional<double> exact_over_pfa;
  std::optional<double> first_correction;
};

struct ConvergenceRow {
  int D = 3;
  double eps = 0.0;
  double T = 0.0;
  casimir_bc bc_inner = CASIMIR_PC;
  casimir_bc bc_outer = CASIMIR_PC;
  casimir_channel channel = CASIMIR_TOTAL;
  double rel_tol = 0.0;
  long l_used = 0;
  long p_used = 0;
  double energy = 0.0;
  double error_estimate = 0.0;
  std::optional<double> delta;
  std::string status = "ok";
};

struct RunOutput {
  std::vector<ResultRow> rows;
  std::vector<ConvergenceRow> convergence;
  bool nonconverged = false;
  std::vector<std::string> errors;
};

RunOutput run_grid(const RunConfig& config);
RunOutput run_convergence(const RunConfig& config);

// Row order: D, eps, T, channel, method, then boundary pair.
void sort_rows(std::vector<ResultRow>& rows);

int method_rank(const std::string& method);

}  // namespace cli
