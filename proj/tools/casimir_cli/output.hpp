#pragma once

#include <ostream>
#include <string>

#include "config.hpp"
#include "runner.hpp"

namespace cli {

inline constexpr const char* kToolVersion = "1.0.0";

void write_csv(std::ostream& os, const RunConfig& c, const RunOutput& out);
void write_json(std::ostream& os, const RunConfig& c, const RunOutput& out);

struct GoldenResult {
  bool match = true;
  std::string message;
};

// Compares result rows with a stored CSV or JSON file. Tolerances come from
// "# golden-rel-tol=" / "# golden-abs-tol=" lines (JSON: metadata fields).
GoldenResult compare_golden(const std::string& path, const RunOutput& out);

}  // namespace cli
