#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "casimir/casimir.h"

namespace cli {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Mode { Point, Sweep, Compare, Convergence, Selftest };
enum class Format { Csv, Json };

struct BcPair {
  casimir_bc inner;
  casimir_bc outer;
};

struct RunConfig {
  Mode mode = Mode::Point;
  std::vector<int> dims{3};
  std::vector<double> eps{0.1};
  std::vector<double> temps{0.0};
  std::vector<BcPair> bcs{{CASIMIR_PC, CASIMIR_PC}};
  std::vector<casimir_channel> channels{CASIMIR_TOTAL};
  double a1 = 1.0;
  double rel_tol = 1e-9;
  long l_max = 20000;
  long p_max = 1000000;
  bool force = false;
  bool classical = false;
  Format format = Format::Csv;
  std::string out;
  std::string golden;
  int threads = 1;

  // Resolved settings as key/value text, excluding thread count and paths.
  std::vector<std::pair<std::string, std::string>> describe() const;
};

// Raw settings keyed by long option name, in the order given.
using RawSettings = std::map<std::string, std::string>;

// Reads key = value lines; '#' starts a comment.
RawSettings read_config_file(const std::string& path);

RunConfig resolve(const RawSettings& raw);

std::string to_string(Mode m);
std::string bc_name(casimir_bc b);
std::string channel_name(casimir_channel c);

// Known keys, also the long flag names.
const std::vector<std::string>& known_keys();

}  // namespace cli
