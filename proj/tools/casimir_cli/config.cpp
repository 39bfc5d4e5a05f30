#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  return out;
}

[[noreturn]] void fail(const std::string& key, const std::string& msg) {
  throw ConfigError("config field '" + key + "': " + msg);
}

double parse_double(const std::string& key, const std::string& s) {
  if (s.empty()) fail(key, "empty value");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (*end != '\0' || errno == ERANGE || !std::isfinite(v)) fail(key, "not a number: '" + s + "'");
  return v;
}

long parse_long(const std::string& key, const std::string& s) {
  if (s.empty()) fail(key, "empty value");
  char* end = nullptr;
  errno = 0;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (*end != '\0' || errno == ERANGE) fail(key, "not an integer: '" + s + "'");
  return v;
}

bool parse_bool(const std::string& key, const std::string& s) {
  if (s == "1" || s == "true" || s == "yes" || s == "on") return true;
  if (s == "0" || s == "false" || s == "no" || s == "off") return false;
  fail(key, "expected true or false, got '" + s + "'");
}

// Comma list, or lo:hi:n for n log-spaced values.
std::vector<double> parse_grid(const std::string& key, const std::string& s) {
  std::vector<double> out;
  if (s.find(':') != std::string::npos) {
    const auto parts = split(s, ':');
    if (parts.size() != 3) fail(key, "range must be lo:hi:n");
    const double lo = parse_double(key, parts[0]);
    const double hi = parse_double(key, parts[1]);
    const long n = parse_long(key, parts[2]);
    if (!(lo > 0.0) || !(hi > 0.0)) fail(key, "log-range bounds must be positive");
    if (n < 1) fail(key, "range needs n >= 1");
    if (n == 1) return {lo};
    for (long i = 0; i < n; ++i)
      out.push_back(lo * std::pow(hi / lo, double(i) / double(n - 1)));
    return out;
  }
  for (const auto& p : split(s, ',')) out.push_back(parse_double(key, p));
  if (out.empty()) fail(key, "empty list");
  return out;
}

casimir_bc parse_bc(const std::string& key, const std::string& s) {
  if (s == "pc") return CASIMIR_PC;
  if (s == "ip") return CASIMIR_IP;
  fail(key, "boundary condition must be pc or ip, got '" + s + "'");
}

// "pc,ip" or several pairs separated by ';', or "all".
std::vector<BcPair> parse_bcs(const std::string& key, const std::string& s) {
  if (s == "all")
    return {{CASIMIR_PC, CASIMIR_PC}, {CASIMIR_IP, CASIMIR_IP}, {CASIMIR_PC, CASIMIR_IP}, {CASIMIR_IP, CASIMIR_PC}};
  std::vector<BcPair> out;
  for (const auto& item : split(s, ';')) {
    const auto p = split(item, ',');
    if (p.size() != 2) fail(key, "expected inner,outer pair, got '" + item + "'");
    out.push_back({parse_bc(key, p[0]), parse_bc(key, p[1])});
  }
  if (out.empty()) fail(key, "empty list");
  return out;
}

// shortest form that reads back to the same double
std::string fmt_double(double v) {
  char buf[40];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

}  // namespace

const std::vector<std::string>& known_keys() {
  static const std::vector<std::string> keys{
      "mode", "dim",   "eps",       "temp",   "bc",  "channel", "a1",      "rel-tol",
      "l-max", "p-max", "force", "classical", "format", "out", "golden",  "threads"};
  return keys;
}

RawSettings read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  RawSettings raw;
  std::string line;
  int lineno = 0;
  const auto& keys = known_keys();
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = path + ":" + std::to_string(lineno);
    if (eq == std::string::npos) throw ConfigError(where + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    std::replace(key.begin(), key.end(), '_', '-');
    const std::string value = trim(line.substr(eq + 1));
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw ConfigError(where + ": unknown key '" + key + "'");
    if (raw.count(key)) throw ConfigError(where + ": duplicate key '" + key + "'");
    raw[key] = value;
  }
  return raw;
}

RunConfig resolve(const RawSettings& raw) {
  RunConfig c;
  auto has = [&](const char* k) { return raw.count(k) > 0; };
  auto get = [&](const char* k) -> const std::string& { return raw.at(k); };

  if (has("mode")) {
    const auto& m = get("mode");
    if (m == "point") c.mode = Mode::Point;
    else if (m == "sweep") c.mode = Mode::Sweep;
    else if (m == "compare") c.mode = Mode::Compare;
    else if (m == "convergence") c.mode = Mode::Convergence;
    else if (m == "selftest") c.mode = Mode::Selftest;
    else fail("mode", "unknown mode '" + m + "'");
  }
  if (has("dim")) {
    c.dims.clear();
    for (const auto& p : split(get("dim"), ',')) {
      const long d = parse_long("dim", p);
      if (d < 3 || d > 64) fail("dim", "dimension must lie in 3..64");
      c.dims.push_back(static_cast<int>(d));
    }
    if (c.dims.empty()) fail("dim", "empty list");
  }
  if (has("eps")) c.eps = parse_grid("eps", get("eps"));
  for (double e : c.eps)
    if (!(e > 0.0)) fail("eps", "values must be > 0");
  if (has("temp")) c.temps = parse_grid("temp", get("temp"));
  for (double t : c.temps)
    if (!(t >= 0.0)) fail("temp", "values must be >= 0");
  if (has("bc")) c.bcs = parse_bcs("bc", get("bc"));
  if (has("channel")) {
    c.channels.clear();
    for (const auto& p : split(get("channel"), ',')) {
      if (p == "te") c.channels.push_back(CASIMIR_TE);
      else if (p == "tm") c.channels.push_back(CASIMIR_TM);
      else if (p == "total") c.channels.push_back(CASIMIR_TOTAL);
      else fail("channel", "expected te, tm or total, got '" + p + "'");
    }
    if (c.channels.empty()) fail("channel", "empty list");
  }
  if (has("a1")) {
    c.a1 = parse_double("a1", get("a1"));
    if (!(c.a1 > 0.0)) fail("a1", "must be > 0");
  }
  if (has("rel-tol")) {
    c.rel_tol = parse_double("rel-tol", get("rel-tol"));
    if (!(c.rel_tol > 0.0) || c.rel_tol > 1e-3) fail("rel-tol", "must lie in (0, 1e-3]");
  }
  if (has("l-max")) {
    c.l_max = parse_long("l-max", get("l-max"));
    if (c.l_max < 1) fail("l-max", "must be >= 1");
  }
  if (has("p-max")) {
    c.p_max = parse_long("p-max", get("p-max"));
    if (c.p_max < 1) fail("p-max", "must be >= 1");
  }
  if (has("force")) c.force = parse_bool("force", get("force"));
  if (has("classical")) c.classical = parse_bool("classical", get("classical"));
  if (has("format")) {
    const auto& f = get("format");
    if (f == "csv") c.format = Format::Csv;
    else if (f == "json") c.format = Format::Json;
    else fail("format", "expected csv or json, got '" + f + "'");
  }
  if (has("out")) c.out = get("out");
  if (has("golden")) c.golden = get("golden");
  if (has("threads")) {
    const long t = parse_long("threads", get("threads"));
    if (t < 1 || t > 1024) fail("threads", "must lie in 1..1024");
    c.threads = static_cast<int>(t);
  }
  // dedupe and sort grids so output order does not depend on input order
  auto uniq = [](auto& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  uniq(c.dims);
  uniq(c.eps);
  uniq(c.temps);
  uniq(c.channels);
  return c;
}

std::string to_string(Mode m) {
  switch (m) {
    case Mode::Point: return "point";
    case Mode::Sweep: return "sweep";
    case Mode::Compare: return "compare";
    case Mode::Convergence: return "convergence";
    case Mode::Selftest: return "selftest";
  }
  return "?";
}

std::string bc_name(casimir_bc b) { return b == CASIMIR_PC ? "pc" : "ip"; }

std::string channel_name(casimir_channel c) {
  switch (c) {
    case CASIMIR_TE: return "te";
    case CASIMIR_TM: return "tm";
    case CASIMIR_TOTAL: return "total";
  }
  return "?";
}

std::vector<std::pair<std::string, std::string>> RunConfig::describe() const {
  std::vector<std::pair<std::string, std::string>> d;
  auto join = [](const auto& v, auto f, const char* sep) {
    std::string s;
    for (const auto& x : v) {
      if (!s.empty()) s += sep;
      s += f(x);
    }
    return s;
  };
  d.emplace_back("mode", to_string(mode));
  d.emplace_back("dim", join(dims, [](int x) { return std::to_string(x); }, ","));
  d.emplace_back("eps", join(eps, fmt_double, ","));
  d.emplace_back("temp", join(temps, fmt_double, ","));
  d.emplace_back("bc", join(bcs, [](const BcPair& b) { return bc_name(b.inner) + "," + bc_name(b.outer); }, ";"));
  d.emplace_back("channel", join(channels, channel_name, ","));
  d.emplace_back("a1", fmt_double(a1));
  d.emplace_back("rel-tol", fmt_double(rel_tol));
  d.emplace_back("l-max", std::to_string(l_max));
  d.emplace_back("p-max", std::to_string(p_max));
  d.emplace_back("force", force ? "true" : "false");
  d.emplace_back("classical", classical ? "true" : "false");
  d.emplace_back("format", format == Format::Csv ? "csv" : "json");
  return d;
}

}  // namespace cli
