#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace cli {

using nlohmann::ordered_json;

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::string opt(const std::optional<double>& v) { return v ? num(*v) : ""; }

const char* kRowHeader = "D,a1,a2,eps,T,bc_inner,bc_outer,channel,method,energy,force,l_used,p_used,error_estimate,status";
const char* kCompareExtra = ",exact_over_pfa,first_correction";
const char* kConvergenceHeader =
    "D,eps,T,bc_inner,bc_outer,channel,rel_tol,l_used,p_used,energy,error_estimate,delta,status";

ordered_json metadata(const RunConfig& c) {
  ordered_json m;
  m["tool"] = "casimir_cli";
  m["version"] = kToolVersion;
  m["library_version"] = casimir_version();
  for (const auto& [k, v] : c.describe()) m[k] = v;
  return m;
}

template <class T>
ordered_json opt_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

}  // namespace

void write_csv(std::ostream& os, const RunConfig& c, const RunOutput& out) {
  os << "# casimir_cli " << kToolVersion << " (library " << casimir_version() << ")\n";
  for (const auto& [k, v] : c.describe()) os << "# " << k << "=" << v << "\n";
  if (c.mode == Mode::Convergence) {
    os << kConvergenceHeader << "\n";
    for (const auto& r : out.convergence)
      os << r.D << ',' << num(r.eps) << ',' << num(r.T) << ',' << bc_name(r.bc_inner) << ','
         << bc_name(r.bc_outer) << ',' << channel_name(r.channel) << ',' << num(r.rel_tol) << ','
         << r.l_used << ',' << r.p_used << ',' << num(r.energy) << ',' << num(r.error_estimate) << ','
         << opt(r.delta) << ',' << r.status << "\n";
    return;
  }
  const bool cmp = c.mode == Mode::Compare;
  os << kRowHeader << (cmp ? kCompareExtra : "") << "\n";
  for (const auto& r : out.rows) {
    os << r.D << ',' << num(r.a1) << ',' << num(r.a2) << ',' << num(r.eps) << ',' << num(r.T) << ','
       << bc_name(r.bc_inner) << ',' << bc_name(r.bc_outer) << ',' << channel_name(r.channel) << ','
       << r.method << ',' << num(r.energy) << ',' << opt(r.force) << ',' << r.l_used << ',' << r.p_used
       << ',' << num(r.error_estimate) << ',' << r.status;
    if (cmp) os << ',' << opt(r.exact_over_pfa) << ',' << opt(r.first_correction);
    os << "\n";
  }
}

void write_json(std::ostream& os, const RunConfig& c, const RunOutput& out) {
  ordered_json doc;
  doc["metadata"] = metadata(c);
  ordered_json rows = ordered_json::array();
  if (c.mode == Mode::Convergence) {
    for (const auto& r : out.convergence) {
      ordered_json j;
      j["D"] = r.D;
      j["eps"] = r.eps;
      j["T"] = r.T;
      j["bc_inner"] = bc_name(r.bc_inner);
      j["bc_outer"] = bc_name(r.bc_outer);
      j["channel"] = channel_name(r.channel);
      j["rel_tol"] = r.rel_tol;
      j["l_used"] = r.l_used;
      j["p_used"] = r.p_used;
      j["energy"] = r.energy;
      j["error_estimate"] = r.error_estimate;
      j["delta"] = opt_json(r.delta);
      j["status"] = r.status;
      rows.push_back(std::move(j));
    }
    doc["convergence"] = std::move(rows);
  } else {
    for (const auto& r : out.rows) {
      ordered_json j;
      j["D"] = r.D;
      j["a1"] = r.a1;
      j["a2"] = r.a2;
      j["eps"] = r.eps;
      j["T"] = r.T;
      j["bc_inner"] = bc_name(r.bc_inner);
      j["bc_outer"] = bc_name(r.bc_outer);
      j["channel"] = channel_name(r.channel);
      j["method"] = r.method;
      j["energy"] = r.energy;
      j["force"] = opt_json(r.force);
      j["l_used"] = r.l_used;
      j["p_used"] = r.p_used;
      j["error_estimate"] = r.error_estimate;
      j["status"] = r.status;
      if (c.mode == Mode::Compare) {
        j["exact_over_pfa"] = opt_json(r.exact_over_pfa);
        j["first_correction"] = opt_json(r.first_correction);
      }
      rows.push_back(std::move(j));
    }
    doc["rows"] = std::move(rows);
  }
  os << doc.dump(2) << "\n";
}

namespace {

using Key = std::tuple<int, double, double, std::string, std::string, std::string, std::string>;

struct GoldenRow {
  double energy = 0.0;
  std::optional<double> force;
};

struct Golden {
  double rel_tol = 1e-8;
  double abs_tol = 0.0;
  std::map<Key, GoldenRow> rows;
};

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(line);
  while (std::getline(is, cur, ',')) out.push_back(cur);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

Golden read_golden_csv(std::istream& in) {
  Golden g;
  std::string line;
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line.rfind("# golden-rel-tol=", 0) == 0) g.rel_tol = std::stod(line.substr(17));
      if (line.rfind("# golden-abs-tol=", 0) == 0) g.abs_tol = std::stod(line.substr(17));
      continue;
    }
    const auto f = split_csv(line);
    if (header.empty()) {
      header = f;
      continue;
    }
    std::map<std::string, std::string> m;
    for (std::size_t i = 0; i < header.size() && i < f.size(); ++i) m[header[i]] = f[i];
    Key k{std::stoi(m.at("D")), std::stod(m.at("eps")), std::stod(m.at("T")), m.at("bc_inner"),
          m.at("bc_outer"), m.at("channel"), m.at("method")};
    GoldenRow r;
    r.energy = std::stod(m.at("energy"));
    if (!m["force"].empty()) r.force = std::stod(m["force"]);
    g.rows[k] = r;
  }
  return g;
}

Golden read_golden_json(std::istream& in) {
  Golden g;
  const auto doc = ordered_json::parse(in);
  const auto& meta = doc.at("metadata");
  if (meta.contains("golden-rel-tol")) g.rel_tol = meta["golden-rel-tol"].get<double>();
  if (meta.contains("golden-abs-tol")) g.abs_tol = meta["golden-abs-tol"].get<double>();
  for (const auto& j : doc.at("rows")) {
    Key k{j.at("D").get<int>(), j.at("eps").get<double>(), j.at("T").get<double>(),
          j.at("bc_inner").get<std::string>(), j.at("bc_outer").get<std::string>(),
          j.at("channel").get<std::string>(), j.at("method").get<std::string>()};
    GoldenRow r;
    r.energy = j.at("energy").get<double>();
    if (j.contains("force") && !j["force"].is_null()) r.force = j["force"].get<double>();
    g.rows[k] = r;
  }
  return g;
}

bool close(double a, double b, const Golden& g) {
  return std::abs(a - b) <= g.abs_tol + g.rel_tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace

GoldenResult compare_golden(const std::string& path, const RunOutput& out) {
  std::ifstream in(path);
  if (!in) return {false, "cannot open golden file '" + path + "'"};
  Golden g;
  try {
    g = path.size() > 5 && path.substr(path.size() - 5) == ".json" ? read_golden_json(in) : read_golden_csv(in);
  } catch (const std::exception& e) {
    return {false, "cannot parse golden file '" + path + "': " + e.what()};
  }
  std::size_t matched = 0;
  for (const auto& r : out.rows) {
    // round-trip through the printed form so keys compare exactly
    Key k{r.D, std::stod(num(r.eps)), std::stod(num(r.T)), bc_name(r.bc_inner), bc_name(r.bc_outer),
          channel_name(r.channel), r.method};
    const auto it = g.rows.find(k);
    std::ostringstream where;
    where << "D=" << r.D << " eps=" << r.eps << " T=" << r.T << " " << bc_name(r.bc_inner) << ","
          << bc_name(r.bc_outer) << " " << channel_name(r.channel) << " " << r.method;
    if (it == g.rows.end()) return {false, "row missing from golden file: " + where.str()};
    ++matched;
    if (!close(r.energy, it->second.energy, g))
      return {false, "energy mismatch at " + where.str() + ": " + num(r.energy) + " vs " + num(it->second.energy)};
    if (r.force && it->second.force && !close(*r.force, *it->second.force, g))
      return {false, "force mismatch at " + where.str()};
  }
  if (matched != g.rows.size()) return {false, "golden file has rows not produced by this run"};
  return {true, "golden match (" + std::to_string(matched) + " rows)"};
}

}  // namespace cli
