#include "runner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <mutex>
#include <thread>
#include <tuple>

namespace cli {

namespace {

struct Task {
  int D;
  double eps;
  double T;
  BcPair bc;
  casimir_channel channel;
};

struct TaskResult {
  std::vector<ResultRow> rows;
  std::vector<ConvergenceRow> convergence;
  bool nonconverged = false;
  std::vector<std::string> errors;
};

std::vector<Task> make_tasks(const RunConfig& c) {
  std::vector<Task> tasks;
  for (int D : c.dims)
    for (double e : c.eps)
      for (double T : c.temps)
        for (const auto& bc : c.bcs)
          for (auto ch : c.channels) tasks.push_back({D, e, T, bc, ch});
  return tasks;
}

// Runs fn over all tasks on a small pool; results land at their task index.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) fn(i);
  };
  const int k = std::max(1, std::min<int>(threads, static_cast<int>(n)));
  std::vector<std::thread> pool;
  for (int i = 1; i < k; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

struct Handles {
  casimir_geometry* g = nullptr;
  casimir_policy* p = nullptr;
  ~Handles() {
    casimir_geometry_destroy(g);
    casimir_policy_destroy(p);
  }
};

std::string describe(const Task& t) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "D=%d eps=%.6g T=%.6g bc=%s,%s channel=%s", t.D, t.eps, t.T,
                bc_name(t.bc.inner).c_str(), bc_name(t.bc.outer).c_str(), channel_name(t.channel).c_str());
  return buf;
}

bool make_handles(const RunConfig& c, const Task& t, double rel_tol, Handles& h, TaskResult& out) {
  casimir_status st = casimir_geometry_from_epsilon(t.eps, t.D, c.a1, &h.g);
  if (st == CASIMIR_OK) st = casimir_policy_create(&h.p);
  if (st == CASIMIR_OK) st = casimir_policy_set_rel_tol(h.p, rel_tol);
  if (st == CASIMIR_OK) st = casimir_policy_set_l_max(h.p, c.l_max);
  if (st == CASIMIR_OK) st = casimir_policy_set_p_max(h.p, c.p_max);
  if (st != CASIMIR_OK) {
    out.errors.push_back(describe(t) + ": " + casimir_last_error());
    return false;
  }
  return true;
}

// Temperature as given is a1 T.
double temperature(const RunConfig& c, const Task& t) { return t.T / c.a1; }

casimir_status exact_energy(const RunConfig& c, const Task& t, const Handles& h, casimir_energy_result& r) {
  const double T = temperature(c, t);
  if (T == 0.0) return casimir_zero_t_energy(h.g, t.bc.inner, t.bc.outer, t.channel, h.p, &r);
  if (c.classical) {
    const casimir_status st = casimir_classical_term(h.g, t.bc.inner, t.bc.outer, t.channel, h.p, &r);
    r.value *= T;
    r.te *= T;
    r.tm *= T;
    r.error_estimate *= T;
    r.temperature = T;
    return st;
  }
  return casimir_free_energy(h.g, t.bc.inner, t.bc.outer, t.channel, T, h.p, &r);
}

ResultRow base_row(const RunConfig& c, const Task& t) {
  ResultRow row;
  row.D = t.D;
  row.a1 = c.a1;
  row.a2 = c.a1 * (1.0 + t.eps);
  row.eps = t.eps;
  row.T = t.T;
  row.bc_inner = t.bc.inner;
  row.bc_outer = t.bc.outer;
  row.channel = t.channel;
  return row;
}

TaskResult run_point(const RunConfig& c, const Task& t) {
  TaskResult out;
  Handles h;
  if (!make_handles(c, t, c.rel_tol, h, out)) return out;
  const double T = temperature(c, t);
  const casimir_regime regime = T == 0.0 ? CASIMIR_ZERO_T : CASIMIR_HIGH_T;
  const double d = t.eps * c.a1;

  ResultRow exact = base_row(c, t);
  exact.method = "exact";
  casimir_energy_result er;
  const casimir_status st = exact_energy(c, t, h, er);
  bool have_exact = false;
  if (st == CASIMIR_OK || st == CASIMIR_ERR_NONCONVERGENCE) {
    exact.energy = er.value;
    exact.l_used = er.l_used;
    exact.p_used = er.p_used;
    exact.error_estimate = er.error_estimate;
    if (st != CASIMIR_OK) {
      exact.status = "nonconverged";
      out.nonconverged = true;
      out.errors.push_back(describe(t) + ": " + casimir_last_error());
    }
    have_exact = std::isfinite(exact.energy);
  } else {
    out.errors.push_back(describe(t) + ": " + casimir_last_error());
  }
  if (have_exact && c.force && !(c.classical && T > 0.0)) {
    casimir_force_result fr;
    const casimir_status fs = casimir_force(h.g, t.bc.inner, t.bc.outer, t.channel, T, h.p, &fr);
    if (fs == CASIMIR_OK) {
      exact.force = fr.value;
    } else {
      if (fs == CASIMIR_ERR_NONCONVERGENCE) {
        exact.status = "nonconverged";
        out.nonconverged = true;
      }
      out.errors.push_back(describe(t) + " (force): " + casimir_last_error());
    }
  }

  if (c.mode == Mode::Sweep) {
    if (have_exact) out.rows.push_back(exact);
    return out;
  }

  ResultRow pfa = base_row(c, t);
  pfa.method = "pfa";
  bool have_pfa = casimir_pfa_energy(h.g, t.bc.inner, t.bc.outer, regime, T, t.channel, &pfa.energy) == CASIMIR_OK;
  if (have_pfa && c.force) pfa.force = (regime == CASIMIR_ZERO_T ? t.D : t.D - 1.0) * pfa.energy / d;

  ResultRow ex = base_row(c, t);
  ex.method = "expansion";
  bool have_ex = false;
  casimir_series* s = nullptr;
  if (casimir_expansion_create(regime, t.D, t.bc.inner, t.bc.outer, t.channel, CASIMIR_LOG_EPS2, &s) == CASIMIR_OK) {
    double pre = 0.0;
    if (casimir_expansion_evaluate(s, t.eps, c.a1, T, &ex.energy) == CASIMIR_OK &&
        casimir_expansion_prefactor(s, t.eps, c.a1, &pre) == CASIMIR_OK) {
      have_ex = true;
      // size of the first omitted order
      ex.error_estimate = std::abs(pre) * std::pow(t.eps, 3) * (1.0 + std::abs(std::log(t.eps))) *
                          (regime == CASIMIR_HIGH_T ? T : 1.0);
    }
    casimir_expansion_destroy(s);
  }

  if (c.mode == Mode::Compare && have_exact && have_pfa && pfa.energy != 0.0) {
    exact.exact_over_pfa = exact.energy / pfa.energy;
    exact.first_correction = (exact.energy / pfa.energy - 1.0) / t.eps;
  }
  if (have_exact) out.rows.push_back(exact);
  if (have_pfa) out.rows.push_back(pfa);
  if (have_ex) out.rows.push_back(ex);
  return out;
}

TaskResult run_ladder(const RunConfig& c, const Task& t) {
  TaskResult out;
  std::vector<double> tols;
  for (int k = 3; std::pow(10.0, -k) > c.rel_tol * 1.0001; ++k) tols.push_back(std::pow(10.0, -k));
  tols.push_back(c.rel_tol);
  std::optional<double> prev;
  for (double tol : tols) {
    Handles h;
    if (!make_handles(c, t, tol, h, out)) return out;
    casimir_energy_result er;
    const casimir_status st = exact_energy(c, t, h, er);
    if (st != CASIMIR_OK && st != CASIMIR_ERR_NONCONVERGENCE) {
      out.errors.push_back(describe(t) + ": " + casimir_last_error());
      return out;
    }
    ConvergenceRow row;
    row.D = t.D;
    row.eps = t.eps;
    row.T = t.T;
    row.bc_inner = t.bc.inner;
    row.bc_outer = t.bc.outer;
    row.channel = t.channel;
    row.rel_tol = tol;
    row.l_used = er.l_used;
    row.p_used = er.p_used;
    row.energy = er.value;
    row.error_estimate = er.error_estimate;
    if (prev) row.delta = er.value - *prev;
    if (st != CASIMIR_OK) {
      row.status = "nonconverged";
      out.nonconverged = true;
      out.errors.push_back(describe(t) + ": " + casimir_last_error());
    }
    prev = er.value;
    out.convergence.push_back(row);
  }
  return out;
}

RunOutput collect(const RunConfig& c, const std::function<TaskResult(const RunConfig&, const Task&)>& fn) {
  const auto tasks = make_tasks(c);
  std::vector<TaskResult> results(tasks.size());
  parallel_for(tasks.size(), c.threads, [&](std::size_t i) { results[i] = fn(c, tasks[i]); });
  RunOutput out;
  for (auto& r : results) {
    out.rows.insert(out.rows.end(), r.rows.begin(), r.rows.end());
    out.convergence.insert(out.convergence.end(), r.convergence.begin(), r.convergence.end());
    out.nonconverged = out.nonconverged || r.nonconverged;
    out.errors.insert(out.errors.end(), r.errors.begin(), r.errors.end());
  }
  return out;
}

}  // namespace

int method_rank(const std::string& m) {
  if (m == "exact") return 0;
  if (m == "pfa") return 1;
  return 2;
}

void sort_rows(std::vector<ResultRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    return std::make_tuple(a.D, a.eps, a.T, int(a.channel), method_rank(a.method), int(a.bc_inner), int(a.bc_outer)) <
           std::make_tuple(b.D, b.eps, b.T, int(b.channel), method_rank(b.method), int(b.bc_inner), int(b.bc_outer));
  });
}

RunOutput run_grid(const RunConfig& config) {
  RunOutput out = collect(config, run_point);
  sort_rows(out.rows);
  return out;
}

RunOutput run_convergence(const RunConfig& config) {
  RunOutput out = collect(config, run_ladder);
  std::stable_sort(out.convergence.begin(), out.convergence.end(), [](const ConvergenceRow& a, const ConvergenceRow& b) {
    return std::make_tuple(a.D, a.eps, a.T, int(a.channel), int(a.bc_inner), int(a.bc_outer), -a.rel_tol) <
           std::make_tuple(b.D, b.eps, b.T, int(b.channel), int(b.bc_inner), int(b.bc_outer), -b.rel_tol);
  });
  return out;
}

}  // namespace cli
