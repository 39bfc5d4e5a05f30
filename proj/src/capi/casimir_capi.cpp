#include "casimir/casimir.h"

#include <cstring>
#include <new>
#include <string>

#include "casimir/asymptotics/expansions.hpp"
#include "casimir/asymptotics/pfa.hpp"
#include "casimir/asymptotics/thermal.hpp"
#include "casimir/energy/exact_energy.hpp"
#include "casimir/errors.hpp"
#include "casimir/selftest/selftest.hpp"

struct casimir_geometry {
  casimir::energy::Geometry g;
};

struct casimir_policy {
  casimir::energy::TruncationPolicy p;
};

struct casimir_series {
  casimir::asymptotics::ExpansionSeries s;
};

struct casimir_selftest {
  casimir::selftest::SelftestReport report;
  std::string text;
};

namespace {

using namespace casimir;

thread_local std::string last_error;

// Partial results from the most recent NonConvergenceError on this thread.
struct Partial {
  double value = 0.0;
  double error = 0.0;
  long l_used = 0;
  long p_used = 0;
};
thread_local Partial last_partial;

template <class F>
casimir_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    return CASIMIR_OK;
  } catch (const NonConvergenceError& e) {
    last_error = e.what();
    last_partial = {e.partial_value(), e.error_estimate(), e.l_used(), e.p_used()};
    return CASIMIR_ERR_NONCONVERGENCE;
  } catch (const DomainError& e) {
    last_error = e.what();
    return CASIMIR_ERR_DOMAIN;
  } catch (const PrecisionLossError& e) {
    last_error = e.what();
    return CASIMIR_ERR_PRECISION_LOSS;
  } catch (const OutOfRegimeError& e) {
    last_error = e.what();
    return CASIMIR_ERR_OUT_OF_REGIME;
  } catch (const UnsupportedDimensionError& e) {
    last_error = e.what();
    return CASIMIR_ERR_UNSUPPORTED_DIMENSION;
  } catch (const PoleError& e) {
    last_error = e.what();
    return CASIMIR_ERR_POLE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CASIMIR_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CASIMIR_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return CASIMIR_ERR_INTERNAL;
  }
}

casimir_status null_arg(const char* what) {
  last_error = std::string("null argument: ") + what;
  return CASIMIR_ERR_NULL_ARGUMENT;
}

modes::BoundaryCondition to_bc(casimir_bc b) {
  switch (b) {
    case CASIMIR_PC: return modes::BoundaryCondition::PerfectlyConducting;
    case CASIMIR_IP: return modes::BoundaryCondition::InfinitelyPermeable;
  }
  throw DomainError("invalid boundary condition");
}

modes::BoundaryPair to_pair(casimir_bc inner, casimir_bc outer) { return {to_bc(inner), to_bc(outer)}; }

modes::ChannelSelection to_channel(casimir_channel c) {
  switch (c) {
    case CASIMIR_TE: return modes::ChannelSelection::TE;
    case CASIMIR_TM: return modes::ChannelSelection::TM;
    case CASIMIR_TOTAL: return modes::ChannelSelection::Total;
  }
  throw DomainError("invalid channel");
}

asymptotics::Regime to_regime(casimir_regime r) {
  switch (r) {
    case CASIMIR_ZERO_T: return asymptotics::Regime::ZeroT;
    case CASIMIR_HIGH_T: return asymptotics::Regime::HighT;
  }
  throw DomainError("invalid regime");
}

void join_warnings(const std::vector<std::string>& w, char* buf, int& count) {
  count = static_cast<int>(w.size());
  std::string all;
  for (const auto& s : w) {
    if (!all.empty()) all += "; ";
    all += s;
  }
  const std::size_t n = std::min(all.size(), std::size_t(CASIMIR_WARNING_CHARS - 1));
  std::memcpy(buf, all.data(), n);
  buf[n] = '\0';
}

void fill(const energy::EnergyResult& r, casimir_energy_result* out) {
  out->value = r.value;
  out->te = r.te;
  out->tm = r.tm;
  out->error_estimate = r.error_estimate;
  out->temperature = r.temperature;
  out->l_used = r.l_used;
  out->p_used = r.p_used;
  join_warnings(r.warnings, out->warnings, out->warning_count);
}

template <class F>
casimir_status energy_call(const casimir_geometry* g, const casimir_policy* policy, double T,
                           casimir_energy_result* out, F&& f) {
  if (!g) return null_arg("geometry");
  if (!out) return null_arg("out");
  std::memset(out, 0, sizeof *out);
  const energy::TruncationPolicy pol = policy ? policy->p : energy::TruncationPolicy{};
  const casimir_status st = guard([&] { fill(f(g->g, pol), out); });
  if (st == CASIMIR_ERR_NONCONVERGENCE) {
    out->value = last_partial.value;
    out->error_estimate = last_partial.error;
    out->l_used = last_partial.l_used;
    out->p_used = last_partial.p_used;
    out->temperature = T;
  }
  return st;
}

template <class F>
casimir_status set_policy(casimir_policy* p, F&& f) {
  if (!p) return null_arg("policy");
  return guard([&] {
    energy::TruncationPolicy copy = p->p;
    f(copy);
    copy.validate();
    p->p = copy;
  });
}

}  // namespace

extern "C" {

const char* casimir_version(void) { return "1.0.0"; }

const char* casimir_status_string(casimir_status status) {
  switch (status) {
    case CASIMIR_OK: return "ok";
    case CASIMIR_ERR_DOMAIN: return "domain error";
    case CASIMIR_ERR_NONCONVERGENCE: return "non-convergence";
    case CASIMIR_ERR_PRECISION_LOSS: return "precision loss";
    case CASIMIR_ERR_OUT_OF_REGIME: return "out of regime";
    case CASIMIR_ERR_UNSUPPORTED_DIMENSION: return "unsupported dimension";
    case CASIMIR_ERR_POLE: return "pole";
    case CASIMIR_ERR_NULL_ARGUMENT: return "null argument";
    case CASIMIR_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* casimir_last_error(void) { return last_error.c_str(); }

casimir_status casimir_geometry_create(double a1, double a2, int dim, casimir_geometry** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guard([&] { *out = new casimir_geometry{energy::Geometry(a1, a2, dim)}; });
}

casimir_status casimir_geometry_from_epsilon(double eps, int dim, double a1, casimir_geometry** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guard([&] { *out = new casimir_geometry{energy::Geometry::from_epsilon(eps, dim, a1)}; });
}

void casimir_geometry_destroy(casimir_geometry* g) { delete g; }

casimir_status casimir_geometry_info(const casimir_geometry* g, double* a1, double* a2, int* dim,
                                     double* eps) {
  if (!g) return null_arg("geometry");
  if (a1) *a1 = g->g.a1();
  if (a2) *a2 = g->g.a2();
  if (dim) *dim = g->g.dimension();
  if (eps) *eps = g->g.epsilon();
  return CASIMIR_OK;
}

casimir_status casimir_policy_create(casimir_policy** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guard([&] { *out = new casimir_policy{}; });
}

void casimir_policy_destroy(casimir_policy* p) { delete p; }

casimir_status casimir_policy_set_rel_tol(casimir_policy* p, double rel_tol) {
  return set_policy(p, [&](energy::TruncationPolicy& q) { q.rel_tol = rel_tol; });
}
casimir_status casimir_policy_set_l_max(casimir_policy* p, long l_max) {
  return set_policy(p, [&](energy::TruncationPolicy& q) { q.l_max_hard = l_max; });
}
casimir_status casimir_policy_set_p_max(casimir_policy* p, long p_max) {
  return set_policy(p, [&](energy::TruncationPolicy& q) { q.p_max_hard = p_max; });
}
casimir_status casimir_policy_set_tail_extrapolation(casimir_policy* p, int on) {
  return set_policy(p, [&](energy::TruncationPolicy& q) { q.tail_extrapolation = on != 0; });
}
casimir_status casimir_policy_set_threads(casimir_policy* p, int threads) {
  return set_policy(p, [&](energy::TruncationPolicy& q) { q.threads = threads; });
}

casimir_status casimir_zero_t_energy(const casimir_geometry* g, casimir_bc inner, casimir_bc outer,
                                     casimir_channel channel, const casimir_policy* policy,
                                     casimir_energy_result* out) {
  return energy_call(g, policy, 0.0, out, [&](const energy::Geometry& geo, const energy::TruncationPolicy& p) {
    return energy::zero_T_energy(geo, to_pair(inner, outer), to_channel(channel), p);
  });
}

casimir_status casimir_free_energy(const casimir_geometry* g, casimir_bc inner, casimir_bc outer,
                                   casimir_channel channel, double temperature,
                                   const casimir_policy* policy, casimir_energy_result* out) {
  return energy_call(g, policy, temperature, out, [&](const energy::Geometry& geo, const energy::TruncationPolicy& p) {
    return energy::free_energy(geo, to_pair(inner, outer), to_channel(channel), temperature, p);
  });
}

casimir_status casimir_energy(const casimir_geometry* g, casimir_bc inner, casimir_bc outer,
                              casimir_channel channel, double temperature, const casimir_policy* policy,
                              casimir_energy_result* out) {
  return energy_call(g, policy, temperature, out, [&](const energy::Geometry& geo, const energy::TruncationPolicy& p) {
    return energy::energy(geo, to_pair(inner, outer), to_channel(channel), temperature, p);
  });
}

casimir_status casimir_classical_term(const casimir_geometry* g, casimir_bc inner, casimir_bc outer,
                                      casimir_channel channel, const casimir_policy* policy,
                                      casimir_energy_result* out) {
  return energy_call(g, policy, 0.0, out, [&](const energy::Geometry& geo, const energy::TruncationPolicy& p) {
    return energy::classical_term(geo, to_pair(inner, outer), to_channel(channel), p);
  });
}

casimir_status casimir_thermal_correction(const casimir_geometry* g, casimir_bc inner, casimir_bc outer,
                                          casimir_channel channel, double temperature,
                                          const casimir_policy* policy, casimir_energy_result* out) {
  return energy_call(g, policy, temperature, out, [&](const energy::Geometry& geo, const energy::TruncationPolicy& p) {
    return energy::thermal_correction(geo, to_pair(inner, outer), to_channel(channel), temperature, p);
  });
}

casimir_status casimir_force(const casimir_geometry* g, casimir_bc inner, casimir_bc outer,
                             casimir_channel channel, double temperature, const casimir_policy* policy,
                             casimir_force_result* out) {
  if (!g) return null_arg("geometry");
  if (!out) return null_arg("out");
  std::memset(out, 0, sizeof *out);
  const energy::TruncationPolicy pol = policy ? policy->p : energy::TruncationPolicy{};
  return guard([&] {
    const auto r = energy::force(g->g, to_pair(inner, outer), to_channel(channel), temperature, pol);
    out->value = r.value;
    out->error_estimate = r.error_estimate;
    out->step = r.step;
    join_warnings(r.warnings, out->warnings, out->warning_count);
  });
}

casimir_status casimir_parallel_plate_density(int dim, casimir_bc inner, casimir_bc outer,
                                              casimir_regime regime, double d, double temperature,
                                              double* out) {
  if (!out) return null_arg("out");
  return guard([&] {
    *out = asymptotics::parallel_plate_density(dim, to_pair(inner, outer), to_regime(regime), d, temperature);
  });
}

casimir_status casimir_pfa_energy(const casimir_geometry* g, casimir_bc inner, casimir_bc outer,
                                  casimir_regime regime, double temperature, casimir_channel channel,
                                  double* out) {
  if (!g) return null_arg("geometry");
  if (!out) return null_arg("out");
  return guard([&] {
    *out = asymptotics::pfa_energy(g->g, to_pair(inner, outer), to_regime(regime), temperature,
                                   to_channel(channel));
  });
}

casimir_status casimir_expansion_create(casimir_regime regime, int dim, casimir_bc inner, casimir_bc outer,
                                        casimir_channel channel, casimir_log_reading reading,
                                        casimir_series** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guard([&] {
    const auto bc = to_pair(inner, outer);
    const auto ch = to_channel(channel);
    if (to_regime(regime) == asymptotics::Regime::ZeroT) {
      const auto r = reading == CASIMIR_LOG_AS_PRINTED ? asymptotics::ZeroTReading::AsPrinted
                                                       : asymptotics::ZeroTReading::Fitted;
      *out = new casimir_series{asymptotics::zero_T_expansion(dim, bc, ch, r)};
    } else {
      const auto r = reading == CASIMIR_LOG_AS_PRINTED ? asymptotics::LogReading::AsPrinted
                                                       : asymptotics::LogReading::EpsSquaredLog;
      *out = new casimir_series{asymptotics::high_T_expansion(dim, bc, ch, r)};
    }
  });
}

void casimir_expansion_destroy(casimir_series* s) { delete s; }

casimir_status casimir_expansion_evaluate(const casimir_series* s, double eps, double a1, double temperature,
                                          double* out) {
  if (!s) return null_arg("series");
  if (!out) return null_arg("out");
  return guard([&] { *out = s->s.evaluate(eps, a1, temperature); });
}

casimir_status casimir_expansion_prefactor(const casimir_series* s, double eps, double a1, double* out) {
  if (!s) return null_arg("series");
  if (!out) return null_arg("out");
  return guard([&] { *out = s->s.prefactor(eps, a1); });
}

casimir_status casimir_expansion_term_count(const casimir_series* s, int* count) {
  if (!s) return null_arg("series");
  if (!count) return null_arg("count");
  *count = static_cast<int>(s->s.terms().size());
  return CASIMIR_OK;
}

casimir_status casimir_expansion_term(const casimir_series* s, int index, int* power, int* log_eps,
                                      double* coefficient) {
  if (!s) return null_arg("series");
  if (index < 0 || index >= static_cast<int>(s->s.terms().size())) {
    last_error = "term index out of range";
    return CASIMIR_ERR_DOMAIN;
  }
  const auto& t = s->s.terms()[static_cast<std::size_t>(index)];
  if (power) *power = t.power;
  if (log_eps) *log_eps = t.log_eps ? 1 : 0;
  if (coefficient) *coefficient = t.coefficient;
  return CASIMIR_OK;
}

casimir_status casimir_thermal_leading(int dim, casimir_bc inner, casimir_channel channel, double a1,
                                       double temperature, double* out) {
  if (!out) return null_arg("out");
  return guard([&] {
    *out = asymptotics::thermal_leading(dim, to_bc(inner), to_channel(channel), a1, temperature);
  });
}

casimir_status casimir_pfa_thermal_force(int dim, double a1, double temperature, double* out) {
  if (!out) return null_arg("out");
  return guard([&] { *out = asymptotics::pfa_thermal_force(dim, a1, temperature); });
}

casimir_status casimir_exact_thermal_force_leading(int dim, casimir_bc inner, double a1, double temperature,
                                                   double* out) {
  if (!out) return null_arg("out");
  return guard([&] { *out = asymptotics::exact_thermal_force_leading(dim, to_bc(inner), a1, temperature); });
}

casimir_status casimir_selftest_run(int log_reading_fit, int exact_checks, casimir_selftest** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guard([&] {
    selftest::SelftestOptions opt;
    opt.log_reading_fit = log_reading_fit != 0;
    opt.exact_checks = exact_checks != 0;
    auto* t = new casimir_selftest{selftest::run_selftest(opt), ""};
    t->text = selftest::format_report(t->report);
    *out = t;
  });
}

void casimir_selftest_destroy(casimir_selftest* t) { delete t; }

int casimir_selftest_passed(const casimir_selftest* t) { return t && t->report.all_passed() ? 1 : 0; }

const char* casimir_selftest_report(const casimir_selftest* t) { return t ? t->text.c_str() : ""; }

casimir_status casimir_selftest_log_reading(const casimir_selftest* t, casimir_log_reading* selected,
                                            double* improvement, int* decisive) {
  if (!t) return null_arg("selftest");
  if (!t->report.log_reading_ran) {
    last_error = "log reading fit was not run";
    return CASIMIR_ERR_DOMAIN;
  }
  const auto& l = t->report.log_reading;
  if (selected)
    *selected = l.selected == asymptotics::LogReading::AsPrinted ? CASIMIR_LOG_AS_PRINTED : CASIMIR_LOG_EPS2;
  if (improvement) *improvement = l.improvement;
  if (decisive) *decisive = l.decisive ? 1 : 0;
  return CASIMIR_OK;
}

}  // extern "C"
