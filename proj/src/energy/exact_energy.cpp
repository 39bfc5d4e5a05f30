#include "casimir/energy/exact_energy.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>
#include <thread>

#include "casimir/energy/mode_function.hpp"
#include "casimir/errors.hpp"
#include "casimir/specfun/quadrature.hpp"

namespace casimir::energy {

using modes::BoundaryPair;
using modes::ChannelSelection;
using modes::Polarization;
using specfun::KahanSum;

void TruncationPolicy::validate() const {
  if (!(rel_tol > 0.0) || rel_tol > 1e-3) throw DomainError("policy: rel_tol must lie in (0, 1e-3]");
  if (l_max_hard < 1) throw DomainError("policy: l_max_hard must be positive");
  if (p_max_hard < 1) throw DomainError("policy: p_max_hard must be positive");
  if (threads < 1) throw DomainError("policy: threads must be positive");
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kBlock = 8;
constexpr int kQuiet = 5;

struct Term {
  double value = 0.0;
  double error = 0.0;
  long p_used = 0;
};

struct Partial {
  double value = 0.0;
  double error = 0.0;
  long l_used = 0;
  long p_used = 0;
};

// Computes one l term given the absolute size of the sum so far.
using TermFn = std::function<Term(const ModeSpec&, double)>;

Partial sum_over_l(const Geometry& g, BoundaryPair bc, Polarization channel,
                   const TruncationPolicy& policy, const TermFn& term_fn, const char* what) {
  const int D = g.dimension();
  KahanSum sum;
  double error = 0.0;
  long p_used = 0;
  int quiet = 0;
  double prev = 0.0;

  for (long l0 = 1; l0 <= policy.l_max_hard; l0 += kBlock) {
    const long count = std::min<long>(kBlock, policy.l_max_hard - l0 + 1);
    std::vector<Term> terms(count);
    std::vector<std::exception_ptr> failures(count);
    const double scale = std::abs(sum.value());
    auto work = [&](long i) {
      try {
        terms[i] = term_fn(ModeSpec::make(l0 + i, D, bc, channel), scale);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    };
    const int nthreads = static_cast<int>(std::min<long>(policy.threads, count));
    if (nthreads <= 1) {
      for (long i = 0; i < count; ++i) work(i);
    } else {
      std::vector<std::jthread> pool;
      for (int w = 0; w < nthreads; ++w) {
        pool.emplace_back([&, w] {
          for (long i = w; i < count; i += nthreads) work(i);
        });
      }
    }

    for (long i = 0; i < count; ++i) {
      if (failures[i]) std::rethrow_exception(failures[i]);
      const Term& t = terms[i];
      const long l = l0 + i;
      sum += t.value;
      error += t.error;
      p_used = std::max(p_used, t.p_used);

      const double total = std::abs(sum.value());
      const double size = std::abs(t.value);
      const bool noise = size <= 3.0 * t.error;
      if (size <= 0.1 * policy.rel_tol * total || noise) {
        ++quiet;
      } else {
        quiet = 0;
      }
      if (quiet >= kQuiet && l > kQuiet) {
        double tail = 0.0;
        bool certified = noise;
        if (!noise && prev != 0.0) {
          const double rho = size / std::abs(prev);
          if (rho < 1.0) {
            tail = size * rho / (1.0 - rho);
            certified = tail <= 0.5 * policy.rel_tol * total;
          }
        }
        if (certified) {
          Partial out;
          out.value = sum.value();
          if (policy.tail_extrapolation && tail > 0.0) {
            out.value += std::copysign(tail, t.value);
          }
          out.error = error + tail;
          out.l_used = l;
          out.p_used = p_used;
          return out;
        }
      }
      prev = t.value;
    }
  }
  std::ostringstream msg;
  msg << what << ": l_max_hard = " << policy.l_max_hard << " reached before rel_tol "
      << policy.rel_tol;
  throw NonConvergenceError(msg.str(), sum.value(), error, policy.l_max_hard, p_used);
}

// Characteristic xi over which f_l decays.
double xi_scale(const ModeSpec& mode, const Geometry& g) {
  const double ne = mode.nu * g.epsilon();
  const double a = 1.0 + 0.5 / ne;
  const double omega = std::sqrt(a * a - 1.0);
  return mode.nu * omega / g.a1();
}

struct Integral {
  double value;
  double error;
};

Integral mode_integral(const ModeSpec& mode, const Geometry& g, double rel, double abs_tol) {
  auto f = [&](double xi) { return f_l(mode, g, xi); };
  const specfun::QuadratureResult q =
      specfun::integrate_to_infinity(f, xi_scale(mode, g), rel, abs_tol);
  if (!q.converged) {
    throw NonConvergenceError("zero-temperature integral did not converge for l = " +
                                  std::to_string(mode.l),
                              q.value, q.error, mode.l, 0);
  }
  return {q.value, q.error};
}

struct Matsubara {
  double value;  // f(0)/2 + sum_{p>=1} f(xi_p)
  double error;
  long p_used;
};

Matsubara matsubara_sum(const ModeSpec& mode, const Geometry& g, double T, double rel,
                        double abs_tol, const TruncationPolicy& policy) {
  KahanSum s;
  s += 0.5 * f_l_static(mode, g);
  double prev = 0.0;
  for (long p = 1; p <= policy.p_max_hard; ++p) {
    const double fp = f_l(mode, g, kTwoPi * static_cast<double>(p) * T);
    s += fp;
    const double total = std::abs(s.value());
    const double size = std::abs(fp);
    if (fp == 0.0) return {s.value(), 0.0, p};
    if (prev != 0.0 && size < std::abs(prev)) {
      const double rho = size / std::abs(prev);
      const double tail = size * rho / (1.0 - rho);
      if (tail <= std::max(rel * total, abs_tol)) {
        double value = s.value();
        if (policy.tail_extrapolation) value += std::copysign(tail, fp);
        return {value, tail + 1e-16 * static_cast<double>(p) * total, p};
      }
    }
    prev = fp;
  }
  throw NonConvergenceError("Matsubara sum: p_max_hard = " + std::to_string(policy.p_max_hard) +
                                " reached for l = " + std::to_string(mode.l),
                            s.value(), 0.0, mode.l, policy.p_max_hard);
}

std::vector<Polarization> channels_of(ChannelSelection c) {
  switch (c) {
    case ChannelSelection::TE: return {Polarization::TE};
    case ChannelSelection::TM: return {Polarization::TM};
    case ChannelSelection::Total: return {Polarization::TE, Polarization::TM};
  }
  return {};
}

using ChannelFn = std::function<Partial(Polarization)>;

EnergyResult combine(ChannelSelection channel, double T, const ChannelFn& fn) {
  EnergyResult r;
  r.temperature = T;
  for (Polarization p : channels_of(channel)) {
    Partial part;
    try {
      part = fn(p);
    } catch (const NonConvergenceError& e) {
      // Report the channel that failed, carrying what was accumulated so far.
      throw NonConvergenceError(std::string(e.what()) + " (" + modes::to_string(p) + ")",
                                r.value + e.partial_value(), r.error_estimate + e.error_estimate(),
                                std::max(r.l_used, e.l_used()), std::max(r.p_used, e.p_used()));
    }
    (p == Polarization::TE ? r.te : r.tm) = part.value;
    r.value += part.value;
    r.error_estimate += part.error;
    r.l_used = std::max(r.l_used, part.l_used);
    r.p_used = std::max(r.p_used, part.p_used);
  }
  return r;
}

void check_temperature(double T) {
  if (!std::isfinite(T) || !(T > 0.0)) throw DomainError("temperature must be finite and > 0");
}

}  // namespace

EnergyResult zero_T_energy(const Geometry& g, BoundaryPair bc, ChannelSelection channel,
                           const TruncationPolicy& policy) {
  policy.validate();
  const double rel = std::max(0.1 * policy.rel_tol, 5e-14);
  return combine(channel, 0.0, [&](Polarization p) {
    TermFn term = [&](const ModeSpec& mode, double scale) {
      const double abs_tol = 1e-6 * policy.rel_tol * kTwoPi * scale / mode.degeneracy;
      const Integral j = mode_integral(mode, g, rel, abs_tol);
      return Term{mode.degeneracy * j.value / kTwoPi, mode.degeneracy * j.error / kTwoPi, 0};
    };
    return sum_over_l(g, bc, p, policy, term, "zero_T_energy");
  });
}

EnergyResult free_energy(const Geometry& g, BoundaryPair bc, ChannelSelection channel, double T,
                         const TruncationPolicy& policy) {
  policy.validate();
  check_temperature(T);
  const double rel = std::max(0.1 * policy.rel_tol, 1e-15);
  return combine(channel, T, [&](Polarization p) {
    TermFn term = [&](const ModeSpec& mode, double scale) {
      const double abs_tol = 1e-6 * policy.rel_tol * scale / (T * mode.degeneracy);
      const Matsubara s = matsubara_sum(mode, g, T, rel, abs_tol, policy);
      return Term{T * mode.degeneracy * s.value, T * mode.degeneracy * s.error, s.p_used};
    };
    return sum_over_l(g, bc, p, policy, term, "free_energy");
  });
}

EnergyResult classical_term(const Geometry& g, BoundaryPair bc, ChannelSelection channel,
                            const TruncationPolicy& policy) {
  policy.validate();
  EnergyResult r = combine(channel, 0.0, [&](Polarization p) {
    TermFn term = [&](const ModeSpec& mode, double) {
      const double v = 0.5 * mode.degeneracy * f_l_static(mode, g);
      return Term{v, 1e-16 * std::abs(v), 0};
    };
    return sum_over_l(g, bc, p, policy, term, "classical_term");
  });
  return r;
}

EnergyResult thermal_correction(const Geometry& g, BoundaryPair bc, ChannelSelection channel,
                                double T, const TruncationPolicy& policy) {
  policy.validate();
  check_temperature(T);
  EnergyResult r = combine(channel, T, [&](Polarization p) {
    TermFn term = [&](const ModeSpec& mode, double) {
      const Matsubara s = matsubara_sum(mode, g, T, 1e-15, 0.0, policy);
      const Integral j = mode_integral(mode, g, 5e-14, 0.0);
      const double d = mode.degeneracy;
      return Term{d * (T * s.value - j.value / kTwoPi), d * (T * s.error + j.error / kTwoPi),
                  s.p_used};
    };
    return sum_over_l(g, bc, p, policy, term, "thermal_correction");
  });
  if (std::abs(r.value) < 10.0 * r.error_estimate) {
    r.warnings.push_back("thermal correction is below ten times its error estimate");
  }
  return r;
}

EnergyResult energy(const Geometry& g, BoundaryPair bc, ChannelSelection channel, double T,
                    const TruncationPolicy& policy) {
  if (T == 0.0) return zero_T_energy(g, bc, channel, policy);
  return free_energy(g, bc, channel, T, policy);
}

ForceResult force(const Geometry& g, BoundaryPair bc, ChannelSelection channel, double T,
                  const TruncationPolicy& policy) {
  if (!std::isfinite(T) || T < 0.0) throw DomainError("force: temperature must be >= 0");
  const double d = g.separation();
  const double h = std::max(1e-4 * d, 1e-6 * g.a1());
  if (h >= d) throw DomainError("force: separation too small for the difference step");

  double err = 0.0;
  auto e_at = [&](double dd) {
    const EnergyResult r = energy(g.with_separation(dd), bc, channel, T, policy);
    err = std::max(err, r.error_estimate);
    return r.value;
  };
  const double f_h = -(e_at(d + h) - e_at(d - h)) / (2.0 * h);
  const double f_h2 = -(e_at(d + 0.5 * h) - e_at(d - 0.5 * h)) / h;
  ForceResult out;
  out.step = h;
  out.value = (4.0 * f_h2 - f_h) / 3.0;
  const double disagreement = std::abs(out.value - f_h2);
  out.error_estimate = disagreement + 2.0 * err / h;
  if (disagreement > 0.01 * std::abs(out.value)) {
    out.warnings.push_back("Richardson extrapolation disagrees by more than 1%");
  }
  return out;
}

}  // namespace casimir::energy
