#pragma once

#include <functional>

namespace casimir::specfun {

// Compensated summation; terms must be added in a fixed order for
// reproducible results.
class KahanSum {
 public:
  void add(double x) noexcept {
    const double y = x - carry_;
    const double t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
  }
  KahanSum& operator+=(double x) noexcept {
    add(x);
    return *this;
  }
  double value() const noexcept { return sum_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int panels = 0;
  bool converged = true;
};

using Integrand = std::function<double(double)>;

// Adaptive 21-point Gauss-Kronrod on [a, b].
QuadratureResult integrate_interval(const Integrand& f, double a, double b, double rel_tol);

// Integral over [0, inf) of a function decaying at least exponentially.
// Panels [0, s], [s, 2s], [2s, 4s], ... are integrated until the estimated
// exponential tail falls below max(abs_tol, rel_tol |I|); the tail estimate is
// added to both value and error.
QuadratureResult integrate_to_infinity(const Integrand& f, double scale, double rel_tol,
                                       double abs_tol, int max_panels = 64);

}  // namespace casimir::specfun
