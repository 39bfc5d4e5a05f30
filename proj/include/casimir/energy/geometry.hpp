#pragma once

namespace casimir::energy {

// Two concentric spheres of radii a1 < a2 in D spatial dimensions.
class Geometry {
 public:
  Geometry(double a1, double a2, int D);
  // a2 = a1 (1 + eps), keeping eps exact.
  static Geometry from_epsilon(double eps, int D, double a1 = 1.0);

  double a1() const noexcept { return a1_; }
  double a2() const noexcept { return a2_; }
  int dimension() const noexcept { return dim_; }
  double epsilon() const noexcept { return eps_; }
  double separation() const noexcept { return eps_ * a1_; }
  // ln(a2/a1) = ln(1 + eps)
  double log_ratio() const noexcept { return log_ratio_; }

  Geometry with_separation(double d) const;
  Geometry scaled(double lambda) const;

 private:
  Geometry(double a1, double eps, int D, bool);

  double a1_;
  double a2_;
  int dim_;
  double eps_;
  double log_ratio_;
};

}  // namespace casimir::energy
