#pragma once

#include <string>

#include "casimir/specfun/rational_polynomial.hpp"

namespace casimir::modes {

enum class BoundaryCondition { PerfectlyConducting, InfinitelyPermeable };

struct BoundaryPair {
  BoundaryCondition inner = BoundaryCondition::PerfectlyConducting;
  BoundaryCondition outer = BoundaryCondition::PerfectlyConducting;

  bool homogeneous() const noexcept { return inner == outer; }
  BoundaryPair reversed() const noexcept { return {outer, inner}; }
  friend bool operator==(const BoundaryPair&, const BoundaryPair&) = default;
};

enum class Polarization { TE, TM };
enum class ChannelSelection { TE, TM, Total };

std::string to_string(BoundaryCondition bc);  // "pc" / "ip"
std::string to_string(Polarization p);        // "te" / "tm"
std::string to_string(ChannelSelection c);    // "te" / "tm" / "total"

// Integer-valued degeneracy from the factorial formulas.
Rational degeneracy_exact(Polarization channel, long l, int D);
// Same in double precision via the product form.
double degeneracy(Polarization channel, long l, int D);

// nu = l + (D - 2)/2
double nu(long l, int D);
Rational nu_exact(long l, int D);

struct BcCoefficients {
  Rational alpha;
  Rational beta;
};
struct BcCoefficientsD {
  double alpha;
  double beta;
};

BcCoefficients bc_coefficients(Polarization channel, BoundaryCondition bc, int D);
BcCoefficientsD bc_coefficients_d(Polarization channel, BoundaryCondition bc, int D);

// d_l(D) as a polynomial in nu.
class DegeneracyPolynomial {
 public:
  DegeneracyPolynomial(Polarization channel, int D, specfun::RationalPolynomial poly)
      : channel_(channel), dim_(D), poly_(std::move(poly)) {}

  Polarization channel() const noexcept { return channel_; }
  int dimension() const noexcept { return dim_; }
  const specfun::RationalPolynomial& polynomial() const noexcept { return poly_; }
  // varpi_{D;j}
  Rational coefficient(std::size_t j) const { return poly_.coefficient(j); }
  double operator()(double nu) const { return poly_.evaluate(nu); }

 private:
  Polarization channel_;
  int dim_;
  specfun::RationalPolynomial poly_;
};

DegeneracyPolynomial degeneracy_polynomial(Polarization channel, int D);

}  // namespace casimir::modes
