#pragma once

#include <complex>
#include <string>
#include <vector>

#include "eisw/eisenstein.hpp"
#include "eisw/p1.hpp"

namespace eisw {

// Polyline in the upper half-plane; integration runs over consecutive
// straight segments, each term of the truncated q-expansion in closed form.
struct PathSpec {
  std::vector<std::complex<double>> waypoints;
};

struct IntegralResult {
  std::complex<double> value{0.0, 0.0};
  double tail_bound = 0.0;  // a-posteriori bound on the truncation error
  long terms = 0;
  bool ok = false;  // false when the tail bound exceeds the tolerance
};

// Integral of E_m along the path. terms = 0 picks the truncation order
// automatically from the tail bound and tolerance.
IntegralResult integrate_eisenstein(long N, long m, const PathSpec& path, long terms = 0,
                                    double tol = 1e-9);

// Numerical period along z0 -> gamma z0 through waypoints of imaginary part 1.
// z0 = i unless the matrix makes a better basepoint necessary (use_default_z0).
IntegralResult period_numeric(long N, long m, const Mat22& gamma, double tol = 1e-9,
                              long terms = 0, bool use_default_z0 = true);

struct PeriodCheck {
  bool pass = false;
  double residual = 0.0;
  double tail_bound = 0.0;
};

PeriodCheck verify_period(long N, long m, const Mat22& gamma, double tol = 1e-6, long terms = 0);

struct KstarResolution {
  bool conclusive = false;
  Rat factor;  // 1 or 1/2: coefficient of E_m((z+1)/2) matching the Dedekind values
  bool r_odd = false;  // whether the odd lift of r matches in the S(r, 2m) term
  std::string detail;
};

// Settles the normalization of the twisted differential 2E_m(z) - c E_m((z+1)/2)
// by numerical integration over sample classes of the (r-1, r+1) shape.
KstarResolution resolve_kstar_normalization(long N, long m, const std::vector<P1Class>& samples,
                                            double tol = 1e-4);

}  // namespace eisw
