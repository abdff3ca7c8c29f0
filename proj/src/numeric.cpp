#include "eisw/numeric.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace eisw {

namespace {

constexpr double kPi = std::numbers::pi;

double min_im(const PathSpec& path) {
  double y = 1e300;
  for (const auto& z : path.waypoints) y = std::min(y, z.imag());
  return y;
}

// bound on sum_{n > T} |a_n| e^{-2 pi n y} / (pi n) with |a_n| <= 24 (m+1) n^2
double tail_bound(long m, long T, double y) {
  double rho = std::exp(-2.0 * kPi * y);
  if (rho >= 1.0) return 1e300;
  double geom = std::pow(rho, static_cast<double>(T + 1)) *
                ((T + 1) * (1.0 - rho) + rho) / ((1.0 - rho) * (1.0 - rho));
  return 24.0 * (m + 1) / kPi * geom;
}

}  // namespace

IntegralResult integrate_eisenstein(long N, long m, const PathSpec& path, long terms, double tol) {
  require_level(N);
  if (m <= 1 || N % m != 0) throw std::invalid_argument("integrate_eisenstein: need m | N, m > 1");
  IntegralResult res;
  if (path.waypoints.size() < 2) {
    res.ok = true;
    return res;
  }
  double y = min_im(path);
  if (y <= 0.0) throw std::invalid_argument("integrate_eisenstein: path touches the real axis");

  const double nseg = static_cast<double>(path.waypoints.size() - 1);
  long T = terms;
  if (T == 0) {
    T = 8;
    while (T < 5000000 && nseg * tail_bound(m, T, y) >= tol) T *= 2;
  }
  res.terms = T;
  res.tail_bound = nseg * tail_bound(m, T, y);
  res.ok = res.tail_bound < tol;

  // a_n = 24 sigma_1(n) - 24 m sigma_1(n/m); sigma_1 stays far below 2^53 at
  // any reachable truncation order, so the sieve can run in doubles directly
  std::vector<double> sig(T + 1, 0.0);
  for (long d = 1; d <= T; ++d)
    for (long n = d; n <= T; n += d) sig[n] += static_cast<double>(d);
  std::vector<double> ad(T + 1);
  ad[0] = static_cast<double>(m - 1);
  for (long n = 1; n <= T; ++n) {
    ad[n] = 24.0 * sig[n];
    if (n % m == 0) ad[n] -= 24.0 * m * sig[n / m];
  }
  sig.clear();
  sig.shrink_to_fit();

  const std::complex<double> two_pi_i(0.0, 2.0 * kPi);
  std::complex<double> total(0.0, 0.0);
  for (size_t i = 0; i + 1 < path.waypoints.size(); ++i) {
    std::complex<double> z1 = path.waypoints[i], z2 = path.waypoints[i + 1];
    if (z1 == z2) continue;
    total += ad[0] * (z2 - z1);
    for (long n = 1; n <= T; ++n) {
      if (ad[n] == 0.0) continue;
      std::complex<double> e1 = std::exp(two_pi_i * (static_cast<double>(n) * z1));
      std::complex<double> e2 = std::exp(two_pi_i * (static_cast<double>(n) * z2));
      total += ad[n] * (e2 - e1) / (two_pi_i * static_cast<double>(n));
    }
  }
  res.value = total;
  return res;
}

IntegralResult period_numeric(long N, long m, const Mat22& gamma, double tol, long terms,
                              bool use_default_z0) {
  require_level(N);
  if (gamma.det() != 1 || gamma.c % m != 0)
    throw std::invalid_argument("period_numeric: matrix not in Gamma_0(m)");
  double a = gamma.a.get_d(), b = gamma.b.get_d(), c = gamma.c.get_d(), d = gamma.d.get_d();
  std::complex<double> z0(0.0, 1.0);
  if (!use_default_z0 && c != 0.0) {
    // basepoint with Im(z0) = Im(gamma z0) = 1/|c|; keeps the q-series usable
    // for matrices with large entries
    z0 = std::complex<double>(-d / c, 1.0 / std::abs(c));
  }
  std::complex<double> gz0 = (a * z0 + b) / (c * z0 + d);
  PathSpec path;
  path.waypoints.push_back(z0);
  path.waypoints.push_back({z0.real(), std::max(z0.imag(), 1.0)});
  path.waypoints.push_back({gz0.real(), std::max(gz0.imag(), 1.0)});
  path.waypoints.push_back(gz0);
  return integrate_eisenstein(N, m, path, terms, tol);
}

PeriodCheck verify_period(long N, long m, const Mat22& gamma, double tol, long terms) {
  if (!in_gamma0(gamma, N)) throw std::invalid_argument("verify_period: matrix not in Gamma_0(N)");
  IntegralResult num = period_numeric(N, m, gamma, tol / 4, terms, true);
  Rat exact = period(N, m, gamma);
  PeriodCheck out;
  out.tail_bound = num.tail_bound;
  out.residual = std::abs(num.value - std::complex<double>(exact.get_d(), 0.0));
  out.pass = num.ok && out.residual < tol;
  return out;
}

KstarResolution resolve_kstar_normalization(long N, long m, const std::vector<P1Class>& samples,
                                            double tol) {
  require_level(N);
  if (m <= 1 || N % m != 0) throw std::invalid_argument("resolve_kstar: need m | N, m > 1");
  KstarResolution out;
  std::ostringstream detail;
  int votes_half_odd = 0, votes_half_even = 0, votes_one_odd = 0, votes_one_even = 0, used = 0;

  for (const auto& g_in : samples) {
    P1Class g = p1_normalize(N, g_in.c, g_in.d);
    FClassification cls = classify_class(N, g);
    if (cls.shape != FShape::RPlusMinus) continue;
    Mat22 gamma;
    try {
      gamma = class_path_gamma(N, g);
    } catch (const std::invalid_argument&) {
      continue;  // endpoints in different cusp orbits; not usable as a sample
    }
    // candidate normalizations of int [2 E(z) - kappa E((z+1)/2)] dz
    IntegralResult i1 = period_numeric(N, m, gamma, tol * 1e-3, 0, false);
    IntegralResult i2 = period_numeric(N, m, h_conjugate(gamma), tol * 1e-3, 0, false);
    if (!i1.ok || !i2.ok) continue;
    double val_half = (2.0 * i1.value - i2.value).real();        // kappa = 1/2
    double val_one = (2.0 * i1.value - 2.0 * i2.value).real();   // kappa = 1
    // Dedekind closed form for both lifts of r mod 2N
    long r_odd = (cls.r % 2 != 0) ? cls.r : cls.r + N;
    long r_even = (cls.r % 2 == 0) ? cls.r : cls.r + N;
    double f_odd =
        Rat(12 * (dedekind_sum_general(r_odd, m) - 2 * dedekind_sum_general(r_odd, 2 * m))).get_d();
    double f_even =
        Rat(12 * (dedekind_sum_general(r_even, m) - 2 * dedekind_sum_general(r_even, 2 * m))).get_d();
    ++used;
    if (std::abs(val_half - f_odd) < tol) ++votes_half_odd;
    if (std::abs(val_half - f_even) < tol) ++votes_half_even;
    if (std::abs(val_one - f_odd) < tol) ++votes_one_odd;
    if (std::abs(val_one - f_even) < tol) ++votes_one_even;
    detail << "g=(" << g.c << "," << g.d << ") r=" << cls.r << " val(1/2)=" << val_half
           << " val(1)=" << val_one << " F[r odd]=" << f_odd << " F[r even]=" << f_even << "; ";
  }

  detail << "samples used=" << used;
  out.detail = detail.str();
  if (used == 0) return out;  // inconclusive
  if (votes_half_odd == used && votes_one_odd < used && votes_half_even < used) {
    out.conclusive = true;
    out.factor = Rat(1, 2);
    out.r_odd = true;
  } else if (votes_half_even == used && votes_one_even < used && votes_half_odd < used) {
    out.conclusive = true;
    out.factor = Rat(1, 2);
    out.r_odd = false;
  } else if (votes_one_odd == used && votes_half_odd < used && votes_one_even < used) {
    out.conclusive = true;
    out.factor = Rat(1);
    out.r_odd = true;
  } else if (votes_one_even == used && votes_half_even < used && votes_one_odd < used) {
    out.conclusive = true;
    out.factor = Rat(1);
    out.r_odd = false;
  }
  return out;
}

}  // namespace eisw
