#include "eisw/numeric.hpp"

#include <random>

#include "doctest.h"

using namespace eisw;

namespace {

Mat22 random_gamma0_small(long N, std::mt19937_64& rng) {
  for (;;) {
    long c = N * static_cast<long>(rng() % 5 + 1);
    long d = static_cast<long>(rng() % 40) + 1;
    if (std::gcd(c, d) != 1) continue;
    auto e = xgcd(d, c);
    return Mat22{e.x, -e.y, c, d};
  }
}

}  // namespace

TEST_CASE("degenerate and translation paths") {
  PathSpec degenerate;
  degenerate.waypoints = {{0.3, 1.0}, {0.3, 1.0}};
  auto r = integrate_eisenstein(15, 15, degenerate);
  CHECK(r.ok);
  CHECK(std::abs(r.value) < 1e-12);

  // z0 -> z0 + 1 at height 2: dominated by the constant term a0 = 14
  PathSpec shift;
  shift.waypoints = {{0.0, 2.0}, {1.0, 2.0}};
  auto s = integrate_eisenstein(15, 15, shift);
  CHECK(s.ok);
  CHECK(std::abs(s.value - std::complex<double>(14.0, 0.0)) < 1e-8);
}

TEST_CASE("numeric periods: translations exact, c != 0 within tolerance") {
  auto t = verify_period(15, 15, Mat22{1, 5, 0, 1}, 1e-6);
  CHECK(t.pass);
  CHECK(t.residual < 1e-10);

  auto p = verify_period(15, 15, Mat22{1, 0, 15, 1}, 1e-6);
  CHECK(p.pass);

  std::mt19937_64 rng(61);
  for (long m : {3L, 5L, 15L}) {
    for (int i = 0; i < 6; ++i) {
      Mat22 g = random_gamma0_small(15, rng);
      CAPTURE(m);
      auto chk = verify_period(15, m, g, 1e-6);
      CHECK(chk.pass);
    }
  }
}

TEST_CASE("path independence and numeric homomorphism") {
  Mat22 g{1, 0, 15, 1};
  std::complex<double> z0(0.0, 1.0);
  std::complex<double> gz0 = (z0) / (15.0 * z0 + 1.0);
  PathSpec a, b;
  a.waypoints = {z0, {z0.real(), 1.0}, {gz0.real(), 1.0}, gz0};
  b.waypoints = {z0, {z0.real(), 0.7}, {-0.3, 0.9}, {gz0.real(), 0.7}, gz0};
  auto ra = integrate_eisenstein(15, 15, a, 0, 1e-8);
  auto rb = integrate_eisenstein(15, 15, b, 0, 1e-8);
  CHECK(ra.ok);
  CHECK(rb.ok);
  CHECK(std::abs(ra.value - rb.value) < 2e-8);

  // integral along z0 -> g1 g2 z0 = sum of the two pieces
  std::mt19937_64 rng(67);
  Mat22 g1 = random_gamma0_small(15, rng);
  Mat22 g2 = random_gamma0_small(15, rng);
  auto i1 = period_numeric(15, 15, g1, 1e-8);
  auto i2 = period_numeric(15, 15, g2, 1e-8);
  auto i12 = period_numeric(15, 15, g1 * g2, 1e-8);
  CHECK(std::abs(i12.value - (i1.value + i2.value)) < 1e-6);
}

TEST_CASE("truncation: doubling terms moves the value at most the tail bound") {
  PathSpec path;
  path.waypoints = {{0.1, 0.08}, {0.1, 1.0}, {0.4, 1.0}, {0.4, 0.08}};
  auto coarse = integrate_eisenstein(15, 15, path, 600, 1.0);
  auto fine = integrate_eisenstein(15, 15, path, 1200, 1.0);
  CHECK(std::abs(fine.value - coarse.value) <= coarse.tail_bound);
}

TEST_CASE("k-star normalization resolves to the half factor") {
  std::vector<P1Class> samples;
  for (const auto& g : p1_list(15)) {
    FClassification cls = classify_class(15, g);
    if (cls.shape == FShape::RPlusMinus) samples.push_back(g);
  }
  REQUIRE(samples.size() >= 3);
  auto res = resolve_kstar_normalization(15, 15, samples);
  CHECK(res.conclusive);
  CHECK(res.factor == Rat(1, 2));
  CHECK(res.r_odd);  // the S(r, 2m) term takes the odd lift of r

  // winner reproduces F_15((0,2)) = -42
  FValues fv = f_values(15, 15);
  CHECK(fv.values.at(p1_normalize(15, 0, 2)) == Rat(-42));

  auto degenerate = resolve_kstar_normalization(15, 15, {});
  CHECK(!degenerate.conclusive);
}
