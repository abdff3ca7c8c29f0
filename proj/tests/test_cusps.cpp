#include "eisw/cusps.hpp"

#include <random>
#include <set>

#include "doctest.h"
#include "eisw/homology.hpp"

using namespace eisw;

TEST_CASE("cusp_classify worked examples") {
  CHECK(cusp_classify(15, 1, 0).key == 15);  // infinity
  CHECK(cusp_classify(15, 0, 1).key == 1);   // 0
  CHECK(cusp_classify(15, 1, 7).key == 1);   // 1/7 ~ 0
  CHECK_THROWS_AS(cusp_classify(15, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(cusp_classify(15, 0, 0), std::invalid_argument);
}

TEST_CASE("number of cusp classes is 2^r") {
  for (long N : {15L, 21L, 33L, 35L, 105L}) {
    std::set<long> keys;
    for (long a = -40; a <= 40; ++a)
      for (long c = 0; c <= 40; ++c) {
        if ((a == 0 && c == 0) || std::gcd(a, c) != 1) continue;
        keys.insert(cusp_classify(N, a, c).key);
      }
    long r = static_cast<long>(prime_factors(N).size());
    CHECK(static_cast<long>(keys.size()) == (1L << r));
  }
}

TEST_CASE("cusp_classify is constant on Gamma_0(N) orbits") {
  std::mt19937_64 rng(23);
  for (long N : {15L, 33L}) {
    for (int trial = 0; trial < 200; ++trial) {
      long a = static_cast<long>(rng() % 60) - 30;
      long c = static_cast<long>(rng() % 60) - 30;
      if ((a == 0 && c == 0) || std::gcd(a, c) != 1) continue;
      // random Gamma_0(N) element acting on the cusp a/c
      long r = N * static_cast<long>(rng() % 3 + 1);
      long s = static_cast<long>(rng() % 40) + 1;
      if (std::gcd(r, s) != 1) continue;
      auto e = xgcd(s, r);
      Mat22 gamma{e.x, -e.y, r, s};
      REQUIRE(in_gamma0(gamma, N));
      CuspPoint moved = apply(gamma, CuspPoint::make(a, c));
      CHECK(cusp_classify(N, moved.num, moved.den).key == cusp_classify(N, a, c).key);
    }
  }
}

TEST_CASE("ramification indices") {
  CHECK(ramification_index(15, CuspClass{15}) == 1);
  CHECK(ramification_index(15, CuspClass{1}) == 15);
  CHECK(ramification_index(15, CuspClass{3}) == 5);
  CHECK_THROWS_AS(ramification_index(15, CuspClass{4}), std::invalid_argument);
}

TEST_CASE("eisenstein_a0 worked values") {
  CHECK(eisenstein_a0(15, 15, CuspClass{15}) == Rat(14));
  CHECK(eisenstein_a0(15, 15, CuspClass{1}) == Rat(-14, 15));
  CHECK(eisenstein_a0(15, 3, CuspClass{5}) == Rat(-2, 3));
  CHECK(eisenstein_a0(15, 3, CuspClass{15}) == Rat(2));
}

TEST_CASE("eisenstein_divisor worked values, degree zero, injectivity") {
  CuspDivisor d15 = eisenstein_divisor(15, 15);
  CHECK(d15.at(15) == Rat(14));
  CHECK(d15.at(1) == Rat(-14));
  CHECK(d15.at(3) == Rat(-2));
  CHECK(d15.at(5) == Rat(2));

  CuspDivisor d3 = eisenstein_divisor(15, 3);
  CHECK(d3.at(15) == Rat(2));
  CHECK(d3.at(1) == Rat(-10));
  CHECK(d3.at(3) == Rat(10));
  CHECK(d3.at(5) == Rat(-2));

  for (long N : {15L, 21L, 33L, 35L, 105L}) {
    std::set<CuspDivisor> seen;
    for (long m : divisors(N)) {
      if (m == 1) continue;
      CuspDivisor d = eisenstein_divisor(N, m);
      CHECK(divisor_degree(d) == 0);
      for (const auto& [key, c] : d) CHECK(is_integral(c));
      CHECK(seen.insert(d).second);  // the divisor map is injective over m
    }
  }
}
