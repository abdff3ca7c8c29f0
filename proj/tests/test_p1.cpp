#include "eisw/p1.hpp"

#include <numeric>
#include <random>
#include <set>

#include "doctest.h"

using namespace eisw;

namespace {

// brute-force orbit set of (c, d) under unit scaling, as plain pairs
std::set<std::pair<long, long>> orbit_of(long N, long c, long d) {
  std::set<std::pair<long, long>> orb;
  for (long u = 1; u < N; ++u) {
    if (std::gcd(u, N) != 1) continue;
    orb.insert({(u * (((c % N) + N) % N)) % N, (u * (((d % N) + N) % N)) % N});
  }
  return orb;
}

// orbit-count oracle independent of p1_normalize
long count_orbits(long N) {
  std::set<std::set<std::pair<long, long>>> orbits;
  for (long c = 0; c < N; ++c)
    for (long d = 0; d < N; ++d)
      if (std::gcd(std::gcd(c, d), N) == 1) orbits.insert(orbit_of(N, c, d));
  return static_cast<long>(orbits.size());
}

}  // namespace

TEST_CASE("level validation") {
  CHECK(is_valid_level(15));
  CHECK(is_valid_level(3));
  CHECK(is_valid_level(105));
  CHECK(!is_valid_level(9));
  CHECK(!is_valid_level(12));
  CHECK(!is_valid_level(45));
  CHECK_THROWS_AS(p1_list(16), std::invalid_argument);
}

TEST_CASE("p1_normalize worked examples") {
  CHECK(p1_normalize(15, 0, 1) == P1Class{0, 1});
  CHECK(p1_normalize(15, 2, 4) == P1Class{1, 2});
  CHECK_THROWS_AS(p1_normalize(15, 3, 6), std::invalid_argument);
}

TEST_CASE("p1_normalize is idempotent and constant on unit orbits") {
  for (long N : {15L, 21L, 105L}) {
    for (long c = 0; c < N; ++c) {
      for (long d = 0; d < N; ++d) {
        if (std::gcd(std::gcd(c, d), N) != 1) continue;
        P1Class g = p1_normalize(N, c, d);
        CHECK(p1_normalize(N, g.c, g.d) == g);
        // same class at every orbit point
        for (auto [cc, dd] : orbit_of(N, c, d)) {
          if ((cc + dd) % 7 != 0) continue;  // thin the quadratic loop
          CHECK(p1_normalize(N, cc, dd) == g);
        }
      }
    }
  }
}

TEST_CASE("p1_list sizes") {
  CHECK(p1_list(15).size() == 24);
  CHECK(p1_list(3).size() == 4);
  CHECK(p1_list(105).size() == 192);
  CHECK(count_orbits(3) == 4);
  CHECK(count_orbits(15) == 24);
  // every entry canonical and strictly increasing
  auto l = p1_list(15);
  for (size_t i = 0; i + 1 < l.size(); ++i) CHECK(l[i] < l[i + 1]);
}

TEST_CASE("omega_reps bottom rows and worked entries") {
  for (long N : {15L, 21L}) {
    auto omega = omega_reps(N);
    auto list = p1_list(N);
    CHECK(omega.size() == list.size());
    for (const auto& g : list) {
      REQUIRE(omega.count(g) == 1);
      const Mat22& mat = omega.at(g);
      CHECK(mat.det() == 1);
      CHECK(bottom_row_class(N, mat) == g);
    }
  }
  auto omega15 = omega_reps(15);
  CHECK(omega15.at(p1_normalize(15, 1, 0)) == Mat22{0, -1, 1, 0});
  CHECK(omega15.at(p1_normalize(15, 3, -1)) == Mat22{-1, 0, 3, -1});
}

TEST_CASE("omega coset completeness") {
  for (long N : {15L, 21L, 33L, 35L}) {
    auto omega = omega_reps(N);
    std::vector<Mat22> mats;
    for (const auto& [g, mat] : omega) mats.push_back(mat);
    for (size_t i = 0; i < mats.size(); ++i)
      for (size_t j = 0; j < mats.size(); ++j)
        if (i != j) CHECK(!in_gamma0(mats[i] * mats[j].inv(), N));
  }
}

TEST_CASE("omega_tilde lies in Gamma(2) and matches the Omega cosets") {
  for (long N : {15L, 21L, 35L}) {
    auto omega = omega_reps(N);
    auto tilde = omega_tilde_reps(N);
    CHECK(tilde.size() == p1_list(N).size());
    for (const auto& [g, mat] : tilde) {
      CHECK(mat.det() == 1);
      CHECK(in_gamma2(mat));
      CHECK(in_gamma0(mat * omega.at(g).inv(), N));
    }
  }
}

TEST_CASE("gamma2_rep produces Gamma(2) matrices in the right class") {
  for (long N : {15L, 105L}) {
    for (const auto& g : p1_list(N)) {
      Mat22 m = gamma2_rep(N, g);
      CHECK(in_gamma2(m));
      CHECK(bottom_row_class(N, m) == g);
    }
  }
}

TEST_CASE("twist_map worked examples") {
  CHECK(twist_map(15, 3, 1) == 0);
  CHECK(twist_map(15, 3, 2) == 1);
  CHECK_THROWS_AS(twist_map(15, 3, 5), std::invalid_argument);
  CHECK_THROWS_AS(twist_map(15, 15, 1), std::invalid_argument);
}

TEST_CASE("twist_map is injective and avoids exactly the excluded residues") {
  for (auto [N, m] : std::vector<std::pair<long, long>>{{15, 3}, {15, 5}, {21, 3}, {21, 7}, {105, 15}}) {
    long q = N / m;
    std::set<long> image;
    for (long k = 1; k < q; ++k) {
      if (std::gcd(k, q) != 1) continue;
      long s = twist_map(N, m, k);
      CHECK(image.insert(s).second);  // injective
    }
    // excluded residues: s with s*m = 1 mod p for some p | N/m
    std::set<long> expected;
    for (long s = 0; s < q; ++s) {
      bool excluded = false;
      for (long p : prime_factors(q))
        if ((s * m) % p == 1 % p) excluded = true;
      if (!excluded) expected.insert(s);
    }
    CHECK(image == expected);
  }
}
