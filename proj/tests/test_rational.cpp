#include "eisw/rational.hpp"

#include <random>

#include "doctest.h"

using namespace eisw;

namespace {

// Independent oracle: the textbook sum written directly over mpq, nothing
// shared with the library implementation.
Rat dedekind_oracle(long u, long v) {
  Rat s(0);
  for (long t = 1; t < v; ++t) {
    s += bbar1(rat(t, v)) * bbar1(rat(static_cast<long>(t) * u, v));
  }
  s.canonicalize();
  return s;
}

}  // namespace

TEST_CASE("bbar1 values and periodicity") {
  CHECK(bbar1(Rat(0)) == Rat(0));
  CHECK(bbar1(Rat(1, 2)) == Rat(0));
  CHECK(bbar1(Rat(7, 3)) == Rat(-1, 6));
  CHECK(bbar1(Rat(5)) == Rat(0));
  CHECK(bbar1(Rat(-1, 3)) == Rat(2, 3) - Rat(1, 2));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    long num = static_cast<long>(rng() % 2001) - 1000;
    long den = static_cast<long>(rng() % 999) + 1;
    Rat x = rat(num, den);
    CHECK(bbar1(x + 1) == bbar1(x));
    CHECK(bbar1(x - 3) == bbar1(x));
  }
}

TEST_CASE("xgcd worked examples and Bezout identity") {
  auto r = xgcd(3, 5);
  CHECK(r.g == 1);
  CHECK(r.x == 2);
  CHECK(r.y == -1);
  r = xgcd(15, 1);
  CHECK(r.g == 1);
  CHECK(r.x == 0);
  CHECK(r.y == 1);
  r = xgcd(6, 4);
  CHECK(r.g == 2);
  CHECK(r.x == 1);
  CHECK(r.y == -1);
  CHECK_THROWS_AS(xgcd(0, 0), std::invalid_argument);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    Int a = static_cast<long>(rng() % 20001) - 10000;
    Int b = static_cast<long>(rng() % 20001) - 10000;
    if (a == 0 && b == 0) continue;
    auto e = xgcd(a, b);
    CHECK(e.g > 0);
    CHECK(a * e.x + b * e.y == e.g);
    CHECK(a % e.g == 0);
    CHECK(b % e.g == 0);
  }
}

TEST_CASE("dedekind_sum examples against the direct oracle") {
  CHECK(dedekind_sum(0, 1) == Rat(0));
  // (1/3 - 1/2)^2 + (2/3 - 1/2)^2 = 1/18
  CHECK(dedekind_sum(1, 3) == Rat(1, 18));
  CHECK(dedekind_sum(1, 3) == dedekind_oracle(1, 3));
  CHECK(dedekind_sum(1, 15) == Rat(91, 90));
  CHECK(dedekind_sum(1, 15) == dedekind_oracle(1, 15));
  CHECK(dedekind_sum(1, 30) == Rat(203, 90));

  CHECK_THROWS_AS(dedekind_sum(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(dedekind_sum(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(dedekind_sum(1, -3), std::invalid_argument);

  std::mt19937_64 rng(13);
  for (int i = 0; i < 60; ++i) {
    long v = static_cast<long>(rng() % 80) + 1;
    long u = static_cast<long>(rng() % (2 * v + 1)) - v;
    Int g;
    mpz_gcd(g.get_mpz_t(), Int(u).get_mpz_t(), Int(v).get_mpz_t());
    if (g != 1) continue;
    CHECK(dedekind_sum(u, v) == dedekind_oracle(u, v));
  }
}

TEST_CASE("dedekind_sum periodicity and oddness") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 100; ++i) {
    long v = static_cast<long>(rng() % 400) + 1;
    long u = static_cast<long>(rng() % 10000) - 5000;
    Int g;
    mpz_gcd(g.get_mpz_t(), Int(u).get_mpz_t(), Int(v).get_mpz_t());
    if (g != 1) continue;
    CHECK(dedekind_sum(u + v, v) == dedekind_sum(u, v));
    CHECK(dedekind_sum(-u, v) == -dedekind_sum(u, v));
  }
}

TEST_CASE("dedekind_sum_fast equals dedekind_sum") {
  CHECK(dedekind_sum_fast(0, 1) == Rat(0));
  CHECK(dedekind_sum_fast(1, 3) == Rat(1, 18));
  CHECK(dedekind_sum_fast(5, 7) == dedekind_sum(5, 7));
  for (long v = 1; v <= 300; ++v) {
    for (long u = 0; u < v || (v == 1 && u == 0); ++u) {
      Int g;
      mpz_gcd(g.get_mpz_t(), Int(u).get_mpz_t(), Int(v).get_mpz_t());
      if (g != 1) continue;
      CHECK(dedekind_sum_fast(u, v) == dedekind_sum(u, v));
      if (v == 1) break;
    }
  }
}

TEST_CASE("dedekind reciprocity") {
  std::mt19937_64 rng(19);
  int done = 0;
  while (done < 1000) {
    Int u = static_cast<unsigned long>(rng() % 1000000) + 1;
    Int v = static_cast<unsigned long>(rng() % 1000000) + 1;
    Int g;
    mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
    if (g != 1) continue;
    Rat lhs = dedekind_sum_fast(u, v) + dedekind_sum_fast(v, u);
    Rat rhs = Rat(-1, 4) + Rat(1, 12) * (Rat(u) / Rat(v) + Rat(v) / Rat(u) + Rat(1) / Rat(u * v));
    CHECK(lhs == rhs);
    ++done;
  }
}

TEST_CASE("dedekind_sum_general extends the sum to non-coprime arguments") {
  // periodic collapse: B1(3t/15) = B1(t/5)
  Rat expected(0);
  for (long t = 1; t < 15; ++t) expected += bbar1(rat(t, 15)) * bbar1(rat(t, 5));
  expected.canonicalize();
  CHECK(dedekind_sum_general(3, 15) == expected);
  CHECK(dedekind_sum_general(1, 3) == dedekind_sum(1, 3));
  CHECK_THROWS_AS(dedekind_sum_general(1, 0), std::invalid_argument);
}

TEST_CASE("rational string round trip") {
  CHECK(rat_to_string(Rat(1, 18)) == "1/18");
  CHECK(rat_to_string(Rat(-42)) == "-42");
  CHECK(rat_to_string(rat(14, -15)) == "-14/15");
  CHECK(rat_from_string("91/90") == Rat(91, 90));
  CHECK(rat_from_string("-7") == Rat(-7));
  CHECK(is_integral(rat(6, 3)));
  CHECK(!is_integral(Rat(1, 6)));
}
