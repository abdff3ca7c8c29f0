#pragma once

#include <compare>
#include <map>
#include <vector>

#include "eisw/rational.hpp"

namespace eisw {

// Canonical point of P^1(Z/NZ): the lexicographically smallest pair in the
// unit-scaling orbit of (c, d).  c always ends up equal to gcd(c, N) (or 0).
struct P1Class {
  long c = 0, d = 0;
  auto operator<=>(const P1Class&) const = default;
};

struct Mat22 {
  Int a, b, c, d;

  Int det() const { return a * d - b * c; }
  Mat22 operator*(const Mat22& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  // inverse of a determinant-1 matrix
  Mat22 inv() const { return {d, -b, -c, a}; }
  static Mat22 identity() { return {1, 0, 0, 1}; }
  bool operator==(const Mat22&) const = default;
};

inline const Mat22 kS{0, -1, 1, 0};
inline const Mat22 kT{1, 1, 0, 1};
inline const Mat22 kR{0, -1, 1, 1};  // R = ST
inline const Mat22 kH{1, 1, 0, 2};   // conjugation z -> (z+1)/2

// Throws unless N is odd, square-free and >= 3.
void require_level(long N);
bool is_valid_level(long N);
std::vector<long> prime_factors(long N);
std::vector<long> divisors(long N);
long mod_inverse_long(long a, long n);

bool in_gamma0(const Mat22& g, long N);
bool in_gamma2(const Mat22& g);
// Gamma = Gamma_0(N) ∩ Gamma(2)
bool in_gamma(const Mat22& g, long N);

P1Class p1_normalize(long N, long c, long d);
P1Class p1_normalize(long N, const Int& c, const Int& d);

// All classes, lexicographically sorted; length = prod_{p | N} (p + 1).
std::vector<P1Class> p1_list(long N);

P1Class bottom_row_class(long N, const Mat22& g);

// Right action: class of (row of g) * M.
P1Class p1_right_action(long N, const P1Class& g, const Mat22& M);

// The explicit coset family Omega: alpha_k = (0,-1;1,k) for classes with
// c-part a unit, the identity for c = 0, and beta^m_l = (-1,-l;m,lm-1) for the
// intermediate divisors; keyed by the class of the bottom row.
std::map<P1Class, Mat22> omega_reps(long N);

// A complete coset family inside Gamma(2): the alpha-tilde matrices are taken
// as printed where they satisfy all defining checks, everything else is built
// from the defining properties (det 1, congruent to the identity mod 2, same
// Gamma_0(N)-coset as the Omega representative).
std::map<P1Class, Mat22> omega_tilde_reps(long N);

// A small Gamma(2) representative whose bottom row lies in the class g.
Mat22 gamma2_rep(long N, const P1Class& g);

// Unique s(k) in [0, N/m) with (km, -1) = (m, s(k)m - 1) in P^1(Z/NZ).
long twist_map(long N, long m, long k);

}  // namespace eisw
