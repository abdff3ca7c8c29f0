#pragma once

#include <map>
#include <utility>
#include <vector>

#include "eisw/cusps.hpp"
#include "eisw/homology.hpp"
#include "eisw/p1.hpp"
#include "eisw/rational.hpp"

namespace eisw {

// q-expansion of E_m = m E2'(mz) - E2'(z) where E2' = 1 - 24 sum sigma_1(n) q^n:
// a_0 = m - 1, a_n = 24 sigma_1(n) - 24 m sigma_1(n/m) (second term when m | n).
std::vector<Int> q_expansion(long N, long m, long n_max);

Int sigma1(long n);

// Period homomorphism pi_{E_m} on Gamma_0(N):
//   (a+d)/c (m-1) + 12 sgn(c) (S(d,|c|) - S(d,|c|/m))   for c != 0
//   (b/d)(m-1)                                          for c = 0.
// The value is always an integer.
Rat period(long N, long m, const Mat22& gamma);

// Same formula on the larger group Gamma_0(m); used by the conjugation
// identity and internally by the cusp potentials.
Rat period_level_m(long m, const Mat22& gamma);

// P_m(gamma) = (2 pi(gamma) - pi(h gamma h^-1)) / 12 for gamma in
// Gamma_0(N) ∩ Gamma(2), h = (1,1;0,2).
Rat p_m(long N, long m, const Mat22& gamma);

Mat22 h_conjugate(const Mat22& gamma);  // h gamma h^{-1} for gamma in Gamma(2)

// The matrices gamma_1^{x,k}, gamma_2^{x,k} fixing -1/(s_k x + 2) resp.
// -1/(s_k x): solves l(s_k x + 2) - 2 s N = 1 and l' s_k x - 2 s' N/x = 1 with
// minimal non-negative l, l' (bezout_variant shifts to the next solution).
// Throws when the gcd conditions make a system unsolvable.
std::pair<Mat22, Mat22> build_gammas(long N, long x, long k, int bezout_variant = 0);

long s_k_of(long N, long k);  // k + (delta_k - 1) N, always odd

// Shape of a class in the case analysis of F_m.
enum class FShape { Trivial, RPlusMinus, ExceptionalRow, ExceptionalCol, General };

struct FClassification {
  FShape shape = FShape::General;
  long r = 0;        // for RPlusMinus: (r-1, r+1) ~ g, 0 <= r < N
  long x = 0, k = 0; // for Exceptional*: g ~ (±(1+kx), 1) or (1, ±(1+kx)) with
                     // a solvable gamma pair
  bool negated = false;  // the (-1-kx) flavour
};

FClassification classify_class(long N, const P1Class& g);

struct FValues {
  long N = 0, m = 0;
  // even-element normalization (the x6/x12 scale); keys in p1_list order
  std::map<P1Class, Rat> values;
};

// F_m on every class of P^1(Z/NZ), even-element scale.  Exact; the closed
// forms (0 on (±1,1), 12(S(r,m)-2S(r,2m)) on the (r-1,r+1) shape with the odd
// lift of r, ±6(P_m(gamma_1)-P_m(gamma_2)) on exceptional shapes) are
// asserted internally against the general path-potential evaluation.
FValues f_values(long N, long m, int bezout_variant = 0);

// gamma in Gamma_0(N) ∩ Gamma(2) carrying the geodesic endpoint rep(1) to
// rep(-1) for the Gamma(2) representative of g; exists iff both endpoints lie
// in the same cusp orbit (throws otherwise).  For such g and any m | N,
// F_m(g) = 2 pi(gamma) - pi(h gamma h^{-1}) = 12 P_m(gamma).
Mat22 class_path_gamma(long N, const P1Class& g);

// Eisenstein element: coefficient F_m(g)/6 at every g; all integral.
FormalChain eisenstein_element(long N, long m);

struct WindingElement {
  long N = 0;
  Int n;                     // (N-1)/gcd(N-1, 12)
  std::map<long, Rat> coeffs;  // v -> coefficient of {0, 1/v}, v in (Z/N)*
  FormalChain chain;           // the same element over Manin symbols
};

// e_N = 1/(1-N) sum_v F_N((1,v)) {0, 1/v}.
WindingElement winding_element(long N);

}  // namespace eisw
