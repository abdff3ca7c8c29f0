#pragma once

#include <map>

#include "eisw/p1.hpp"
#include "eisw/rational.hpp"

namespace eisw {

// Cusp of X_0(N) for square-free N, keyed by the divisor gcd(denominator, N).
// key = N is the cusp at infinity, key = 1 the cusp 0, otherwise 1/key.
struct CuspClass {
  long key = 1;
  auto operator<=>(const CuspClass&) const = default;
};

using CuspDivisor = std::map<long, Rat>;

// Class of the cusp a/c (c = 0 encodes infinity).  Requires gcd(a, c) = 1.
CuspClass cusp_classify(long N, const Int& a, const Int& c);

long ramification_index(long N, const CuspClass& y);

// Constant term of E_m at the cusp y, normalized so the value at infinity is
// m - 1; closed form gcd(key, m)^2/m - 1.
Rat eisenstein_a0(long N, long m, const CuspClass& y);

// Degree-zero integral divisor with coefficient e(y) * a0(y) at each cusp.
CuspDivisor eisenstein_divisor(long N, long m);

Rat divisor_degree(const CuspDivisor& d);

}  // namespace eisw
