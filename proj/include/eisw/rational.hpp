#pragma once

#include <gmpxx.h>

#include <string>

namespace eisw {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class does not canonicalize on construction; route every fraction whose
// numerator/denominator may share a factor (or have a negative denominator)
// through here.
inline Rat rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Periodized first Bernoulli polynomial: 0 on integers, frac(x) - 1/2 otherwise.
Rat bbar1(const Rat& x);

struct Xgcd {
  Int g, x, y;  // g = gcd(a,b) > 0 and a*x + b*y = g
};
Xgcd xgcd(const Int& a, const Int& b);

// Inverse of a modulo n (n >= 1); throws if gcd(a, n) != 1.
Int mod_inverse(const Int& a, const Int& n);

// Classical Dedekind sum s(u,v) = sum_{t=1}^{v-1} B1(t/v) B1(tu/v).
// Requires v >= 1 and gcd(u,v) = 1.
Rat dedekind_sum(const Int& u, const Int& v);

// Same value as dedekind_sum, in O(log v) steps via the reciprocity law.
Rat dedekind_sum_fast(const Int& u, const Int& v);

// The defining sum evaluated without the coprimality requirement.
Rat dedekind_sum_general(const Int& u, const Int& v);

bool is_integral(const Rat& r);

// "p/q" in lowest terms, "p" when the denominator is 1.
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

}  // namespace eisw
