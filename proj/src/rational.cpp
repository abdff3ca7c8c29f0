#include "eisw/rational.hpp"

#include <cstdint>
#include <stdexcept>

namespace eisw {

Rat bbar1(const Rat& x) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Rat frac = x - Rat(fl);
  if (frac == 0) return Rat(0);
  return frac - Rat(1, 2);
}

Xgcd xgcd(const Int& a, const Int& b) {
  if (a == 0 && b == 0) throw std::invalid_argument("xgcd(0, 0) is undefined");
  Int old_r = a, r = b;
  Int old_x = 1, x = 0;
  Int old_y = 0, y = 1;
  while (r != 0) {
    Int q = old_r / r;  // truncated division; matches the classical recursion
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_x - q * x;
    old_x = x;
    x = tmp;
    tmp = old_y - q * y;
    old_y = y;
    y = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  return {old_r, old_x, old_y};
}

Int mod_inverse(const Int& a, const Int& n) {
  if (n < 1) throw std::invalid_argument("mod_inverse: modulus must be >= 1");
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t()) == 0)
    throw std::invalid_argument("mod_inverse: argument not invertible");
  return inv;
}

namespace {

Int int_from_i64(std::int64_t x) {
  bool neg = x < 0;
  unsigned long long mag = neg ? static_cast<unsigned long long>(-(x + 1)) + 1ull
                               : static_cast<unsigned long long>(x);
  Int hi = static_cast<unsigned long>(mag >> 32);
  Int out = (hi << 32) + static_cast<unsigned long>(mag & 0xffffffffull);
  return neg ? Int(-out) : out;
}

// coprime: true lets the sum collapse to 4 sum(t r_t) - v^2(v-1), since
// t -> tu mod v permutes 1..v-1
Rat dedekind_core(const Int& u_in, const Int& v, bool coprime) {
  Int u = u_in % v;
  if (u < 0) u += v;
  if (v == 1) return Rat(0);
  Rat denom = Rat(4) * Rat(v) * Rat(v);
  if (v.fits_slong_p() && v.get_si() <= 2000000) {
    long vl = v.get_si();
    long ul = u.get_si();
    long r = 0;
    std::int64_t acc = 0;
    if (coprime) {
      // acc <= v^3/2 fits; the final combination is done over mpz
      for (long t = 1; t < vl; ++t) {
        r += ul;
        if (r >= vl) r -= vl;
        acc += static_cast<std::int64_t>(t) * r;
      }
      Rat out(4 * int_from_i64(acc) - Int(vl) * vl * (vl - 1));
      out /= denom;
      return out;
    } else {
      for (long t = 1; t < vl; ++t) {
        r += ul;
        if (r >= vl) r -= vl;
        if (r == 0) continue;
        acc += static_cast<std::int64_t>(2 * t - vl) * (2 * r - vl);
      }
    }
    Rat out(int_from_i64(acc));
    out /= denom;
    return out;
  }
  Int acc = 0;
  Int r = 0;
  for (Int t = 1; t < v; ++t) {
    r += u;
    if (r >= v) r -= v;
    if (r == 0) continue;
    acc += (2 * t - v) * (2 * r - v);
  }
  Rat out(acc);
  out /= denom;
  return out;
}

void check_dedekind_args(const Int& u, const Int& v) {
  if (v <= 0) throw std::invalid_argument("dedekind_sum: v must be positive");
  Int g;
  mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
  if (g != 1) throw std::invalid_argument("dedekind_sum: gcd(u, v) must be 1");
}

}  // namespace

Rat dedekind_sum(const Int& u, const Int& v) {
  check_dedekind_args(u, v);
  return dedekind_core(u, v, true);
}

Rat dedekind_sum_general(const Int& u, const Int& v) {
  if (v <= 0) throw std::invalid_argument("dedekind_sum_general: v must be positive");
  return dedekind_core(u, v, false);
}

Rat dedekind_sum_fast(const Int& u_in, const Int& v_in) {
  check_dedekind_args(u_in, v_in);
  // s(a,b) = -1/4 + (a^2 + b^2 + 1)/(12ab) - s(b mod a, a), s(0,1) = 0;
  // each level contributes ±(a^2 + b^2 + 1 - 3ab)/(12ab).  The fraction is
  // accumulated raw and canonicalized once at the end.
  Int a = u_in % v_in;
  if (a < 0) a += v_in;
  Int b = v_in;
  Int acc_num = 0, acc_den = 1;
  int sign = 1;
  while (a != 0) {
    Int den = 12 * a * b;
    Int num = a * a + b * b + 1 - 3 * a * b;
    if (sign > 0)
      acc_num = acc_num * den + num * acc_den;
    else
      acc_num = acc_num * den - num * acc_den;
    acc_den *= den;
    sign = -sign;
    Int r = b % a;
    b = a;
    a = r;
  }
  return rat(acc_num, acc_den);
}

bool is_integral(const Rat& r) { return r.get_den() == 1; }

std::string rat_to_string(const Rat& r) { return r.get_str(); }

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

}  // namespace eisw
