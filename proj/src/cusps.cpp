#include "eisw/cusps.hpp"

#include <numeric>
#include <stdexcept>

namespace eisw {

CuspClass cusp_classify(long N, const Int& a, const Int& c) {
  require_level(N);
  if (a == 0 && c == 0) throw std::invalid_argument("cusp_classify: (0, 0) is not a cusp");
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
  if (g != 1) throw std::invalid_argument("cusp_classify: gcd(a, c) must be 1");
  Int key;
  Int n(N);
  mpz_gcd(key.get_mpz_t(), c.get_mpz_t(), n.get_mpz_t());
  return {key.get_si()};
}

long ramification_index(long N, const CuspClass& y) {
  require_level(N);
  if (y.key <= 0 || N % y.key != 0) throw std::invalid_argument("ramification_index: key must divide N");
  return N / y.key;
}

Rat eisenstein_a0(long N, long m, const CuspClass& y) {
  require_level(N);
  if (m <= 1 || N % m != 0) throw std::invalid_argument("eisenstein_a0: need m | N, m > 1");
  if (y.key <= 0 || N % y.key != 0) throw std::invalid_argument("eisenstein_a0: key must divide N");
  long g = std::gcd(y.key, m);
  return rat(Int(g) * g - m, m);
}

CuspDivisor eisenstein_divisor(long N, long m) {
  CuspDivisor out;
  for (long key : divisors(N)) {
    CuspClass y{key};
    Rat coeff = Rat(ramification_index(N, y)) * eisenstein_a0(N, m, y);
    if (!is_integral(coeff)) throw std::logic_error("eisenstein_divisor: non-integral coefficient");
    out[key] = coeff;
  }
  if (divisor_degree(out) != 0) throw std::logic_error("eisenstein_divisor: nonzero degree");
  return out;
}

Rat divisor_degree(const CuspDivisor& d) {
  Rat s(0);
  for (const auto& [key, c] : d) s += c;
  return s;
}

}  // namespace eisw
