#include "eisw/p1.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eisw {

bool is_valid_level(long N) {
  if (N < 3 || N % 2 == 0) return false;
  long n = N;
  for (long p = 3; p * p <= n; p += 2) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  return true;
}

void require_level(long N) {
  if (!is_valid_level(N))
    throw std::invalid_argument("level must be odd, square-free and >= 3: N=" + std::to_string(N));
}

std::vector<long> prime_factors(long N) {
  std::vector<long> ps;
  long n = N;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::vector<long> divisors(long N) {
  std::vector<long> ds;
  for (long d = 1; d * d <= N; ++d) {
    if (N % d == 0) {
      ds.push_back(d);
      if (d != N / d) ds.push_back(N / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

long mod_inverse_long(long a, long n) {
  long r = ((a % n) + n) % n;
  auto e = xgcd(Int(r), Int(n));
  if (e.g != 1) throw std::invalid_argument("mod_inverse_long: not a unit");
  Int inv = e.x % n;
  if (inv < 0) inv += n;
  return inv.get_si();
}

bool in_gamma0(const Mat22& g, long N) { return g.det() == 1 && g.c % N == 0; }

bool in_gamma2(const Mat22& g) {
  return g.det() == 1 && g.a % 2 != 0 && g.d % 2 != 0 && g.b % 2 == 0 && g.c % 2 == 0;
}

bool in_gamma(const Mat22& g, long N) { return in_gamma0(g, N) && in_gamma2(g); }

P1Class p1_normalize(long N, long c, long d) {
  require_level(N);
  c = ((c % N) + N) % N;
  d = ((d % N) + N) % N;
  if (std::gcd(std::gcd(c, d), N) != 1)
    throw std::invalid_argument("p1_normalize: gcd(c, d, N) must be 1");
  long best_c = -1, best_d = -1;
  for (long u = 1; u < N; ++u) {
    if (std::gcd(u, N) != 1) continue;
    long cc = (u * c) % N;
    long dd = (u * d) % N;
    if (best_c < 0 || cc < best_c || (cc == best_c && dd < best_d)) {
      best_c = cc;
      best_d = dd;
    }
  }
  return {best_c, best_d};
}

P1Class p1_normalize(long N, const Int& c, const Int& d) {
  Int cm = c % N, dm = d % N;
  if (cm < 0) cm += N;
  if (dm < 0) dm += N;
  return p1_normalize(N, cm.get_si(), dm.get_si());
}

std::vector<P1Class> p1_list(long N) {
  require_level(N);
  // the canonical c is min over the unit orbit of uc mod N, which is 0 for
  // the zero class and gcd(c, N) otherwise, so only 0 and proper divisors
  // can occur
  std::vector<long> c_candidates{0};
  for (long d : divisors(N))
    if (d < N) c_candidates.push_back(d);
  std::vector<P1Class> out;
  for (long c : c_candidates) {
    for (long d = 0; d < N; ++d) {
      if (std::gcd(std::gcd(c, d), N) != 1) continue;
      P1Class g = p1_normalize(N, c, d);
      if (g.c == c && g.d == d) out.push_back(g);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

P1Class bottom_row_class(long N, const Mat22& g) { return p1_normalize(N, g.c, g.d); }

P1Class p1_right_action(long N, const P1Class& g, const Mat22& M) {
  Int c = g.c * M.a + g.d * M.c;
  Int d = g.c * M.b + g.d * M.d;
  return p1_normalize(N, c, d);
}

std::map<P1Class, Mat22> omega_reps(long N) {
  require_level(N);
  std::map<P1Class, Mat22> out;
  auto insert_unique = [&](const Mat22& m) {
    auto [it, fresh] = out.emplace(bottom_row_class(N, m), m);
    if (!fresh) throw std::logic_error("omega_reps: duplicate coset");
  };
  for (long k = 0; k < N; ++k) insert_unique(Mat22{0, -1, 1, k});  // alpha_k
  insert_unique(Mat22::identity());                                // alpha_N
  for (long m : divisors(N)) {
    if (m == 1 || m == N) continue;
    for (long l = 0; l < N / m; ++l) insert_unique(Mat22{-1, -l, m, l * m - 1});  // beta^m_l
  }
  if (out.size() != p1_list(N).size()) throw std::logic_error("omega_reps: size mismatch");
  return out;
}

Mat22 gamma2_rep(long N, const P1Class& g_in) {
  // bottom row (c', d') == u*(g.c, g.d) mod N with c' even, d' odd,
  // gcd(c', d') = 1; complete to det 1 with even b and odd a.
  P1Class g = p1_normalize(N, g_in.c, g_in.d);
  long c0 = g.c % N, d0 = g.d % N;
  Int c = (c0 % 2 == 0) ? Int(c0) : Int(c0 + N);
  Int d = (d0 % 2 == 1) ? Int(d0) : Int(d0 + N);
  if (c == 0 && d == 1) return Mat22::identity();
  Int gcd_cd;
  mpz_gcd(gcd_cd.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  while (gcd_cd != 1) {
    d += 2 * N;
    mpz_gcd(gcd_cd.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  }
  // a*d - b*c = 1
  auto e = xgcd(d, c);
  Int a = e.x, b = -e.y;
  // b even: shift by (a, b) -> (a + t c, b + t d), d odd so t = b mod 2 works
  if (b % 2 != 0) {
    a += c;
    b += d;
  }
  Mat22 out{a, b, c, d};
  if (!in_gamma2(out) || bottom_row_class(N, out) != g)
    throw std::logic_error("gamma2_rep: construction failed");
  return out;
}

std::map<P1Class, Mat22> omega_tilde_reps(long N) {
  require_level(N);
  auto omega = omega_reps(N);
  std::map<P1Class, Mat22> out;
  // alpha_k-tilde as printed: (s_k N^2, s_k N - 1; s_k N + 1, s_k)
  for (long k = 0; k < N; ++k) {
    long delta = (k % 2 == 0) ? 0 : 1;
    Int sk = Int(k) + Int(delta - 1) * N;
    Mat22 m{sk * N * N, sk * N - 1, sk * N + 1, sk};
    P1Class cls = bottom_row_class(N, m);
    if (!in_gamma2(m) || !in_gamma0(m * omega.at(cls).inv(), N))
      throw std::logic_error("omega_tilde_reps: printed alpha_k fails its defining checks");
    out.emplace(cls, m);
  }
  // remaining cosets from the defining properties
  for (const auto& [cls, rep] : omega) {
    if (out.count(cls)) continue;
    Mat22 m = gamma2_rep(N, cls);
    if (!in_gamma0(m * rep.inv(), N))
      throw std::logic_error("omega_tilde_reps: coset mismatch");
    out.emplace(cls, m);
  }
  if (out.size() != omega.size()) throw std::logic_error("omega_tilde_reps: size mismatch");
  return out;
}

long twist_map(long N, long m, long k) {
  require_level(N);
  if (m <= 1 || m >= N || N % m != 0) throw std::invalid_argument("twist_map: need m | N, 1 < m < N");
  long q = N / m;
  if (std::gcd(((k % q) + q) % q, q) != 1) throw std::invalid_argument("twist_map: k must be a unit mod N/m");
  // x = s(k)m - 1 with x = -1 mod m and x = -k^{-1} mod N/m
  long kinv = mod_inverse_long(k, q);
  long x = -1;
  // CRT: x = -1 + m*t with m*t = -kinv + 1 mod q
  long t = (mod_inverse_long(m, q) * (((1 - kinv) % q + q) % q)) % q;
  x = -1 + m * t;
  long s = ((x + 1) / m) % q;
  if (s < 0) s += q;
  // defining identity in P^1
  if (p1_normalize(N, k * m % N, N - 1) != p1_normalize(N, m, ((s * m - 1) % N + N) % N))
    throw std::logic_error("twist_map: defining identity failed");
  return s;
}

}  // namespace eisw
