#include "eisw/eisenstein.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eisw {

Int sigma1(long n) {
  if (n <= 0) throw std::invalid_argument("sigma1: n must be positive");
  Int s = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      s += d;
      if (d != n / d) s += n / d;
    }
  }
  return s;
}

std::vector<Int> q_expansion(long N, long m, long n_max) {
  require_level(N);
  if (m <= 1 || N % m != 0) throw std::invalid_argument("q_expansion: need m | N, m > 1");
  if (n_max < 0) throw std::invalid_argument("q_expansion: n_max must be >= 0");
  std::vector<Int> a(n_max + 1, 0);
  a[0] = m - 1;
  // sigma_1 by sieve
  std::vector<Int> sig(n_max + 1, 0);
  for (long d = 1; d <= n_max; ++d)
    for (long n = d; n <= n_max; n += d) sig[n] += d;
  for (long n = 1; n <= n_max; ++n) {
    a[n] = 24 * sig[n];
    if (n % m == 0) a[n] -= 24 * Int(m) * sig[n / m];
  }
  return a;
}

Rat period_level_m(long m, const Mat22& g) {
  if (m <= 1) throw std::invalid_argument("period: need m > 1");
  if (g.det() != 1) throw std::invalid_argument("period: matrix must have determinant 1");
  if (g.c % m != 0) throw std::invalid_argument("period: matrix not in Gamma_0(m)");
  Rat out;
  if (g.c == 0) {
    // d = a = +-1
    out = rat(g.b, g.d) * (m - 1);
  } else {
    Int ac = abs(g.c);
    int sgn = g.c > 0 ? 1 : -1;
    out = rat(g.a + g.d, g.c) * (m - 1) +
          Rat(12 * sgn) * (dedekind_sum_fast(g.d, ac) - dedekind_sum_fast(g.d, ac / m));
  }
  if (!is_integral(out)) throw std::logic_error("period: non-integral value (formula misuse)");
  return out;
}

Rat period(long N, long m, const Mat22& gamma) {
  require_level(N);
  if (m <= 1 || N % m != 0) throw std::invalid_argument("period: need m | N, m > 1");
  if (!in_gamma0(gamma, N)) throw std::invalid_argument("period: matrix not in Gamma_0(N)");
  return period_level_m(m, gamma);
}

Mat22 h_conjugate(const Mat22& g) {
  if (!in_gamma2(g)) throw std::invalid_argument("h_conjugate: matrix not in Gamma(2)");
  return {g.a + g.c, (g.b + g.d - g.a - g.c) / 2, 2 * g.c, g.d - g.c};
}

Rat p_m(long N, long m, const Mat22& gamma) {
  require_level(N);
  if (!in_gamma(gamma, N)) throw std::invalid_argument("p_m: matrix not in Gamma_0(N) ∩ Gamma(2)");
  return (2 * period(N, m, gamma) - period(N, m, h_conjugate(gamma))) / 12;
}

long s_k_of(long N, long k) {
  long delta = ((k % 2) + 2) % 2;
  long sk = k + (delta - 1) * N;
  if (sk % 2 == 0) throw std::logic_error("s_k must be odd");
  return sk;
}

std::pair<Mat22, Mat22> build_gammas(long N, long x, long k, int bezout_variant) {
  require_level(N);
  if (x <= 1 || N % x != 0) throw std::invalid_argument("build_gammas: x must divide N");
  for (long p = 2; p * p <= x; ++p)
    if (x % p == 0) throw std::invalid_argument("build_gammas: x must be prime");
  if (bezout_variant < 0) throw std::invalid_argument("build_gammas: variant must be >= 0");

  const long sk = s_k_of(N, k);
  const Int w1 = Int(sk) * x + 2;  // gamma_1 fixes 1/w1 -> -1/w1
  const Int w2 = Int(sk) * x;      // gamma_2 fixes 1/w2 -> -1/w2

  // l (s_k x + 2) - 2 s N = 1
  Int mod1 = 2 * Int(N);
  Int g1;
  mpz_gcd(g1.get_mpz_t(), w1.get_mpz_t(), mod1.get_mpz_t());
  if (g1 != 1)
    throw std::invalid_argument("build_gammas: l(s_k x + 2) - 2sN = 1 unsolvable (gcd != 1)");
  Int l = mod_inverse(w1, mod1) + bezout_variant * mod1;
  Int s = (l * w1 - 1) / mod1;

  // l' s_k x - 2 s' N/x = 1
  Int mod2 = 2 * Int(N) / x;
  Int g2;
  mpz_gcd(g2.get_mpz_t(), w2.get_mpz_t(), mod2.get_mpz_t());
  if (g2 != 1)
    throw std::invalid_argument("build_gammas: l' s_k x - 2 s' N/x = 1 unsolvable (gcd != 1)");
  Int lp = mod_inverse(w2, mod2) + bezout_variant * mod2;
  Int sp = (lp * w2 - 1) / mod2;

  Mat22 gamma1{1 + 4 * s * N, -2 * l, -4 * s * w1 * N, 1 + 4 * s * N};
  Mat22 gamma2{1 + 4 * sp * (N / x), -2 * lp, -4 * sp * sk * N, 1 + 4 * sp * (N / x)};

  for (const Mat22* g : {&gamma1, &gamma2})
    if (g->det() != 1 || !in_gamma(*g, N))
      throw std::logic_error("build_gammas: constructed matrix fails membership");
  if (apply(gamma1, CuspPoint::make(1, w1)) != CuspPoint::make(-1, w1))
    throw std::logic_error("build_gammas: gamma_1 fixed-point identity failed");
  if (apply(gamma2, CuspPoint::make(1, w2)) != CuspPoint::make(-1, w2))
    throw std::logic_error("build_gammas: gamma_2 fixed-point identity failed");
  return {gamma1, gamma2};
}

namespace {

long gcd_mod(long a, long n) { return std::gcd(((a % n) + n) % n, n); }

}  // namespace

FClassification classify_class(long N, const P1Class& g_in) {
  require_level(N);
  P1Class g = p1_normalize(N, g_in.c, g_in.d);
  FClassification out;

  if (g == p1_normalize(N, 1, 1) || g == p1_normalize(N, 1, N - 1)) {
    out.shape = FShape::Trivial;
    return out;
  }

  long diff = gcd_mod(g.d - g.c, N);
  if (diff == 1) {
    long u = (2 * mod_inverse_long(((g.d - g.c) % N + N) % N, N)) % N;
    out.shape = FShape::RPlusMinus;
    out.r = (u * g.c + 1) % N;
    return out;
  }

  // exceptional shapes: one coordinate a unit, t within kx of +-1, and the
  // Bezout systems solvable: {gcd(t-1,N), gcd(t+1,N)} = {x, 1} for a prime x
  auto try_exceptional = [&](long t, FShape shape) -> bool {
    long gm = gcd_mod(t - 1, N);
    long gp = gcd_mod(t + 1, N);
    for (long x : prime_factors(N)) {
      if (gm == x && gp == 1) {  // t = 1 + kx
        out.shape = shape;
        out.x = x;
        out.k = (((t - 1) % N + N) % N) / x;
        out.negated = false;
        return true;
      }
      if (gp == x && gm == 1) {  // t = -1 - kx
        out.shape = shape;
        out.x = x;
        out.k = (((-1 - t) % N + N) % N) / x;
        out.negated = true;
        return true;
      }
    }
    return false;
  };

  if (std::gcd(g.d, N) == 1) {
    long t = (g.c * mod_inverse_long(g.d, N)) % N;  // g ~ (t, 1)
    if (try_exceptional(t, FShape::ExceptionalRow)) return out;
  }
  if (std::gcd(g.c, N) == 1) {
    long t = (g.d * mod_inverse_long(g.c, N)) % N;  // g ~ (1, t)
    if (try_exceptional(t, FShape::ExceptionalCol)) return out;
  }
  out.shape = FShape::General;
  return out;
}

namespace {

// gamma in Gamma = Gamma_0(N) ∩ Gamma(2) with gamma(1/delta) = x/y, for odd
// x, y with gcd(y, N) = delta
Mat22 gamma_to_base(long N, const Int& x, const Int& y, long delta) {
  if (x % 2 == 0 || y % 2 == 0) throw std::logic_error("gamma_to_base: endpoint not odd/odd");
  if (x == 1 && y == delta) return Mat22::identity();
  // gamma = (p, q; r, s), p = x - q delta, r = y - s delta, x s - q y = 1
  auto e = xgcd(x, y);  // x e.x + y e.y = 1
  Int s0 = e.x, q0 = -e.y;
  long n1 = N / delta;
  Int y1 = y / delta;
  // r = 0 mod N  <=>  s = y/delta mod N/delta ; s parity fixes Gamma(2)
  Int u = 0;
  if (n1 > 1) u = (mod_inverse(y % n1, n1) * (((y1 - s0) % n1 + n1) % n1)) % n1;
  if ((s0 + y * u) % 2 == 0) u += n1;  // n1 odd, flips parity
  Int s = s0 + y * u;
  Int q = q0 + x * u;
  Mat22 out{x - q * delta, q, y - s * delta, s};
  if (!in_gamma(out, N) || apply(out, CuspPoint::make(1, delta)) != CuspPoint::make(x, y))
    throw std::logic_error("gamma_to_base: construction failed");
  return out;
}

long orbit_of(long N, const CuspPoint& x) {
  Int d, nn(N);
  mpz_gcd(d.get_mpz_t(), x.den.get_mpz_t(), nn.get_mpz_t());
  return d.get_si();
}

// Exact evaluation of F_m over all classes.
//
// For gamma in Gamma = Gamma_0(N) ∩ Gamma(2) the differential
// [2 E_m(z) - (1/2) E_m((z+1)/2)] dz integrates to 12 P_m(gamma) along
// z -> gamma z, with the value independent of the basepoint, including the
// cusps with odd numerator and denominator (the form is holomorphic there).
// Writing pot(x) for the integral from a base cusp 1/delta of the same
// Gamma-orbit (delta = gcd(denominator, N)), every F value becomes
//   F_m(g) = pot(g~(-1)) - pot(g~(1)) + C(delta_beta) - C(delta_alpha)
// with per-orbit constants C fixed by the known cases: F = 0 on (±1, 1),
// the gamma-pair values on solvable exceptional shapes, and the reflection
// symmetry F(class(c, d)) = F(class(c, -d)) coming from the real Fourier
// coefficients.
class FEngine {
 public:
  FEngine(long N, long m, int variant) : N_(N), m_(m), variant_(variant) {
    gens_ = p1_list(N);
    for (const auto& g : gens_) data_.emplace(g, make_data(g));
    solve_constants();
  }

  Rat value(const P1Class& g) const {
    const ClassData& cd = data_.at(g);
    return cd.raw + constant(cd.delta_beta) - constant(cd.delta_alpha);
  }

  const std::vector<P1Class>& generators() const { return gens_; }

 private:
  struct ClassData {
    CuspPoint alpha, beta;
    long delta_alpha = 1, delta_beta = 1;
    Mat22 gamma_alpha, gamma_beta;  // base cusp 1/delta -> endpoint
    Rat raw;                        // phi(gamma_beta) - phi(gamma_alpha)
  };

  // integral of the twisted differential along z -> gamma z: 12 P_m(gamma)
  Rat phi(const Mat22& gamma) const {
    return 2 * period(N_, m_, gamma) - period(N_, m_, h_conjugate(gamma));
  }

  ClassData make_data(const P1Class& g) const {
    Mat22 rep = gamma2_rep(N_, g);
    ClassData cd;
    cd.alpha = CuspPoint::make(rep.a + rep.b, rep.c + rep.d);
    cd.beta = CuspPoint::make(rep.b - rep.a, rep.d - rep.c);
    cd.delta_alpha = orbit_of(N_, cd.alpha);
    cd.delta_beta = orbit_of(N_, cd.beta);
    cd.gamma_alpha = gamma_to_base(N_, cd.alpha.num, cd.alpha.den, cd.delta_alpha);
    cd.gamma_beta = gamma_to_base(N_, cd.beta.num, cd.beta.den, cd.delta_beta);
    cd.raw = phi(cd.gamma_beta) - phi(cd.gamma_alpha);
    return cd;
  }

  P1Class mirror(const P1Class& g) const { return p1_normalize(N_, g.c, ((N_ - g.d) % N_)); }

  Rat exceptional_value(const FClassification& cls) const {
    auto [g1, g2] = build_gammas(N_, cls.x, cls.k, variant_);
    Rat diff = 6 * (p_m(N_, m_, g1) - p_m(N_, m_, g2));
    return cls.shape == FShape::ExceptionalRow ? diff : -diff;
  }

  // weighted union-find over the divisors of N: C(delta) = offset + C(root)
  long find(long d, Rat& off) {
    off = 0;
    while (parent_.at(d) != d) {
      off += offset_.at(d);
      d = parent_.at(d);
    }
    return d;
  }

  void merge(long d1, long d2, const Rat& diff) {  // C(d2) - C(d1) = diff
    Rat o1, o2;
    long r1 = find(d1, o1), r2 = find(d2, o2);
    if (r1 == r2) {
      if (o2 - o1 != diff)
        throw std::logic_error("f_values: inconsistent orbit constants (internal check failed)");
      return;
    }
    // attach r2 under r1: C(d2) = C(r2) + o2, want C(d2) = C(d1) + diff
    parent_[r2] = r1;
    offset_[r2] = o1 + diff - o2;
  }

  void solve_constants() {
    for (long d : divisors(N_)) {
      parent_[d] = d;
      offset_[d] = 0;
    }
    for (const auto& g : gens_) {
      const ClassData& cd = data_.at(g);
      FClassification cls = classify_class(N_, g);
      if (cls.shape == FShape::Trivial) {
        merge(cd.delta_alpha, cd.delta_beta, -cd.raw);
      } else if (cls.shape == FShape::ExceptionalRow || cls.shape == FShape::ExceptionalCol) {
        merge(cd.delta_alpha, cd.delta_beta, exceptional_value(cls) - cd.raw);
      }
      P1Class mg = mirror(g);
      if (mg != g && g < mg) {
        const ClassData& md = data_.at(mg);
        if (md.delta_alpha != cd.delta_beta || md.delta_beta != cd.delta_alpha)
          throw std::logic_error("f_values: mirror orbit bookkeeping failed");
        merge(cd.delta_alpha, cd.delta_beta, (md.raw - cd.raw) / 2);
      }
    }
    Rat o1;
    long root1 = find(1, o1);
    for (long d : divisors(N_)) {
      Rat od;
      if (find(d, od) != root1)
        throw std::logic_error("f_values: cusp orbit constants underdetermined");
      constants_[d] = od - o1;  // C(1) = 0
    }
  }

  Rat constant(long d) const { return constants_.at(d); }

  long N_, m_;
  int variant_;
  std::vector<P1Class> gens_;
  std::map<P1Class, ClassData> data_;
  std::map<long, long> parent_;
  std::map<long, Rat> offset_;
  std::map<long, Rat> constants_;
};

}  // namespace

FValues f_values(long N, long m, int bezout_variant) {
  require_level(N);
  if (m <= 1 || N % m != 0) throw std::invalid_argument("f_values: need m | N, m > 1");
  FEngine engine(N, m, bezout_variant);

  FValues out;
  out.N = N;
  out.m = m;
  for (const auto& g : engine.generators()) out.values.emplace(g, engine.value(g));

  // the closed-form case values are exact post-conditions wherever they apply
  for (const auto& [g, F] : out.values) {
    if (!is_integral(F)) throw std::logic_error("f_values: non-integral value");
    FClassification cls = classify_class(N, g);
    if (cls.shape == FShape::Trivial && F != 0)
      throw std::logic_error("f_values: F(±1,1) must vanish");
    if (cls.shape == FShape::RPlusMinus) {
      // r is class data mod N; the S(r, 2m) term needs the odd lift mod 2N
      long r = (cls.r % 2 != 0) ? cls.r : cls.r + N;
      Rat closed = 12 * (dedekind_sum_general(r, m) - 2 * dedekind_sum_general(r, 2 * m));
      if (F != closed) throw std::logic_error("f_values: Dedekind closed form mismatch");
    }
    P1Class mg = p1_normalize(N, g.c, (N - g.d) % N);
    if (out.values.at(mg) != F)
      throw std::logic_error("f_values: reflection symmetry violated");
  }
  return out;
}

Mat22 class_path_gamma(long N, const P1Class& g) {
  require_level(N);
  Mat22 rep = gamma2_rep(N, p1_normalize(N, g.c, g.d));
  CuspPoint alpha = CuspPoint::make(rep.a + rep.b, rep.c + rep.d);
  CuspPoint beta = CuspPoint::make(rep.b - rep.a, rep.d - rep.c);
  long da = orbit_of(N, alpha), db = orbit_of(N, beta);
  if (da != db)
    throw std::invalid_argument("class_path_gamma: endpoints in different cusp orbits");
  Mat22 ga = gamma_to_base(N, alpha.num, alpha.den, da);
  Mat22 gb = gamma_to_base(N, beta.num, beta.den, db);
  Mat22 out = gb * ga.inv();
  if (!in_gamma(out, N) || apply(out, alpha) != beta)
    throw std::logic_error("class_path_gamma: construction failed");
  return out;
}

FormalChain eisenstein_element(long N, long m) {
  FValues fv = f_values(N, m);
  FormalChain chain;
  for (const auto& [g, F] : fv.values) {
    Rat c = F / 6;
    if (!is_integral(c))
      throw std::logic_error("eisenstein_element: coefficient F/6 not integral");
    chain.add(g, c);
  }
  return chain;
}

WindingElement winding_element(long N) {
  require_level(N);
  FValues fv = f_values(N, N);
  WindingElement out;
  out.N = N;
  Int h = std::gcd(N - 1, 12l);
  out.n = Int(N - 1) / h;
  Rat scale = rat(1, Int(1) - N);
  for (long v = 1; v < N; ++v) {
    if (std::gcd(v, N) != 1) continue;
    Rat F = fv.values.at(p1_normalize(N, 1, v));
    out.coeffs[v] = F * scale;
    out.chain += modular_symbol(N, CuspPoint{0, 1}, CuspPoint::make(1, v)) * out.coeffs[v];
  }
  return out;
}

}  // namespace eisw
