#include "eisw/homology.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace eisw {

void FormalChain::add(const P1Class& g, const Rat& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    terms_.emplace(g, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat FormalChain::coeff(const P1Class& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Rat(0) : it->second;
}

FormalChain& FormalChain::operator+=(const FormalChain& o) {
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

FormalChain& FormalChain::operator-=(const FormalChain& o) {
  for (const auto& [g, c] : o.terms_) add(g, -c);
  return *this;
}

FormalChain FormalChain::operator*(const Rat& s) const {
  FormalChain out;
  if (s == 0) return out;
  for (const auto& [g, c] : terms_) out.terms_.emplace(g, c * s);
  return out;
}

FormalChain FormalChain::operator+(const FormalChain& o) const {
  FormalChain out = *this;
  out += o;
  return out;
}

FormalChain FormalChain::operator-(const FormalChain& o) const {
  FormalChain out = *this;
  out -= o;
  return out;
}

CuspPoint CuspPoint::make(const Int& num, const Int& den) {
  if (num == 0 && den == 0) throw std::invalid_argument("CuspPoint: 0/0");
  Int g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Int n = num / g, d = den / g;
  if (d < 0 || (d == 0 && n < 0)) {
    n = -n;
    d = -d;
  }
  return {n, d};
}

CuspPoint apply(const Mat22& g, const CuspPoint& x) {
  return CuspPoint::make(g.a * x.num + g.b * x.den, g.c * x.num + g.d * x.den);
}

namespace {

const std::vector<P1Class>& p1_list_cached(long N) {
  static std::mutex mu;
  static std::map<long, std::vector<P1Class>> cache;
  std::scoped_lock lk(mu);
  auto it = cache.find(N);
  if (it == cache.end()) it = cache.emplace(N, p1_list(N)).first;
  return it->second;
}

const std::map<P1Class, Mat22>& omega_cached(long N) {
  static std::mutex mu;
  static std::map<long, std::map<P1Class, Mat22>> cache;
  std::scoped_lock lk(mu);
  auto it = cache.find(N);
  if (it == cache.end()) it = cache.emplace(N, omega_reps(N)).first;
  return it->second;
}

}  // namespace

HomologyPresentation::HomologyPresentation(long N) : N_(N) {
  require_level(N);
  gens_ = p1_list_cached(N);
  const int n = static_cast<int>(gens_.size());
  for (int i = 0; i < n; ++i) index_[gens_[i]] = i;

  std::vector<std::vector<Rat>> rows;
  const Mat22 R2 = kR * kR;
  for (const auto& g : gens_) {
    std::vector<Rat> s_row(n, Rat(0));
    s_row[index_.at(g)] += 1;
    s_row[index_.at(p1_right_action(N, g, kS))] += 1;
    rows.push_back(std::move(s_row));

    std::vector<Rat> r_row(n, Rat(0));
    r_row[index_.at(g)] += 1;
    r_row[index_.at(p1_right_action(N, g, kR))] += 1;
    r_row[index_.at(p1_right_action(N, g, R2))] += 1;
    rows.push_back(std::move(r_row));
  }

  // forward elimination to row echelon form
  for (auto& row : rows) {
    for (;;) {
      int piv = -1;
      for (int j = 0; j < n; ++j)
        if (row[j] != 0) {
          piv = j;
          break;
        }
      if (piv < 0) break;
      auto it = std::find_if(rref_rows_.begin(), rref_rows_.end(),
                             [&](const auto& pr) { return pr.first == piv; });
      if (it == rref_rows_.end()) {
        Rat lead = row[piv];
        for (auto& x : row) x /= lead;
        rref_rows_.emplace_back(piv, row);
        break;
      }
      Rat f = row[piv];
      for (int j = 0; j < n; ++j) row[j] -= f * it->second[j];
    }
  }
  std::sort(rref_rows_.begin(), rref_rows_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  // back substitution: clear pivot columns in the other rows
  for (int i = static_cast<int>(rref_rows_.size()) - 1; i >= 0; --i) {
    int piv = rref_rows_[i].first;
    for (int k = 0; k < i; ++k) {
      Rat f = rref_rows_[k].second[piv];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) rref_rows_[k].second[j] -= f * rref_rows_[i].second[j];
    }
  }
  rank_ = n - static_cast<long>(rref_rows_.size());
}

std::vector<Rat> HomologyPresentation::reduce(const FormalChain& chain) const {
  const int n = static_cast<int>(gens_.size());
  std::vector<Rat> v(n, Rat(0));
  for (const auto& [g, c] : chain.terms()) {
    auto it = index_.find(g);
    if (it == index_.end()) throw std::invalid_argument("reduce: unknown generator");
    v[it->second] += c;
  }
  for (const auto& [piv, row] : rref_rows_) {
    Rat f = v[piv];
    if (f == 0) continue;
    for (int j = 0; j < n; ++j) v[j] -= f * row[j];
  }
  std::vector<Rat> coords;
  std::vector<bool> is_pivot(n, false);
  for (const auto& [piv, row] : rref_rows_) is_pivot[piv] = true;
  for (int j = 0; j < n; ++j)
    if (!is_pivot[j]) coords.push_back(v[j]);
  return coords;
}

bool HomologyPresentation::reduces_to_zero(const FormalChain& chain) const {
  for (const auto& c : reduce(chain))
    if (c != 0) return false;
  return true;
}

void HomologyPresentation::build_hnf() const {
  // A class is integral when it lies in the Z-span of the images of the
  // standard generators in the quotient; work in the reduced coordinates.
  const int k = static_cast<int>(rank_);
  std::vector<std::vector<Rat>> cols;
  for (const auto& g : gens_) {
    FormalChain e;
    e.add(g, Rat(1));
    cols.push_back(reduce(e));
  }
  // clear denominators with a global scale, then integer HNF
  Int d = 1;
  for (const auto& col : cols)
    for (const auto& x : col) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  hnf_scale_ = d;
  std::vector<std::vector<Int>> icols;
  for (const auto& col : cols) {
    std::vector<Int> ic(k);
    for (int i = 0; i < k; ++i) {
      Rat scaled = col[i] * Rat(d);
      ic[i] = scaled.get_num();
    }
    icols.push_back(std::move(ic));
  }
  std::vector<std::vector<Int>> basis;
  size_t start = 0;
  for (int i = 0; i < k; ++i) {
    for (size_t j = start; j < icols.size(); ++j) {
      if (icols[j][i] == 0) continue;
      if (icols[start][i] == 0 || j == start) {
        if (j != start) std::swap(icols[start], icols[j]);
        continue;
      }
      auto e = xgcd(icols[start][i], icols[j][i]);
      Int p = icols[start][i] / e.g, q = icols[j][i] / e.g;
      for (int r = i; r < k; ++r) {
        Int u = icols[start][r], v = icols[j][r];
        icols[start][r] = e.x * u + e.y * v;
        icols[j][r] = -q * u + p * v;
      }
    }
    if (icols[start][i] == 0) throw std::logic_error("hnf: rank deficiency");
    if (icols[start][i] < 0)
      for (int r = i; r < k; ++r) icols[start][r] = -icols[start][r];
    basis.push_back(icols[start]);
    ++start;
  }
  hnf_ = std::move(basis);
}

bool HomologyPresentation::is_integral(const FormalChain& chain) const {
  std::call_once(hnf_once_, [this] { build_hnf(); });
  const int k = static_cast<int>(rank_);
  std::vector<Rat> v = reduce(chain);
  for (auto& x : v) x *= Rat(hnf_scale_);
  for (int i = 0; i < k; ++i) {
    Rat w = v[i] / Rat(hnf_[i][i]);
    if (w.get_den() != 1) return false;
    if (w == 0) continue;
    for (int r = i; r < k; ++r) v[r] -= w * Rat(hnf_[i][r]);
  }
  return true;
}

const HomologyPresentation& presentation_cached(long N) {
  static std::mutex mu;
  static std::map<long, std::unique_ptr<HomologyPresentation>> cache;
  std::scoped_lock lk(mu);
  auto it = cache.find(N);
  if (it == cache.end())
    it = cache.emplace(N, std::make_unique<HomologyPresentation>(N)).first;
  return *it->second;
}

long genus_x0(long N) {
  require_level(N);
  long mu = 1;
  long nu2 = 1, nu3 = 1, cusps = 1;
  for (long p : prime_factors(N)) {
    mu *= p + 1;
    cusps *= 2;
    // Legendre symbols (-1/p), (-3/p)
    if (p == 2) throw std::logic_error("genus_x0: even level");
    nu2 *= (p % 4 == 1) ? 2 : 0;
    if (p == 3)
      nu3 *= 1;
    else
      nu3 *= (p % 3 == 1) ? 2 : 0;
  }
  long num = 12 + mu - 3 * nu2 - 4 * nu3 - 6 * cusps;
  if (num % 12 != 0) throw std::logic_error("genus_x0: formula not integral");
  return num / 12;
}

CuspDivisor boundary(long N, const FormalChain& chain) {
  const auto& omega = omega_cached(N);
  CuspDivisor out;
  auto touch = [&](const CuspPoint& x, const Rat& c) {
    CuspClass y = cusp_classify(N, x.num, x.den);
    out[y.key] += c;
  };
  for (const auto& [g, c] : chain.terms()) {
    const Mat22& rep = omega.at(g);
    touch(apply(rep, CuspPoint{0, 1}), c);                // [g.0]
    touch(apply(rep, CuspPoint::infinity()), -c);         // -[g.oo]
  }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

namespace {

// chain of the path from infinity to p/q (empty when the target is infinity)
FormalChain path_from_infinity(long N, const CuspPoint& x) {
  FormalChain out;
  if (x.is_infinity()) return out;
  Int num = x.num, den = x.den;
  // continued fraction convergents; p_{-1}/q_{-1} = 1/0
  Int p_prev = 1, q_prev = 0;
  Int p_cur, q_cur;
  bool first = true;
  int k = 0;
  while (den != 0) {
    Int a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Int rem = num - a * den;
    Int p_next = first ? a : a * p_cur + p_prev;
    Int q_next = first ? Int(1) : a * q_cur + q_prev;
    if (!first) {
      p_prev = p_cur;
      q_prev = q_cur;
    }
    p_cur = p_next;
    q_cur = q_next;
    // segment r_{k-1} -> r_k is the Manin symbol of (p_{k-1}, ±p_k; q_{k-1}, ±q_k)
    Int sign = (k % 2 == 0) ? 1 : -1;
    out.add(p1_normalize(N, q_prev, sign * q_cur), Rat(1));
    num = den;
    den = rem;
    first = false;
    ++k;
  }
  return out;
}

}  // namespace

FormalChain modular_symbol(long N, const CuspPoint& a, const CuspPoint& b) {
  require_level(N);
  if (a == b) return {};
  return path_from_infinity(N, b) - path_from_infinity(N, a);
}

FormalChain hecke(long N, long ell, const FormalChain& chain) {
  require_level(N);
  if (ell < 2 || N % ell == 0) throw std::invalid_argument("hecke: ell must be a prime not dividing N");
  for (long p = 2; p * p <= ell; ++p)
    if (ell % p == 0) throw std::invalid_argument("hecke: ell must be prime");
  // left coset representatives of Gamma_0(N) \ Gamma_0(N) diag(1, ell) Gamma_0(N);
  // the transposed family is not a coset system and does not act on classes
  std::vector<Mat22> mats;
  for (long j = 0; j < ell; ++j) mats.push_back(Mat22{1, j, 0, ell});
  mats.push_back(Mat22{ell, 0, 0, 1});

  const auto& omega = omega_cached(N);
  FormalChain out;
  for (const auto& [g, c] : chain.terms()) {
    const Mat22& rep = omega.at(g);
    CuspPoint start = apply(rep, CuspPoint::infinity());
    CuspPoint end = apply(rep, CuspPoint{0, 1});
    for (const auto& M : mats) {
      out += modular_symbol(N, apply(M, start), apply(M, end)) * c;
    }
  }
  return out;
}

bool VerifyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.pass; });
}

}  // namespace eisw
