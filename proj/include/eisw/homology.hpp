#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "eisw/cusps.hpp"
#include "eisw/p1.hpp"
#include "eisw/rational.hpp"

namespace eisw {

// Finitely supported formal sum of Manin symbols; zero coefficients are never
// stored.  The symbol [g] is the class of the geodesic rep(g).oo -> rep(g).0,
// so its boundary is [g.0] - [g.oo].
class FormalChain {
 public:
  FormalChain() = default;

  void add(const P1Class& g, const Rat& coeff);
  const std::map<P1Class, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rat coeff(const P1Class& g) const;

  FormalChain& operator+=(const FormalChain& o);
  FormalChain& operator-=(const FormalChain& o);
  FormalChain operator*(const Rat& s) const;
  FormalChain operator+(const FormalChain& o) const;
  FormalChain operator-(const FormalChain& o) const;
  bool operator==(const FormalChain&) const = default;

 private:
  std::map<P1Class, Rat> terms_;
};

// Point of P^1(Q): num/den with gcd = 1, den >= 0, infinity = 1/0.
struct CuspPoint {
  Int num, den;
  static CuspPoint infinity() { return {1, 0}; }
  static CuspPoint make(const Int& num, const Int& den);
  bool is_infinity() const { return den == 0; }
  bool operator==(const CuspPoint&) const = default;
};

CuspPoint apply(const Mat22& g, const CuspPoint& x);

// Quotient of the free module on P^1(Z/NZ) by the Manin relations
// [g] + [gS] = 0 and [g] + [gR] + [gR^2] = 0, with exact reduction to
// canonical coordinates over Q and an integer lattice test.
class HomologyPresentation {
 public:
  explicit HomologyPresentation(long N);

  long level() const { return N_; }
  const std::vector<P1Class>& generators() const { return gens_; }
  long rank() const { return rank_; }

  // Canonical coordinates of the class of the chain in the quotient.
  std::vector<Rat> reduce(const FormalChain& chain) const;
  bool reduces_to_zero(const FormalChain& chain) const;

  // Whether the chain lies in the image of Z^{P^1} + relation lattice,
  // i.e. has an integral representative modulo the integral relations.
  bool is_integral(const FormalChain& chain) const;

 private:
  long N_ = 0;
  std::vector<P1Class> gens_;
  std::map<P1Class, int> index_;
  long rank_ = 0;
  // row-reduced relation matrix: pivot column -> dense row
  std::vector<std::pair<int, std::vector<Rat>>> rref_rows_;
  // generator-image lattice in reduced coordinates, built on demand
  mutable std::once_flag hnf_once_;
  mutable std::vector<std::vector<Int>> hnf_;
  mutable Int hnf_scale_ = 1;
  void build_hnf() const;
};

// Shared immutable presentation per level; safe for concurrent readers.
const HomologyPresentation& presentation_cached(long N);

// Genus of X_0(N) by the index/elliptic-point/cusp formula.
long genus_x0(long N);

CuspDivisor boundary(long N, const FormalChain& chain);

// Chain representing the geodesic from a to b; boundary = [b] - [a].
FormalChain modular_symbol(long N, const CuspPoint& a, const CuspPoint& b);

// Hecke operator T_ell, ell prime not dividing N, via the ell + 1 degeneracy
// matrices (ell, j; 0, 1) and (1, 0; 0, ell) acting on endpoints.
FormalChain hecke(long N, long ell, const FormalChain& chain);

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  long N = 0, m = 0;
  std::vector<VerifyCheck> checks;
  bool all_pass() const;
};

// Machine checks for the Eisenstein element of E_m: boundary identity,
// Hecke eigenvalues, coefficient integrality, Bezout-choice invariance.
VerifyReport verify_eisenstein(long N, long m);

// Boundary orientation constant: boundary(eisenstein_element) equals
// kBoundarySign * (-eisenstein_divisor) for every (N, m).
inline constexpr int kBoundarySign = -1;

}  // namespace eisw
