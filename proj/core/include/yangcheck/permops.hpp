#pragma once

#include <map>
#include <string>
#include <vector>

#include "yangcheck/rational_function.hpp"

namespace yc {

// Permutation of {0..k-1} in one-line notation: p[i] is the image of i.
using Perm = std::vector<int>;

Perm perm_identity(int k);
// Composition as functions: (a*b)(i) = a(b(i)).
Perm perm_mul(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& p);
// Swap of positions i and j (1-based).
Perm perm_transposition(int k, int i, int j);
int perm_sign(const Perm& p);
// All permutations of {0..k-1} in lexicographic order.
std::vector<Perm> all_perms(int k);
// Reduced word for p as adjacent-transposition indices (1-based), such that
// p = s_{w[0]} s_{w[1]} ... .
std::vector<int> reduced_word(const Perm& p);

// (p f)(x_1..x_k) = f(x_{p(1)}..x_{p(k)}) on the variables of `family`.
RationalFunction perm_act(const Perm& p, const RationalFunction& f, Family family = Family::z);
Polynomial perm_act(const Perm& p, const Polynomial& f, Family family = Family::z);

// Element of C[S_k] semidirect rational functions of z_1..z_k:
// sum of c_p * p, with p * c = p(c) * p.
//
// Worked example at k = 2 with P = [1,0]:  P * (z1 id) = z2 P, and for any
// f, (c P)(f) = c * f(z2, z1).
class PermAlgebraElement {
 public:
  explicit PermAlgebraElement(int k = 1) : k_(k) {}
  static PermAlgebraElement identity(int k) { return term(k, perm_identity(k), 1L); }
  static PermAlgebraElement term(int k, const Perm& p, const RationalFunction& c);

  int rank() const { return k_; }
  const std::map<Perm, RationalFunction>& terms() const { return terms_; }
  RationalFunction coefficient(const Perm& p) const;
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Perm& p, const RationalFunction& c);
  PermAlgebraElement scaled(const RationalFunction& c) const;  // c * x

  friend PermAlgebraElement operator+(const PermAlgebraElement& a, const PermAlgebraElement& b);
  friend PermAlgebraElement operator-(const PermAlgebraElement& a, const PermAlgebraElement& b);
  friend PermAlgebraElement operator*(const PermAlgebraElement& a, const PermAlgebraElement& b);
  friend bool operator==(const PermAlgebraElement& a, const PermAlgebraElement& b);
  friend bool operator!=(const PermAlgebraElement& a, const PermAlgebraElement& b) { return !(a == b); }

  // Action on functions of z_1..z_k.
  RationalFunction apply(const RationalFunction& f) const;

  // Terms by permutation in lexicographic one-line order, 1-based:
  // "(c1)*[1,2] + (c2)*[2,1]".
  std::string to_string() const;

 private:
  int k_;
  std::map<Perm, RationalFunction> terms_;
};

PermAlgebraElement perm_compose(const PermAlgebraElement& a, const PermAlgebraElement& b);

// G(z, w) = (z + w) / (z w).
RationalFunction g_factor(const RationalFunction& z, const RationalFunction& w);

// R_ij(xi|kappa) = G(z_i - z_j, kappa) id - G(z_i - z_j, xi) P_ij.
PermAlgebraElement su_r(int i, int j, const RationalFunction& xi, const RationalFunction& kappa, int k);
// P_{i,i+1} R_{i,i+1}(xi|kappa).
PermAlgebraElement su_rcheck(int i, const RationalFunction& xi, const RationalFunction& kappa, int k);

enum class Sign { plus, minus };

// Ordered product of braiding elements: the kappa-symmetrizer for plus, the
// kappa-antisymmetrizer for minus.
PermAlgebraElement su_symmetrizer(int k, const RationalFunction& kappa, Sign sign);
// Sym_k * prod_{i<j} G(z_i - z_j, kappa)  (plus), or
// prod_{i<j} G(z_i - z_j, -kappa) * Sym_k^-  (minus).
PermAlgebraElement su_symmetrizer_closed(int k, const RationalFunction& kappa, Sign sign);

// sigma_i + 1/xi in C[S_k].
PermAlgebraElement hecke_rcheck(int i, const RationalFunction& xi, int k);
// Demazure-type sigma_i^kappa = P + kappa (1 - P) / (z_i - z_{i+1}) as an element.
PermAlgebraElement hecke_sigma_element(int i, const RationalFunction& kappa, int k);
// Ordered products of hecke_rcheck with integer spectral values.
PermAlgebraElement hecke_idempotent_via_r(int k, Sign sign);
// (1/k!) sum sigma, resp. with signs.
PermAlgebraElement group_idempotent(int k, Sign sign);

}  // namespace yc
