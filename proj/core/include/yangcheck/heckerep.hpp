#pragma once

#include <string>
#include <vector>

#include "yangcheck/permops.hpp"
#include "yangcheck/polynomial.hpp"

namespace yc {

// Weakly decreasing non-negative parts; trailing zeros allowed.
struct Partition {
  std::vector<int> parts;

  int size() const;                       // sum of parts
  std::vector<int> padded(int k) const;   // throws when longer than k
  bool valid() const;
  std::string to_string() const;          // "2,1,0"
  static Partition parse(const std::string& text);  // comma separated
};

// Adjacent transposition indices 1..k-1, applied right to left.
struct SymGroupWord {
  std::vector<int> letters;
};

Polynomial vandermonde(int k, Family family = Family::Y);
// Exact division by prod_{i<j}(Y_i - Y_j); throws when inexact.
Polynomial divide_by_vandermonde(const Polynomial& p, int k, Family family = Family::Y);
// prod_{i<j} (Y_i - Y_j + c).
Polynomial shifted_vandermonde(int k, const Polynomial& c, Family family = Family::Y);

// sigma_i^kappa f = P f + kappa (f - P f) / (Y_i - Y_{i+1}).
Polynomial apply_sigma(int i, const Polynomial& kappa, const Polynomial& f);
// Applies the letters right to left (last letter first).
Polynomial apply_word(const SymGroupWord& w, const Polynomial& kappa, const Polynomial& f);
// sigma^kappa(f) for every permutation sigma of S_k, in all_perms(k) order,
// built by one apply_sigma per permutation.
std::vector<Polynomial> orbit_images(int k, const Polynomial& kappa, const Polynomial& f);
// (1/k!) sum_sigma (+-1)^sigma sigma^kappa f through the word action.
Polynomial symmetrizer_by_words(int k, const Polynomial& kappa, Sign sign, const Polynomial& f);

// Alt_k(f) / prod_{i<j}(Y_i - Y_j), expanded in Schur polynomials.
Polynomial antisymmetrize_over_vandermonde(int k, const Polynomial& f);
// e_k^kappa f (plus) or (e_k^-)^kappa f (minus), closed forms.
Polynomial apply_symmetrizer(int k, const Polynomial& kappa, Sign sign, const Polynomial& f);

// Bialternant a_{lambda+delta} / a_delta in Y_1..Y_k; cached, thread safe.
Polynomial schur(const Partition& lambda, int k);

// psi^psi_power * poly.
struct PsiScaled {
  int psi_power = 0;
  Polynomial poly;
  std::string to_string() const;
};
// psi^{-|lambda|} e_k^hbar(Y^lambda).
PsiScaled hall_littlewood_rational(const Partition& lambda, int k, const Polynomial& hbar = Var::hbar());

// sum_i Y_i^a prod_{j != i} (Y_i - Y_j + hbar) / (Y_i - Y_j).
Polynomial deformed_power_sum(int a, int k, const Polynomial& hbar = Var::hbar());

Polynomial elementary_symmetric(int j, int k, Family family = Family::Y);
// Rewrites a symmetric polynomial in Y_1..Y_k as a polynomial in the
// elementary symmetric polynomials, which are represented by the
// placeholder variables z_1..z_k.  Other variables are treated as scalars.
// Throws when f is not symmetric.
Polynomial symmetric_to_elementary(const Polynomial& f, int k);

// Linear part at the origin of (p^0_1..p^0_k, hbar) -> (p^hbar_1..p^hbar_k,
// hbar), as a (k+1)x(k+1) matrix: row a holds the coefficients of
// p^hbar_a on p^0_1..p^0_k and hbar; the last row is hbar itself.
std::vector<std::vector<mpq_class>> deformed_power_sum_differential(int k);

bool is_symmetric(const Polynomial& f, int k, Family family = Family::Y);

}  // namespace yc
