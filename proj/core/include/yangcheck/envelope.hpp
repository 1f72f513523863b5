#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "yangcheck/polynomial.hpp"
#include "yangcheck/upoly.hpp"

namespace yc {

inline constexpr int kDefaultMaxRank = 4;
void check_rank(int N, int max_rank = kDefaultMaxRank);

struct Generator {
  int i = 1, j = 1;
};

// Generators are numbered in PBW order: E_ij with i > j, then E_ii, then
// E_ij with i < j, each block lexicographic in (i, j).
int pbw_id(int N, int i, int j);
Generator pbw_generator(int N, int id);

// Longer monomials first, then lexicographic in generator ids.
struct WordLess {
  bool operator()(const std::string& a, const std::string& b) const {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  }
};

// Element of U(gl_N) over Q[hbar] in PBW normal form.  A monomial is a
// nondecreasing string of generator ids.  The default-constructed element is
// a rank-free zero.
class PBWElement {
 public:
  using Word = std::string;
  using Terms = std::map<Word, Polynomial, WordLess>;

  PBWElement() = default;
  explicit PBWElement(int N) : N_(N) {}
  static PBWElement scalar(int N, const Polynomial& c);
  static PBWElement one(int N) { return scalar(N, Polynomial(1L)); }
  static PBWElement generator(int N, int i, int j);
  // Normal form of c * g_1 g_2 ... g_m.
  static PBWElement from_word(int N, const std::vector<Generator>& word, const Polynomial& c = Polynomial(1L));

  int rank() const { return N_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Polynomial coefficient(const std::vector<Generator>& sorted_word) const;

  friend PBWElement operator+(const PBWElement& a, const PBWElement& b);
  friend PBWElement operator-(const PBWElement& a, const PBWElement& b);
  friend PBWElement operator*(const PBWElement& a, const PBWElement& b);
  friend PBWElement operator*(const Polynomial& c, const PBWElement& x);
  PBWElement operator-() const { return Polynomial(-1L) * *this; }
  PBWElement times_generator(int id) const;

  friend bool operator==(const PBWElement& a, const PBWElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const PBWElement& a, const PBWElement& b) { return !(a == b); }

  // e.g. "E21*E12 + hbar*E11 - hbar*E22".
  std::string to_string() const;

  // Internal: adds c * word, word already sorted.
  void add(const Word& word, const Polynomial& c);

 private:
  int N_ = 0;
  Terms terms_;
};

PBWElement commutator(const PBWElement& a, const PBWElement& b);

// Parses expressions in generators Eij (1 <= i, j <= N, products in written
// order) and central variables; division only by rational constants.
PBWElement parse_pbw(std::string_view text, int N);

enum class Transpose {
  anti,   // E_ij -> E_ji, reverses products
  minus,  // E_ij -> -E_ji, preserves products
};
PBWElement transpose_auto(const PBWElement& x, Transpose kind);

// Keeps monomials made of diagonal generators only and substitutes
// E_ii = w_i - (N - i) hbar.
Polynomial hc_projection(const PBWElement& x);
// Same, coefficientwise, returning a polynomial in u.
Polynomial hc_projection(const UPoly<PBWElement>& x);

EntryFn<PBWElement> envelope_entries(int N);

UPoly<PBWElement> quantum_minor(int N, const std::vector<int>& rows, const std::vector<int>& cols);
UPoly<PBWElement> quantum_minor_column_form(int N, const std::vector<int>& rows, const std::vector<int>& cols);
UPoly<PBWElement> quantum_determinant(int N);
UMatrix<PBWElement> quantum_comatrix(int N);
// Entries of comatrix(u + N hbar - hbar) * T(u) - (-1)^N A(-u) Id.
UMatrix<PBWElement> comatrix_identity_residual(int N);

// Sum_i x_I (x) e_I in U (x) V^{(x)k}, V = C^N or its dual.  Coefficients sit
// to the left of the tensor factors.
class FreeModuleElement {
 public:
  using Index = std::vector<int>;

  FreeModuleElement() = default;
  FreeModuleElement(int N, int k, bool dual) : N_(N), k_(k), dual_(dual) {}
  static FreeModuleElement basis(int N, bool dual, const Index& index, const PBWElement& coeff);
  static FreeModuleElement basis(int N, bool dual, const Index& index) {
    return basis(N, dual, index, PBWElement::one(N));
  }

  int rank() const { return N_; }
  int tensor_length() const { return k_; }
  bool dual() const { return dual_; }
  const std::map<Index, PBWElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  PBWElement coefficient(const Index& index) const;

  void add(const Index& index, const PBWElement& coeff);
  friend FreeModuleElement operator+(const FreeModuleElement& a, const FreeModuleElement& b);
  friend FreeModuleElement operator-(const FreeModuleElement& a, const FreeModuleElement& b);
  FreeModuleElement scaled(const Polynomial& c) const;
  // x * this.
  FreeModuleElement left_mul(const PBWElement& x) const;

  friend bool operator==(const FreeModuleElement& a, const FreeModuleElement& b);
  friend bool operator!=(const FreeModuleElement& a, const FreeModuleElement& b) { return !(a == b); }

  // e.g. "(E11 + hbar)*phi1", "E12*v1|v2".
  std::string to_string() const;

 private:
  int N_ = 0, k_ = 0;
  bool dual_ = false;
  std::map<Index, PBWElement> terms_;
};

// E_ij acting on the tensor factors (derivation, vector or dual action).
FreeModuleElement generator_action(const FreeModuleElement& x, Generator g);
// (x (x) w) . xi = x xi (x) w - hbar x (x) (xi . w).
FreeModuleElement right_act(const FreeModuleElement& x, Generator g);
FreeModuleElement right_act(const FreeModuleElement& x, const PBWElement& y);

// Omega on tensor slot `slot` (1-based): the one-factor operator applied in
// that slot, with coefficients moved to the far left through the earlier
// factors by the right action.  On vector modules this is the Omega of the
// vector representation, on dual modules it is Omega*.
FreeModuleElement omega_apply(const FreeModuleElement& x, int slot);
FreeModuleElement omega_star_apply(const FreeModuleElement& x, int slot);
// Swaps tensor slots i and i+1.
FreeModuleElement swap_slots(const FreeModuleElement& x, int i);

// Residual of Omega_{i+1} = s_i Omega_i s_i - kappa s_i on x, kappa = hbar on
// vector modules and -hbar on dual ones.
FreeModuleElement hecke_axiom_residual(const FreeModuleElement& x, int i);

// Sum_i A_i Omega^{N-i}(e_a), with Omega - hbar in place of Omega on the
// dual module.  One entry per a.
std::vector<FreeModuleElement> cayley_hamilton_residual(int N, bool dual);

// Coefficientwise conjugation identity for the center, i = 0..N+1, one entry
// per (i, a):
//   shifted_left = false:  A_i e - A_{i-1} O e  - [e A_i - (O - hbar)(e A_{i-1})]
//   shifted_left = true:   A_i e - A_{i-1} (O - hbar) e - [e A_i - O(e A_{i-1})]
// where O is Omega or Omega*.
std::vector<FreeModuleElement> conjugation_residual(int N, bool dual, bool shifted_left);

}  // namespace yc
