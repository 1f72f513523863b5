#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "yangcheck/rational_function.hpp"

namespace yc {

inline constexpr int kMaxShift = 16;

// Sum_m c_m(w, hbar, u, v) U^m over shift vectors m in Z^N, with
// U^m f(w) = f(w + hbar m) U^m.  u and v are central.
class DifferenceOperator {
 public:
  using Shift = std::vector<int>;

  DifferenceOperator() = default;
  explicit DifferenceOperator(int N) : N_(N) {}
  static DifferenceOperator coefficient(int N, const RationalFunction& c);
  static DifferenceOperator monomial(int N, const Shift& m, const RationalFunction& c = RationalFunction(1L));
  // U_i^e.
  static DifferenceOperator shift(int N, int i, int e = 1);

  int rank() const { return N_; }
  const std::map<Shift, RationalFunction>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RationalFunction coefficient_of(const Shift& m) const;

  void add(const Shift& m, const RationalFunction& c);

  friend DifferenceOperator operator+(const DifferenceOperator& a, const DifferenceOperator& b);
  friend DifferenceOperator operator-(const DifferenceOperator& a, const DifferenceOperator& b);
  friend DifferenceOperator operator*(const DifferenceOperator& a, const DifferenceOperator& b);
  DifferenceOperator operator-() const { return scaled(RationalFunction(-1L)); }
  // c * this, c central (free of w).
  DifferenceOperator scaled(const RationalFunction& c) const;
  // Two-sided inverse of a single term c U^m.
  DifferenceOperator inverse() const;
  DifferenceOperator pow(int e) const;

  // Applies the same coefficient map to every term.
  template <class F>
  DifferenceOperator map_coefficients(F f) const {
    DifferenceOperator r(N_);
    for (const auto& [m, c] : terms_) r.add(m, f(c));
    return r;
  }
  // w_i -> w_{p(i)}, U_i -> U_{p(i)} for a 0-based one-line permutation p.
  DifferenceOperator permuted(const std::vector<int>& p) const;

  friend bool operator==(const DifferenceOperator& a, const DifferenceOperator& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const DifferenceOperator& a, const DifferenceOperator& b) { return !(a == b); }

  // Terms in lexicographic shift order, e.g. "(w1 + hbar)*u1^-1*u2 + (1/(w1 - w2))".
  std::string to_string() const;

 private:
  int N_ = 0;
  std::map<Shift, RationalFunction> terms_;
};

DifferenceOperator dop_mul(const DifferenceOperator& a, const DifferenceOperator& b);
DifferenceOperator dop_commutator(const DifferenceOperator& a, const DifferenceOperator& b);

// Every coefficient has an admissible denominator (see
// denominator_admissible) with u and v exempt.
bool coeffs_admissible(const DifferenceOperator& a, int N);

// Parses the printer's syntax: rational expressions in the usual variables,
// shift atoms u1..uN with integer powers, products taken in written order.
DifferenceOperator parse_difference_operator(std::string_view text, int N);

}  // namespace yc
