#pragma once

#include <string>
#include <vector>

#include "yangcheck/polynomial.hpp"

namespace yc {

// One denominator factor: primitive integer polynomial with positive leading
// coefficient, raised to exp >= 1.
struct Factor {
  Polynomial poly;
  int exp = 1;
};

// Reduced quotient num / prod(factor^exp).
//
// The denominator is stored factored.  Factors are pairwise coprime and
// primitive with positive leading coefficient; linear factors are therefore
// irreducible, which makes cancellation a matter of trial division.  The
// numerator carries every rational scalar.  The canonical form used for
// printing and equality is (numerator, expanded denominator).
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(long c) : num_(c) {}  // NOLINT
  RationalFunction(const mpq_class& c) : num_(c) {}  // NOLINT
  RationalFunction(const Polynomial& p) : num_(p) {}  // NOLINT
  RationalFunction(Var v) : num_(v) {}  // NOLINT

  // num / den with den != 0.
  static RationalFunction fraction(const Polynomial& num, const Polynomial& den);
  // num / prod(den_factors); the factors need not be normalised or coprime.
  static RationalFunction with_factors(const Polynomial& num, const std::vector<Polynomial>& den_factors);

  const Polynomial& numerator() const { return num_; }
  const std::vector<Factor>& denominator_factors() const { return den_; }
  Polynomial denominator() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  bool is_constant() const { return den_.empty() && num_.is_constant(); }
  bool contains(Var v) const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction inverse() const;
  RationalFunction pow(int e) const;

  // Simultaneous substitution v -> p.
  RationalFunction substitute(const Substitution& values) const;
  // Simultaneous shift v -> v + s(v).
  RationalFunction shift(const Substitution& shifts) const;
  RationalFunction rename(const std::array<uint8_t, kNumSlots>& slot_map) const;

  std::string to_string() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b);
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  // Caller guarantees the class invariants (coprime normalised factors,
  // numerator coprime to every factor).
  static RationalFunction from_reduced(Polynomial num, std::vector<Factor> den);

 private:
  Polynomial num_;
  std::vector<Factor> den_;
};

enum class ArithOp { add, sub, mul, div };
RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, ArithOp op);

// True iff every denominator factor has the form c*(w_i - w_j + k*hbar) with
// integer k and 1 <= i, j <= N.  Factors containing any exempt variable are
// skipped.
bool denominator_admissible(const RationalFunction& f, int N, const std::vector<Var>& exempt = {});

}  // namespace yc
