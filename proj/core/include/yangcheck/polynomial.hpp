#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "yangcheck/variable.hpp"

namespace yc {

struct Monomial {
  std::array<uint8_t, kNumSlots> exp{};
  uint16_t deg = 0;

  static Monomial of(Var v, int e = 1);
  int operator[](Var v) const { return exp[v.slot()]; }
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Caller guarantees divisibility.
  Monomial operator/(const Monomial& other) const;
  bool is_one() const { return deg == 0; }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.deg == b.deg && a.exp == b.exp;
  }
};

// Graded lexicographic comparison: total degree first, then exponents in slot
// order.  Returns <0, 0, >0.
int compare(const Monomial& a, const Monomial& b);

struct MonomialHash {
  size_t operator()(const Monomial& m) const;
};

struct Term {
  Monomial mono;
  mpq_class coeff;
};

using Substitution = std::vector<std::pair<Var, class Polynomial>>;

// Sparse polynomial over Q.  Terms are kept in strictly decreasing monomial
// order with no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor)
  Polynomial(const mpq_class& c);  // NOLINT
  Polynomial(Var v);  // NOLINT
  Polynomial(const Monomial& m, const mpq_class& c);

  // Accepts unsorted terms with repeats and zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_one() const;
  mpq_class constant_value() const;  // requires is_constant()
  mpq_class constant_term() const;
  const Term& leading() const { return terms_.front(); }
  int total_degree() const { return terms_.empty() ? -1 : terms_.front().mono.deg; }
  int degree_in(Var v) const;
  bool contains(Var v) const { return degree_in(v) > 0; }
  std::vector<Var> variables() const;
  // Componentwise minimum of exponents.
  Monomial monomial_content() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const mpq_class& c) const;
  Polynomial times_monomial(const Monomial& m, const mpq_class& c = 1) const;
  Polynomial pow(unsigned e) const;

  // Exact division; nullopt when d does not divide *this.
  std::optional<Polynomial> divide_exact(const Polynomial& d) const;
  Polynomial divide_monomial(const Monomial& m) const;

  // Simultaneous substitution v -> p.
  Polynomial substitute(const Substitution& values) const;
  // Moves the exponent of slot s to slot map[s].
  Polynomial rename(const std::array<uint8_t, kNumSlots>& slot_map) const;

  // Coefficients as a polynomial in v: result[d] is the coefficient of v^d.
  std::vector<Polynomial> coefficients_in(Var v) const;
  static Polynomial from_coefficients(Var v, const std::vector<Polynomial>& coeffs);

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
  // Total order used for canonical sorting of factor lists.
  friend int compare(const Polynomial& a, const Polynomial& b);

 private:
  std::vector<Term> terms_;
};

Polynomial operator*(const Polynomial& a, const Polynomial& b);

// p = scale * primitive, primitive has coprime integer coefficients and a
// positive leading coefficient.  For p = 0 returns (0, 0).
std::pair<mpq_class, Polynomial> primitive_split(const Polynomial& p);

// Greatest common divisor, normalised as in primitive_split (1 when coprime).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Symmetric-group helpers on an indexed family.
std::array<uint8_t, kNumSlots> identity_slot_map();
// Maps family variable i (1-based) to variable perm[i-1]+1 of the same family.
std::array<uint8_t, kNumSlots> permutation_slot_map(Family family, const std::vector<int>& perm);

}  // namespace yc
