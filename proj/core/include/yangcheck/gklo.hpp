#pragma once

#include <optional>
#include <string>
#include <vector>

#include "yangcheck/diffops.hpp"

namespace yc {

enum class CurrentKind { x_plus, x_minus, d1, d2, h };
std::string to_string(CurrentKind kind);
std::optional<CurrentKind> parse_current_kind(const std::string& name);  // "x+", "x-", "d1", "d2", "h"

struct Current {
  CurrentKind kind = CurrentKind::x_plus;
  int N = 0;
  Var spectral = Var::u();
  DifferenceOperator value;
};

// Images of the generating currents as exact rational functions of the
// spectral variable:
//   x+(u) -> -sum_i 1/(u - w_i) P_i U_i^-1,   x-(u) -> sum_i 1/(u - w_i - hbar) P_i U_i,
//   d1(u) -> prod (u - w_i),   d2(u) -> prod (u - w_i - hbar)^-1,   h = d1^-1 d2,
// with P_i = prod_{j != i} 1/(w_i - w_j).
Current gklo_image(CurrentKind kind, int N, Var spectral = Var::u());

struct Witness {
  DifferenceOperator::Shift shift;
  std::string coefficient;
};

struct RelationReport {
  std::string id;
  std::string statement;
  std::optional<Witness> failure;
  bool pass() const { return !failure; }
};

// Nine exact checks, each "lhs - rhs = 0" in the difference operators over
// Q(u, v, w, hbar):
//   2.1          [d1(u), d2(v)] = 0
//   2.2(+)       (u - v)[X(u), x-(v)] = -hbar (h(v) - h(u)), X = -x+ the positively normalised current
//   2.2          (u - v)[x+(u), x-(v)] = hbar (h(v) - h(u))
//   2.3(j=1,2)   (u - v)[d_j(u), x+(v)] = hbar (d_j1 - d_j2) d_j(u) (x+(u) - x+(v))
//   2.4(j=1,2)   (u - v)[d_j(u), x-(v)] = hbar (d_j2 - d_j1) (x-(u) - x-(v)) d_j(u)
//   2.5(+/-)     (u - v)[x(u), x(v)] = -/+ hbar (x(u) - x(v))^2
std::vector<RelationReport> verify_relations(int N, int max_rank = 4);

// Coefficient of u^-r in the expansion of the current at u = infinity.
DifferenceOperator mode(const Current& c, int r);
// Laurent expansion at infinity of a rational function of `t`: coefficient
// of t^-r.
RationalFunction laurent_coefficient(const RationalFunction& f, Var t, int r);

// Sum over monomials c_J Y^J of f and tuples (i_1..i_k) of the ordered
// product prod_a [P_{i_a} w_{i_a}^{j_a} U_{i_a}^-1].  Sign normalised
// positively: for k = 1, f = Y^{r-1} this is -mode(x+, r).
DifferenceOperator shuffle_to_diffop(const Polynomial& f, int k, int N);
// Same map evaluated by expanding every ordered product term by term.
DifferenceOperator shuffle_to_diffop_by_products(const Polynomial& f, int k, int N);

// Sign relating the positively normalised map to the current images:
// GKLO(x+^{(r_1)} ... x+^{(r_k)}) = gklo_shuffle_sign(k) * shuffle_to_diffop(Y^{r_1-1} * ... ).
int gklo_shuffle_sign(int k);

struct MonopoleReport {
  int N = 0, k = 0;
  Polynomial representative;  // (1/k!) prod_{i != j} (Y_i - Y_j - hbar)
  DifferenceOperator computed, predicted;
  bool pass() const { return computed == predicted; }
};
// predicted = sum_{|I| = k} prod_{i in I, j not in I} 1/(w_i - w_j) prod_{i in I} U_i^-1.
MonopoleReport monopole(int k, int N, int max_rank = 4);

}  // namespace yc
