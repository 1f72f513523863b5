#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "yangcheck/heckerep.hpp"

namespace yc {

// Graded element: degree k -> symmetric polynomial in Y_1..Y_k.
class ShuffleElement {
 public:
  ShuffleElement() = default;
  // Throws when the component is not symmetric or uses Y_j with j > k.
  static ShuffleElement single(int k, const Polynomial& f);

  const std::map<int, Polynomial>& components() const { return comp_; }
  Polynomial component(int k) const;
  void add(int k, const Polynomial& f);

  friend ShuffleElement operator+(const ShuffleElement& a, const ShuffleElement& b);
  friend ShuffleElement operator-(const ShuffleElement& a, const ShuffleElement& b);
  friend bool operator==(const ShuffleElement& a, const ShuffleElement& b) { return a.comp_ == b.comp_; }

 private:
  std::map<int, Polynomial> comp_;
};

// Throws std::invalid_argument unless f is symmetric in Y_1..Y_k and free of
// Y_j for j > k.
void require_symmetric_component(const Polynomial& f, int k);

// Renames Y_i -> Y_{i+offset}.
Polynomial shift_y(const Polynomial& g, int offset);

// (1/(k!l!)) Sym_{k+l}( prod_{i<=k<j} (Y_i - Y_j + kappa)/(Y_i - Y_j) f g ),
// summed over coset representatives of S_k x S_l.
Polynomial fo_product(const Polynomial& f, int k, const Polynomial& g, int l, const Polynomial& kappa);
// e^kappa_{k+l}( f(Y_1..Y_k) g(Y_{k+1}..Y_{k+l}) ).
Polynomial hecke_product(const Polynomial& f, int k, const Polynomial& g, int l, const Polynomial& kappa);

enum class ShuffleKind { fo, hecke };
ShuffleElement shuffle_mul(const ShuffleElement& a, const ShuffleElement& b, const Polynomial& kappa, ShuffleKind kind);

struct ProductComparison {
  int k = 0, l = 0;
  Polynomial fo, hecke;
  std::optional<mpq_class> ratio;  // fo = ratio * hecke; empty when not proportional
  mpz_class binomial;              // C(k+l, k)
  bool pass = false;               // ratio == binomial (or both products vanish)
};
ProductComparison compare_products(const Polynomial& f, int k, const Polynomial& g, int l, const Polynomial& kappa);

// True iff every component has degree < N in each Y_i.
bool truncate_check(const ShuffleElement& x, int N);

// Monomial symmetric polynomial m_lambda(Y_1..Y_k).
Polynomial monomial_symmetric(const Partition& lambda, int k);
// All partitions with at most k parts and size <= max_size.
std::vector<Partition> partitions_up_to(int max_size, int k);

struct CurrentRelationReport {
  int R = 0;
  bool plus = true;
  int coefficients_checked = 0;
  std::optional<std::pair<int, int>> first_failure;  // (a, b) of u^{-a} v^{-b}
  bool pass() const { return !first_failure; }
};
// Checks (u-v)[x(u),x(v)] = -+hbar (x(u)-x(v))^2 coefficientwise for
// u^{-a} v^{-b}, a+b <= R, with x^{(i)} = Y_1^{i-1} in degree one and the FO
// product.  plus uses kappa = hbar and sign -, minus uses kappa = -hbar and
// sign +.  hbar_value specialises hbar (0 gives the classical limit).
CurrentRelationReport verify_current_relation(int R, bool plus, std::optional<Polynomial> hbar_value = std::nullopt);

}  // namespace yc
