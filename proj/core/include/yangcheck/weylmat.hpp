#pragma once

#include <map>
#include <string>
#include <vector>

#include "yangcheck/polynomial.hpp"
#include "yangcheck/upoly.hpp"

namespace yc {

// Polynomial differential operators on N x N matrices over Q[hbar], with
// d_ij x_kl = x_kl d_ij + hbar delta_ik delta_jl.  Monomials are normal
// ordered: every x to the left of every d.
class WeylElement {
 public:
  // Exponents of x_11..x_NN followed by d_11..d_NN.
  using Monomial = std::vector<uint8_t>;

  WeylElement() = default;
  explicit WeylElement(int N) : N_(N) {}
  static WeylElement scalar(int N, const Polynomial& c);
  static WeylElement one(int N) { return scalar(N, Polynomial(1L)); }
  static WeylElement x(int N, int i, int j);
  static WeylElement d(int N, int i, int j);

  int rank() const { return N_; }
  const std::map<Monomial, Polynomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend WeylElement operator+(const WeylElement& a, const WeylElement& b);
  friend WeylElement operator-(const WeylElement& a, const WeylElement& b);
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend WeylElement operator*(const Polynomial& c, const WeylElement& a);
  WeylElement operator-() const { return Polynomial(-1L) * *this; }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

  // e.g. "x11^2*d11^2 + hbar*x11*d11".
  std::string to_string() const;

  void add(const Monomial& m, const Polynomial& c);

 private:
  int N_ = 0;
  std::map<Monomial, Polynomial> terms_;
};

WeylElement commutator(const WeylElement& a, const WeylElement& b);

using WeylMatrix = std::vector<std::vector<WeylElement>>;
WeylMatrix matmul(const WeylMatrix& a, const WeylMatrix& b);

enum class Side { right, left };
// E^R_ij = sum_a x_ai d_aj;  E^L_ij = -sum_a x_ja d_ia.
WeylMatrix build_E(Side side, int N);
// X_ij = x_ji.
WeylMatrix x_matrix(int N);

struct IdentityCheck {
  std::string name;
  bool pass = true;
  std::string first_failure;  // empty on success
};

struct WeylReport {
  int N = 0;
  std::vector<IdentityCheck> checks;
  bool pass() const;
};

// (i)   X E^L = (-E^R + hbar N) X
// (ii)  A^L(u) = (-1)^N A^R(-u + N hbar - hbar)
// (iii) comatrix^R(-u + N hbar - hbar) X = (-1)^{N+1} X comatrix^L(u)
WeylReport verify_lr_identities(int N, int max_rank = 3);

}  // namespace yc
