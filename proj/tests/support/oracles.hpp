#pragma once

// Independent brute-force evaluations used to check the library.

#include <vector>

#include "yangcheck/heckerep.hpp"
#include "yangcheck/permops.hpp"
#include "yangcheck/rational_function.hpp"

namespace oracle {

using namespace yc;

inline mpq_class factorial(int k) {
  mpq_class f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// (1/k!) Sym_k( prod_{i<j} (Y_i - Y_j + kappa)/(Y_i - Y_j) * f ) as a sum of
// k! rational functions.
inline RationalFunction naive_symmetrizer(int k, const Polynomial& kappa, const Polynomial& f) {
  RationalFunction g = f;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      Polynomial d = Polynomial(Var::Y(i)) - Polynomial(Var::Y(j));
      g *= RationalFunction::fraction(d + kappa, d);
    }
  RationalFunction s;
  for (const Perm& p : all_perms(k)) s += perm_act(p, g, Family::Y);
  return s / RationalFunction(factorial(k));
}

// (1/k!) prod_{i<j}(Y_i - Y_j - kappa)/(Y_i - Y_j) * Sym^-_k f.
inline RationalFunction naive_antisymmetrizer(int k, const Polynomial& kappa, const Polynomial& f) {
  RationalFunction alt;
  for (const Perm& p : all_perms(k)) alt += RationalFunction(perm_sign(p)) * perm_act(p, RationalFunction(f), Family::Y);
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      Polynomial d = Polynomial(Var::Y(i)) - Polynomial(Var::Y(j));
      alt *= RationalFunction::fraction(d - kappa, d);
    }
  return alt / RationalFunction(factorial(k));
}

// Complete homogeneous symmetric polynomial by enumeration.
inline Polynomial complete_homogeneous(int d, int k) {
  if (d < 0) return Polynomial();
  if (d == 0) return Polynomial(1L);
  // h_d = sum of monomials of degree d: coefficient extraction from the
  // product of geometric series truncated at degree d.
  Polynomial r(1L);
  for (int i = 1; i <= k; ++i) {
    Polynomial geo(1L), p(1L);
    for (int e = 1; e <= d; ++e) {
      p *= Polynomial(Var::Y(i));
      geo += p;
    }
    r *= geo;
    std::vector<Term> keep;
    for (const auto& t : r.terms())
      if (t.mono.deg <= d) keep.push_back(t);
    r = Polynomial::from_terms(keep);
  }
  std::vector<Term> keep;
  for (const auto& t : r.terms())
    if (t.mono.deg == d) keep.push_back(t);
  return Polynomial::from_terms(keep);
}

// Jacobi-Trudi: s_lambda = det(h_{lambda_i - i + j}).
inline Polynomial jacobi_trudi(const std::vector<int>& lam) {
  int n = static_cast<int>(lam.size());
  int k = n;
  Polynomial det;
  for (const Perm& p : all_perms(n)) {
    Polynomial t(perm_sign(p));
    for (int i = 0; i < n; ++i) t *= complete_homogeneous(lam[i] - i + p[i], k);
    det += t;
  }
  return det;
}

// Coefficient of u^{-a-1} in prod_i (u - Y_i + hbar)/(u - Y_i), divided by
// hbar, via truncated series in t = 1/u.
inline Polynomial power_sum_from_series(int a, int k) {
  // factor_i = 1 + hbar * sum_{n>=0} Y_i^n t^{n+1}; keep t-degree <= a+1.
  int top = a + 1;
  std::vector<Polynomial> prod(top + 1);
  prod[0] = Polynomial(1L);
  for (int i = 1; i <= k; ++i) {
    std::vector<Polynomial> f(top + 1);
    f[0] = Polynomial(1L);
    Polynomial y(1L);
    for (int n = 0; n + 1 <= top; ++n) {
      f[n + 1] = Polynomial(Var::hbar()) * y;
      y *= Polynomial(Var::Y(i));
    }
    std::vector<Polynomial> next(top + 1);
    for (int x = 0; x <= top; ++x)
      for (int y2 = 0; x + y2 <= top; ++y2)
        if (!prod[x].is_zero() && !f[y2].is_zero()) next[x + y2] += prod[x] * f[y2];
    prod = std::move(next);
  }
  return *prod[top].divide_exact(Polynomial(Var::hbar()));
}

}  // namespace oracle

namespace oracle {

// Definition-level FO product: full S_{k+l} sum of rational functions.
inline RationalFunction naive_fo(const Polynomial& f, int k, const Polynomial& g, int l, const Polynomial& kappa) {
  auto m = identity_slot_map();
  for (int i = 1; i <= l; ++i) m[Var::Y(i).slot()] = static_cast<uint8_t>(Var::Y(i + k).slot());
  RationalFunction F = RationalFunction(f * g.rename(m));
  for (int i = 1; i <= k; ++i)
    for (int j = k + 1; j <= k + l; ++j) {
      Polynomial d = Polynomial(Var::Y(i)) - Polynomial(Var::Y(j));
      F *= RationalFunction::fraction(d + kappa, d);
    }
  RationalFunction s;
  for (const Perm& p : all_perms(k + l)) s += perm_act(p, F, Family::Y);
  return s / RationalFunction(factorial(k) * factorial(l));
}

}  // namespace oracle
