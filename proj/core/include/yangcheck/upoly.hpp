#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "yangcheck/polynomial.hpp"

namespace yc {

// Polynomial in a central variable u with coefficients in a ring R.
// coeff(d) is the coefficient of u^d.  R must provide +, -, * between
// elements, `Polynomial * R` for central scalars, is_zero(), and a
// default-constructed zero.
template <class R>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(const R& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
  }
  // c0 + c1 u.
  static UPoly linear(const R& c0, const R& c1) {
    UPoly p;
    p.c_ = {c0, c1};
    p.trim();
    return p;
  }
  static UPoly from_coefficients(std::vector<R> ascending) {
    UPoly p;
    p.c_ = std::move(ascending);
    p.trim();
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<R>& coefficients() const { return c_; }
  R coeff(int d) const { return d >= 0 && d < static_cast<int>(c_.size()) ? c_[d] : R(); }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly r;
    size_t n = std::max(a.c_.size(), b.c_.size());
    r.c_.resize(n);
    for (size_t i = 0; i < n; ++i) r.c_[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    r.trim();
    return r;
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + b.scaled(Polynomial(-1L)); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.resize(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j)
        if (!b.c_[j].is_zero()) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }
  UPoly scaled(const Polynomial& s) const {
    UPoly r;
    for (const auto& x : c_) r.c_.push_back(s * x);
    r.trim();
    return r;
  }
  // u -> alpha u + shift, alpha and shift central scalars.
  UPoly substitute(const Polynomial& alpha, const Polynomial& shift) const {
    UPoly r;
    // Horner: p(alpha u + s) = (...(c_n (alpha u + s) + c_{n-1}) ...).
    for (size_t i = c_.size(); i-- > 0;) {
      UPoly t;
      t.c_.resize(r.c_.size() + 1);
      for (size_t d = 0; d < r.c_.size(); ++d) {
        t.c_[d] = t.c_[d] + shift * r.c_[d];
        t.c_[d + 1] = t.c_[d + 1] + alpha * r.c_[d];
      }
      t.c_[0] = t.c_[0] + c_[i];
      t.trim();
      r = std::move(t);
    }
    return r;
  }
  template <class F>
  auto map(F f) const -> UPoly<decltype(f(std::declval<R>()))> {
    std::vector<decltype(f(std::declval<R>()))> out;
    for (const auto& x : c_) out.push_back(f(x));
    return UPoly<decltype(f(std::declval<R>()))>::from_coefficients(std::move(out));
  }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  // Descending powers, e.g. "u^2 + (-E11 - E22)*u + E11*E22".
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      std::string c = c_[i].to_string();
      bool single = c.find(' ') == std::string::npos;
      std::string mono = i == 0 ? "" : i == 1 ? "u" : "u^" + std::to_string(i);
      std::string term;
      if (mono.empty()) term = single ? c : "(" + c + ")";
      else if (c == "1") term = mono;
      else if (c == "-1") term = "-" + mono;
      else term = (single ? c : "(" + c + ")") + "*" + mono;
      if (out.empty()) out = term;
      else if (term[0] == '-') out += " - " + term.substr(1);
      else out += " + " + term;
    }
    return out;
  }

 private:
  std::vector<R> c_;
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
};

template <class R>
using UMatrix = std::vector<std::vector<UPoly<R>>>;

// Matrix entry accessor: returns E_ab (1-based) in R.
template <class R>
using EntryFn = std::function<R(int, int)>;

namespace detail {

inline std::vector<std::vector<int>> permutations_of(int m) {
  std::vector<int> p(m);
  for (int i = 0; i < m; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline int sign_of(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j) inv += p[i] > p[j];
  return inv % 2 ? -1 : 1;
}

}  // namespace detail

// T_ab(u - s hbar) = (u - s hbar) delta_ab + E_ab.
template <class R>
UPoly<R> t_entry(const EntryFn<R>& E, const R& one, int a, int b, int s) {
  R c0 = E(a, b);
  if (a == b) {
    c0 = c0 + Polynomial(Var::hbar()).scaled(-s) * one;
    return UPoly<R>::linear(c0, one);
  }
  return UPoly<R>(c0);
}

// Row form: sum_sigma sgn T_{a_sigma(1) b_1}(u) T_{a_sigma(2) b_2}(u - hbar) ...
template <class R>
UPoly<R> quantum_minor_rows(const EntryFn<R>& E, const R& one, const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("quantum minor needs equally many rows and columns");
  int m = static_cast<int>(a.size());
  UPoly<R> total;
  for (const auto& p : detail::permutations_of(m)) {
    UPoly<R> t(one);
    for (int s = 0; s < m; ++s) t = t * t_entry(E, one, a[p[s]], b[s], s);
    total = detail::sign_of(p) > 0 ? total + t : total - t;
  }
  return total;
}

// Column form: sum_sigma sgn T_{a_1 b_sigma(1)}(u - (m-1) hbar) ... T_{a_m b_sigma(m)}(u).
template <class R>
UPoly<R> quantum_minor_cols(const EntryFn<R>& E, const R& one, const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("quantum minor needs equally many rows and columns");
  int m = static_cast<int>(a.size());
  UPoly<R> total;
  for (const auto& p : detail::permutations_of(m)) {
    UPoly<R> t(one);
    for (int s = 0; s < m; ++s) t = t * t_entry(E, one, a[s], b[p[s]], m - 1 - s);
    total = detail::sign_of(p) > 0 ? total + t : total - t;
  }
  return total;
}

// A(u) = (-1)^N T^{1..N}_{1..N}(-u + N hbar - hbar).
template <class R>
UPoly<R> quantum_determinant(const EntryFn<R>& E, const R& one, int N) {
  std::vector<int> idx(N);
  for (int i = 0; i < N; ++i) idx[i] = i + 1;
  UPoly<R> t = quantum_minor_rows(E, one, idx, idx);
  UPoly<R> a = t.substitute(Polynomial(-1L), Polynomial(Var::hbar()).scaled(N - 1));
  return N % 2 ? a.scaled(Polynomial(-1L)) : a;
}

// Comatrix entry (i, j): (-1)^{i+j} times the minor with rows {1..N}\{j}
// and columns {1..N}\{i}.
template <class R>
UMatrix<R> quantum_comatrix(const EntryFn<R>& E, const R& one, int N) {
  UMatrix<R> m(N, std::vector<UPoly<R>>(N));
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      std::vector<int> rows, cols;
      for (int t = 1; t <= N; ++t) {
        if (t != j) rows.push_back(t);
        if (t != i) cols.push_back(t);
      }
      UPoly<R> minor = rows.empty() ? UPoly<R>(one) : quantum_minor_rows(E, one, rows, cols);
      m[i - 1][j - 1] = (i + j) % 2 ? minor.scaled(Polynomial(-1L)) : minor;
    }
  return m;
}

template <class R>
UMatrix<R> t_matrix(const EntryFn<R>& E, const R& one, int N) {
  UMatrix<R> m(N, std::vector<UPoly<R>>(N));
  for (int a = 1; a <= N; ++a)
    for (int b = 1; b <= N; ++b) m[a - 1][b - 1] = t_entry(E, one, a, b, 0);
  return m;
}

template <class R>
UMatrix<R> matmul(const UMatrix<R>& x, const UMatrix<R>& y) {
  size_t n = x.size(), p = y.empty() ? 0 : y[0].size();
  UMatrix<R> r(n, std::vector<UPoly<R>>(p));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < p; ++j)
      for (size_t t = 0; t < y.size(); ++t) r[i][j] = r[i][j] + x[i][t] * y[t][j];
  return r;
}

template <class R>
UMatrix<R> substitute(const UMatrix<R>& m, const Polynomial& alpha, const Polynomial& shift) {
  UMatrix<R> r = m;
  for (auto& row : r)
    for (auto& e : row) e = e.substitute(alpha, shift);
  return r;
}

}  // namespace yc
