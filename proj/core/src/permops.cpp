#include "yangcheck/permops.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace yc {

Perm perm_identity(int k) {
  Perm p(k);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("permutation rank mismatch");
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

Perm perm_transposition(int k, int i, int j) {
  if (i < 1 || j < 1 || i > k || j > k) throw std::out_of_range("transposition index out of range");
  Perm p = perm_identity(k);
  std::swap(p[i - 1], p[j - 1]);
  return p;
}

int perm_sign(const Perm& p) {
  int inversions = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  return inversions % 2 ? -1 : 1;
}

std::vector<Perm> all_perms(int k) {
  std::vector<Perm> out;
  Perm p = perm_identity(k);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<int> reduced_word(const Perm& p) {
  // Bubble sort p to the identity by right multiplication with adjacent
  // transpositions; p = s_{a_m} ... s_{a_1} read backwards.
  Perm q = p;
  std::vector<int> word;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (size_t i = 0; i + 1 < q.size(); ++i)
      if (q[i] > q[i + 1]) {
        std::swap(q[i], q[i + 1]);
        word.push_back(static_cast<int>(i) + 1);
        swapped = true;
      }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

RationalFunction perm_act(const Perm& p, const RationalFunction& f, Family family) {
  return f.rename(permutation_slot_map(family, p));
}

Polynomial perm_act(const Perm& p, const Polynomial& f, Family family) {
  return f.rename(permutation_slot_map(family, p));
}

PermAlgebraElement PermAlgebraElement::term(int k, const Perm& p, const RationalFunction& c) {
  PermAlgebraElement e(k);
  e.add_term(p, c);
  return e;
}

RationalFunction PermAlgebraElement::coefficient(const Perm& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? RationalFunction() : it->second;
}

void PermAlgebraElement::add_term(const Perm& p, const RationalFunction& c) {
  if (static_cast<int>(p.size()) != k_) throw std::invalid_argument("permutation rank mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PermAlgebraElement PermAlgebraElement::scaled(const RationalFunction& c) const {
  PermAlgebraElement r(k_);
  for (const auto& [p, d] : terms_) r.add_term(p, c * d);
  return r;
}

PermAlgebraElement operator+(const PermAlgebraElement& a, const PermAlgebraElement& b) {
  if (a.k_ != b.k_) throw std::invalid_argument("rank mismatch");
  PermAlgebraElement r = a;
  for (const auto& [p, c] : b.terms_) r.add_term(p, c);
  return r;
}

PermAlgebraElement operator-(const PermAlgebraElement& a, const PermAlgebraElement& b) {
  if (a.k_ != b.k_) throw std::invalid_argument("rank mismatch");
  PermAlgebraElement r = a;
  for (const auto& [p, c] : b.terms_) r.add_term(p, -c);
  return r;
}

PermAlgebraElement operator*(const PermAlgebraElement& a, const PermAlgebraElement& b) {
  if (a.k_ != b.k_) throw std::invalid_argument("rank mismatch");
  PermAlgebraElement r(a.k_);
  for (const auto& [p, c] : a.terms_)
    for (const auto& [q, d] : b.terms_) r.add_term(perm_mul(p, q), c * perm_act(p, d));
  return r;
}

PermAlgebraElement perm_compose(const PermAlgebraElement& a, const PermAlgebraElement& b) { return a * b; }

bool operator==(const PermAlgebraElement& a, const PermAlgebraElement& b) {
  return a.k_ == b.k_ && a.terms_ == b.terms_;
}

RationalFunction PermAlgebraElement::apply(const RationalFunction& f) const {
  RationalFunction r;
  for (const auto& [p, c] : terms_) r += c * perm_act(p, f);
  return r;
}

std::string PermAlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [p, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*[";
    for (size_t i = 0; i < p.size(); ++i) out += (i ? "," : "") + std::to_string(p[i] + 1);
    out += "]";
  }
  return out;
}

RationalFunction g_factor(const RationalFunction& z, const RationalFunction& w) { return (z + w) / (z * w); }

namespace {

RationalFunction zdiff(int i, int j) { return RationalFunction(Polynomial(Var::z(i)) - Polynomial(Var::z(j))); }

void check_rank(int k) {
  if (k < 1 || k > kMaxIndexed) throw std::out_of_range("rank out of range");
}

}  // namespace

PermAlgebraElement su_r(int i, int j, const RationalFunction& xi, const RationalFunction& kappa, int k) {
  check_rank(k);
  if (i == j) throw std::invalid_argument("su_r needs distinct slots");
  RationalFunction d = zdiff(i, j);
  PermAlgebraElement r = PermAlgebraElement::term(k, perm_identity(k), g_factor(d, kappa));
  r.add_term(perm_transposition(k, i, j), -g_factor(d, xi));
  return r;
}

PermAlgebraElement su_rcheck(int i, const RationalFunction& xi, const RationalFunction& kappa, int k) {
  check_rank(k);
  if (i < 1 || i >= k) throw std::out_of_range("braiding index out of range");
  RationalFunction d = zdiff(i + 1, i);
  PermAlgebraElement r = PermAlgebraElement::term(k, perm_transposition(k, i, i + 1), g_factor(d, kappa));
  r.add_term(perm_identity(k), -g_factor(d, xi));
  return r;
}

PermAlgebraElement su_symmetrizer(int k, const RationalFunction& kappa, Sign sign) {
  check_rank(k);
  PermAlgebraElement r = PermAlgebraElement::identity(k);
  if (sign == Sign::plus) {
    for (int m = k - 1; m >= 1; --m)
      for (int t = 1; t <= m; ++t) r = r * su_rcheck(k - t, RationalFunction(-t) * kappa, kappa, k);
  } else {
    for (int m = 1; m <= k - 1; ++m)
      for (int t = m; t >= 1; --t) r = r * su_rcheck(k - t, RationalFunction(t) * kappa, kappa, k);
  }
  return r;
}

PermAlgebraElement su_symmetrizer_closed(int k, const RationalFunction& kappa, Sign sign) {
  check_rank(k);
  RationalFunction prod(1L);
  RationalFunction kap = sign == Sign::plus ? kappa : -kappa;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) prod *= g_factor(zdiff(i, j), kap);
  PermAlgebraElement r(k);
  for (const Perm& p : all_perms(k)) {
    if (sign == Sign::plus) r.add_term(p, perm_act(p, prod));
    else r.add_term(p, RationalFunction(perm_sign(p)) * prod);
  }
  return r;
}

PermAlgebraElement hecke_rcheck(int i, const RationalFunction& xi, int k) {
  check_rank(k);
  PermAlgebraElement r = PermAlgebraElement::term(k, perm_transposition(k, i, i + 1), 1L);
  r.add_term(perm_identity(k), xi.inverse());
  return r;
}

PermAlgebraElement hecke_sigma_element(int i, const RationalFunction& kappa, int k) {
  check_rank(k);
  RationalFunction c = kappa / zdiff(i, i + 1);
  PermAlgebraElement r = PermAlgebraElement::term(k, perm_transposition(k, i, i + 1), RationalFunction(1L) - c);
  r.add_term(perm_identity(k), c);
  return r;
}

namespace {

mpq_class inverse_factorial(int k) {
  mpz_class f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return mpq_class(mpz_class(1), f);
}

}  // namespace

PermAlgebraElement hecke_idempotent_via_r(int k, Sign sign) {
  check_rank(k);
  PermAlgebraElement r = PermAlgebraElement::identity(k);
  if (sign == Sign::plus) {
    for (int m = k - 1; m >= 1; --m)
      for (int t = 1; t <= m; ++t) r = r * hecke_rcheck(k - t, RationalFunction(t), k);
    return r.scaled(RationalFunction(inverse_factorial(k)));
  }
  for (int m = 1; m <= k - 1; ++m)
    for (int t = m; t >= 1; --t) r = r * hecke_rcheck(k - t, RationalFunction(-t), k);
  // Each factor acts by -(t+1)/t on the sign representation, so the
  // normalisation is (-1)^{k(k-1)/2} / k!.
  int s = (k * (k - 1) / 2) % 2 ? -1 : 1;
  return r.scaled(RationalFunction(inverse_factorial(k) * s));
}

PermAlgebraElement group_idempotent(int k, Sign sign) {
  check_rank(k);
  PermAlgebraElement r(k);
  mpq_class c = inverse_factorial(k);
  for (const Perm& p : all_perms(k)) r.add_term(p, RationalFunction(sign == Sign::minus ? c * perm_sign(p) : c));
  return r;
}

}  // namespace yc
