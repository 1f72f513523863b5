#include "yangcheck/weylmat.hpp"

#include <stdexcept>

namespace yc {

namespace {

int merged_rank(int a, int b) {
  if (a && b && a != b) throw std::invalid_argument("rank mismatch");
  return a ? a : b;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// d^b x^c for a single commuting pair: sum_g C(b,g) C(c,g) g! hbar^g x^{c-g} d^{b-g}.
std::vector<std::pair<int, mpz_class>> pair_reorder(int b, int c) {
  std::vector<std::pair<int, mpz_class>> out;
  mpz_class fact = 1;
  for (int g = 0; g <= std::min(b, c); ++g) {
    if (g) fact *= g;
    out.push_back({g, binomial(b, g) * binomial(c, g) * fact});
  }
  return out;
}

}  // namespace

WeylElement WeylElement::scalar(int N, const Polynomial& c) {
  WeylElement r(N);
  r.add(Monomial(2 * N * N, 0), c);
  return r;
}

WeylElement WeylElement::x(int N, int i, int j) {
  if (i < 1 || j < 1 || i > N || j > N) throw std::out_of_range("Weyl index out of range");
  WeylElement r(N);
  Monomial m(2 * N * N, 0);
  m[(i - 1) * N + (j - 1)] = 1;
  r.add(m, Polynomial(1L));
  return r;
}

WeylElement WeylElement::d(int N, int i, int j) {
  if (i < 1 || j < 1 || i > N || j > N) throw std::out_of_range("Weyl index out of range");
  WeylElement r(N);
  Monomial m(2 * N * N, 0);
  m[N * N + (i - 1) * N + (j - 1)] = 1;
  r.add(m, Polynomial(1L));
  return r;
}

void WeylElement::add(const Monomial& m, const Polynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeylElement operator+(const WeylElement& a, const WeylElement& b) {
  WeylElement r = a;
  r.N_ = merged_rank(a.N_, b.N_);
  for (const auto& [m, c] : b.terms_) r.add(m, c);
  return r;
}

WeylElement operator-(const WeylElement& a, const WeylElement& b) {
  WeylElement r = a;
  r.N_ = merged_rank(a.N_, b.N_);
  for (const auto& [m, c] : b.terms_) r.add(m, -c);
  return r;
}

WeylElement operator*(const Polynomial& c, const WeylElement& a) {
  WeylElement r(a.N_);
  if (c.is_zero()) return r;
  for (const auto& [m, d] : a.terms_) r.add(m, c * d);
  return r;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  int N = merged_rank(a.N_, b.N_);
  int n = N * N;
  WeylElement r(N);
  Polynomial hbar(Var::hbar());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      // x^A d^B x^C d^D: reorder d^B x^C pair by pair.
      std::vector<std::pair<WeylElement::Monomial, Polynomial>> partial{{WeylElement::Monomial(2 * n, 0), ca * cb}};
      for (int p = 0; p < n; ++p) {
        int B = ma[n + p], C = mb[p];
        std::vector<std::pair<WeylElement::Monomial, Polynomial>> next;
        for (const auto& [m, c] : partial)
          for (const auto& [g, coeff] : pair_reorder(B, C)) {
            auto m2 = m;
            m2[p] = static_cast<uint8_t>(ma[p] + C - g);
            m2[n + p] = static_cast<uint8_t>(B - g + mb[n + p]);
            next.push_back({m2, c * hbar.pow(g).scaled(mpq_class(coeff))});
          }
        partial = std::move(next);
      }
      for (const auto& [m, c] : partial) r.add(m, c);
    }
  return r;
}

std::string WeylElement::to_string() const {
  if (terms_.empty()) return "0";
  int n = N_ * N_;
  std::string out;
  // Higher total degree first.
  std::vector<std::pair<Monomial, Polynomial>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (auto e : a.first) da += e;
    for (auto e : b.first) db += e;
    if (da != db) return da > db;
    return a.first > b.first;
  });
  for (const auto& [m, c] : sorted) {
    std::string mono;
    for (int s = 0; s < 2 * n; ++s) {
      if (!m[s]) continue;
      int p = s % n;
      if (!mono.empty()) mono += "*";
      mono += (s < n ? "x" : "d") + std::to_string(p / N_ + 1) + std::to_string(p % N_ + 1);
      if (m[s] > 1) mono += "^" + std::to_string(m[s]);
    }
    bool negative = c.size() == 1 && c.leading().coeff < 0;
    Polynomial mag = negative ? -c : c;
    std::string term;
    if (mono.empty()) term = mag.to_string();
    else if (mag.is_one()) term = mono;
    else if (mag.size() == 1) term = mag.to_string() + "*" + mono;
    else term = "(" + mag.to_string() + ")*" + mono;
    if (out.empty()) out = negative ? "-" + term : term;
    else out += (negative ? " - " : " + ") + term;
  }
  return out;
}

WeylElement commutator(const WeylElement& a, const WeylElement& b) { return a * b - b * a; }

WeylMatrix matmul(const WeylMatrix& a, const WeylMatrix& b) {
  size_t n = a.size(), p = b.empty() ? 0 : b[0].size();
  WeylMatrix r(n, std::vector<WeylElement>(p));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < p; ++j)
      for (size_t t = 0; t < b.size(); ++t) r[i][j] = r[i][j] + a[i][t] * b[t][j];
  return r;
}

WeylMatrix build_E(Side side, int N) {
  WeylMatrix E(N, std::vector<WeylElement>(N, WeylElement(N)));
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      for (int a = 1; a <= N; ++a) {
        if (side == Side::right) E[i - 1][j - 1] = E[i - 1][j - 1] + WeylElement::x(N, a, i) * WeylElement::d(N, a, j);
        else E[i - 1][j - 1] = E[i - 1][j - 1] - WeylElement::x(N, j, a) * WeylElement::d(N, i, a);
      }
  return E;
}

WeylMatrix x_matrix(int N) {
  WeylMatrix X(N, std::vector<WeylElement>(N));
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) X[i - 1][j - 1] = WeylElement::x(N, j, i);
  return X;
}

bool WeylReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

namespace {

template <class M>
IdentityCheck compare_matrices(const std::string& name, const M& lhs, const M& rhs) {
  IdentityCheck c{name, true, ""};
  for (size_t i = 0; i < lhs.size() && c.pass; ++i)
    for (size_t j = 0; j < lhs[i].size(); ++j)
      if (lhs[i][j] != rhs[i][j]) {
        c.pass = false;
        c.first_failure = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + lhs[i][j].to_string() +
                          " != " + rhs[i][j].to_string();
        break;
      }
  return c;
}

EntryFn<WeylElement> entries_of(const WeylMatrix& E) {
  return [E](int a, int b) { return E[a - 1][b - 1]; };
}

UMatrix<WeylElement> constant_matrix(const WeylMatrix& m) {
  UMatrix<WeylElement> r(m.size(), std::vector<UPoly<WeylElement>>(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m.size(); ++j) r[i][j] = UPoly<WeylElement>(m[i][j]);
  return r;
}

}  // namespace

WeylReport verify_lr_identities(int N, int max_rank) {
  if (N < 1 || N > max_rank) throw std::invalid_argument("rank out of range for the Weyl checks");
  WeylReport report;
  report.N = N;
  Polynomial hbar(Var::hbar());
  WeylElement one = WeylElement::one(N);
  WeylMatrix ER = build_E(Side::right, N), EL = build_E(Side::left, N), X = x_matrix(N);

  WeylMatrix shifted(N, std::vector<WeylElement>(N, WeylElement(N)));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) shifted[i][j] = -ER[i][j] + (i == j ? hbar.scaled(N) * one : WeylElement(N));
  report.checks.push_back(compare_matrices("X*E^L = (-E^R + hbar*N)*X", matmul(X, EL), matmul(shifted, X)));

  auto AR = quantum_determinant<WeylElement>(entries_of(ER), one, N);
  auto AL = quantum_determinant<WeylElement>(entries_of(EL), one, N);
  auto ARs = AR.substitute(Polynomial(-1L), hbar.scaled(N - 1));
  if (N % 2) ARs = ARs.scaled(Polynomial(-1L));
  report.checks.push_back(
      compare_matrices("A^L(u) = (-1)^N A^R(-u + N*hbar - hbar)", UMatrix<WeylElement>{{AL}}, UMatrix<WeylElement>{{ARs}}));

  auto CR = substitute(quantum_comatrix<WeylElement>(entries_of(ER), one, N), Polynomial(-1L), hbar.scaled(N - 1));
  auto CL = quantum_comatrix<WeylElement>(entries_of(EL), one, N);
  auto UX = constant_matrix(X);
  auto rhs = matmul(UX, CL);
  if (N % 2 == 0)
    for (auto& row : rhs)
      for (auto& e : row) e = e.scaled(Polynomial(-1L));
  report.checks.push_back(
      compare_matrices("comatrix^R(-u + N*hbar - hbar)*X = (-1)^(N+1) X*comatrix^L(u)", matmul(CR, UX), rhs));
  return report;
}

}  // namespace yc
