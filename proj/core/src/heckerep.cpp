#include "yangcheck/heckerep.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace yc {

int Partition::size() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

bool Partition::valid() const {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) return false;
    if (i && parts[i] > parts[i - 1]) return false;
  }
  return true;
}

std::vector<int> Partition::padded(int k) const {
  std::vector<int> p = parts;
  while (static_cast<int>(p.size()) > k && p.back() == 0) p.pop_back();
  if (static_cast<int>(p.size()) > k) throw std::invalid_argument("partition longer than rank");
  p.resize(k, 0);
  return p;
}

std::string Partition::to_string() const {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s;
}

Partition Partition::parse(const std::string& text) {
  Partition p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad partition entry '" + item + "'");
    p.parts.push_back(v);
  }
  if (!p.valid()) throw std::invalid_argument("partition must be weakly decreasing and non-negative");
  return p;
}

namespace {

Var fam(Family family, int i) {
  switch (family) {
    case Family::Y: return Var::Y(i);
    case Family::z: return Var::z(i);
    case Family::w: return Var::w(i);
    default: throw std::invalid_argument("family has no index");
  }
}

Polynomial diff(Family family, int i, int j) { return Polynomial(fam(family, i)) - Polynomial(fam(family, j)); }

void check_rank(int k) {
  if (k < 1 || k > kMaxIndexed) throw std::out_of_range("rank out of range");
}

mpq_class inverse_factorial(int k) {
  mpz_class f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return mpq_class(mpz_class(1), f);
}

}  // namespace

Polynomial vandermonde(int k, Family family) {
  Polynomial r(1L);
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) r *= diff(family, i, j);
  return r;
}

Polynomial divide_by_vandermonde(const Polynomial& p, int k, Family family) {
  Polynomial r = p;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      if (r.is_zero()) return r;
      auto q = r.divide_exact(diff(family, i, j));
      if (!q) throw std::domain_error("not divisible by the Vandermonde determinant");
      r = std::move(*q);
    }
  return r;
}

Polynomial shifted_vandermonde(int k, const Polynomial& c, Family family) {
  Polynomial r(1L);
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) r *= diff(family, i, j) + c;
  return r;
}

Polynomial apply_sigma(int i, const Polynomial& kappa, const Polynomial& f) {
  if (i < 1 || i + 1 > kMaxIndexed) throw std::out_of_range("sigma index out of range");
  Perm p = perm_transposition(i + 1, i, i + 1);
  Polynomial pf = perm_act(p, f, Family::Y);
  Polynomial d = f - pf;
  if (d.is_zero()) return pf;
  auto q = d.divide_exact(diff(Family::Y, i, i + 1));
  if (!q) throw std::domain_error("divided difference is not exact");
  return pf + kappa * *q;
}

Polynomial apply_word(const SymGroupWord& w, const Polynomial& kappa, const Polynomial& f) {
  Polynomial r = f;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r = apply_sigma(*it, kappa, r);
  return r;
}

std::vector<Polynomial> orbit_images(int k, const Polynomial& kappa, const Polynomial& f) {
  check_rank(k);
  auto perms = all_perms(k);
  std::map<Perm, Polynomial> done;
  done.emplace(perm_identity(k), f);
  // Breadth first by left multiplication: (s_i p)^kappa f = sigma_i (p^kappa f).
  std::vector<Perm> frontier{perm_identity(k)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& p : frontier)
      for (int i = 1; i < k; ++i) {
        Perm q = perm_mul(perm_transposition(k, i, i + 1), p);
        if (done.count(q)) continue;
        done.emplace(q, apply_sigma(i, kappa, done.at(p)));
        next.push_back(q);
      }
    frontier = std::move(next);
  }
  std::vector<Polynomial> out;
  out.reserve(perms.size());
  for (const Perm& p : perms) out.push_back(done.at(p));
  return out;
}

Polynomial symmetrizer_by_words(int k, const Polynomial& kappa, Sign sign, const Polynomial& f) {
  auto perms = all_perms(k);
  auto images = orbit_images(k, kappa, f);
  Polynomial r;
  for (size_t n = 0; n < perms.size(); ++n) {
    if (sign == Sign::minus && perm_sign(perms[n]) < 0) r -= images[n];
    else r += images[n];
  }
  return r.scaled(inverse_factorial(k));
}

namespace {

struct SchurCache {
  std::mutex mu;
  std::map<std::pair<int, std::vector<int>>, Polynomial> table;
};

SchurCache& schur_cache() {
  static SchurCache cache;
  return cache;
}

Polynomial schur_padded(const std::vector<int>& lam, int k) {
  auto key = std::make_pair(k, lam);
  auto& cache = schur_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.table.find(key);
    if (it != cache.table.end()) return it->second;
  }
  // Bialternant: a_{lambda+delta} = det(Y_j^{lambda_i + k - i}).
  Polynomial alt;
  for (const Perm& p : all_perms(k)) {
    Monomial m;
    for (int i = 0; i < k; ++i) m = m * Monomial::of(Var::Y(p[i] + 1), lam[i] + k - 1 - i);
    alt += Polynomial(m, perm_sign(p));
  }
  Polynomial s = divide_by_vandermonde(alt, k);
  std::lock_guard<std::mutex> lock(cache.mu);
  cache.table.emplace(key, s);
  return s;
}

}  // namespace

Polynomial schur(const Partition& lambda, int k) {
  check_rank(k);
  if (!lambda.valid()) throw std::invalid_argument("invalid partition");
  return schur_padded(lambda.padded(k), k);
}

Polynomial antisymmetrize_over_vandermonde(int k, const Polynomial& f) {
  check_rank(k);
  // Alt(Y^alpha) vanishes for repeated exponents; otherwise sorting alpha to
  // lambda + delta gives sign * a_{lambda+delta}, and a_{lambda+delta}/a_delta
  // is the Schur polynomial.
  std::map<std::vector<int>, std::vector<Term>> grouped;
  for (const auto& t : f.terms()) {
    std::vector<int> alpha(k);
    Monomial rest = t.mono;
    for (int i = 0; i < k; ++i) {
      alpha[i] = t.mono[Var::Y(i + 1)];
      rest.exp[Var::Y(i + 1).slot()] = 0;
    }
    rest.deg = static_cast<uint16_t>(rest.deg - [&] {
      int s = 0;
      for (int a : alpha) s += a;
      return s;
    }());
    for (int s = k; s < kMaxIndexed; ++s)
      if (t.mono[Var::Y(s + 1)]) throw std::invalid_argument("polynomial uses Y beyond the rank");
    int inversions = 0;
    bool repeated = false;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        if (alpha[i] == alpha[j]) repeated = true;
        inversions += alpha[i] < alpha[j];
      }
    if (repeated) continue;
    std::sort(alpha.begin(), alpha.end(), std::greater<int>());
    for (int i = 0; i < k; ++i) alpha[i] -= k - 1 - i;
    grouped[alpha].push_back({rest, inversions % 2 ? -t.coeff : t.coeff});
  }
  Polynomial r;
  for (auto& [lam, terms] : grouped) {
    Polynomial c = Polynomial::from_terms(std::move(terms));
    if (!c.is_zero()) r += c * schur_padded(lam, k);
  }
  return r;
}

Polynomial apply_symmetrizer(int k, const Polynomial& kappa, Sign sign, const Polynomial& f) {
  check_rank(k);
  mpq_class c = inverse_factorial(k);
  if (sign == Sign::plus)
    return antisymmetrize_over_vandermonde(k, shifted_vandermonde(k, kappa, Family::Y) * f).scaled(c);
  return (shifted_vandermonde(k, -kappa, Family::Y) * antisymmetrize_over_vandermonde(k, f)).scaled(c);
}

std::string PsiScaled::to_string() const {
  if (psi_power == 0 || poly.is_zero()) return poly.to_string();
  std::string p = "psi^" + std::to_string(psi_power);
  if (poly.is_one()) return p;
  return p + "*(" + poly.to_string() + ")";
}

PsiScaled hall_littlewood_rational(const Partition& lambda, int k, const Polynomial& hbar) {
  check_rank(k);
  if (!lambda.valid()) throw std::invalid_argument("invalid partition");
  auto lam = lambda.padded(k);
  Monomial m;
  for (int i = 0; i < k; ++i) m = m * Monomial::of(Var::Y(i + 1), lam[i]);
  return {-lambda.size(), apply_symmetrizer(k, hbar, Sign::plus, Polynomial(m, 1))};
}

Polynomial deformed_power_sum(int a, int k, const Polynomial& hbar) {
  check_rank(k);
  if (a < 0) throw std::invalid_argument("power must be non-negative");
  // 1 / prod_{j != i}(Y_i - Y_j) = (-1)^{i-1} V_(i) / V with V_(i) the
  // Vandermonde of the remaining variables.
  Polynomial num;
  for (int i = 1; i <= k; ++i) {
    Polynomial t = Polynomial(Monomial::of(Var::Y(i), a), 1);
    for (int j = 1; j <= k; ++j)
      if (j != i) t *= diff(Family::Y, i, j) + hbar;
    for (int p = 1; p <= k; ++p)
      for (int q = p + 1; q <= k; ++q)
        if (p != i && q != i) t *= diff(Family::Y, p, q);
    if (i % 2 == 0) num -= t;
    else num += t;
  }
  return divide_by_vandermonde(num, k);
}

Polynomial elementary_symmetric(int j, int k, Family family) {
  if (j < 0 || j > k) return Polynomial();
  Polynomial r;
  std::vector<bool> pick(k, false);
  std::fill(pick.begin(), pick.begin() + j, true);
  do {
    Monomial m;
    for (int i = 0; i < k; ++i)
      if (pick[i]) m = m * Monomial::of(fam(family, i + 1));
    r += Polynomial(m, 1);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return r;
}

bool is_symmetric(const Polynomial& f, int k, Family family) {
  for (int i = 1; i < k; ++i)
    if (perm_act(perm_transposition(k, i, i + 1), f, family) != f) return false;
  return true;
}

Polynomial symmetric_to_elementary(const Polynomial& f, int k) {
  check_rank(k);
  if (!is_symmetric(f, k)) throw std::invalid_argument("polynomial is not symmetric");
  std::vector<Polynomial> e(k + 1);
  for (int j = 1; j <= k; ++j) e[j] = elementary_symmetric(j, k);
  Polynomial rest = f, out;
  while (!rest.is_zero()) {
    // Leading Y-exponent among terms of maximal Y-degree, with lex order
    // Y1 > Y2 > ...; the matching product of e's has the same leading term.
    int best_deg = -1;
    std::vector<int> best;
    for (const auto& t : rest.terms()) {
      std::vector<int> a(k);
      int d = 0;
      for (int i = 0; i < k; ++i) d += a[i] = t.mono[Var::Y(i + 1)];
      if (d > best_deg || (d == best_deg && a > best)) {
        best_deg = d;
        best = a;
      }
    }
    // Collect the full scalar coefficient of this Y-monomial.
    std::vector<Term> coeff_terms;
    for (const auto& t : rest.terms()) {
      bool same = true;
      for (int i = 0; i < k && same; ++i) same = t.mono[Var::Y(i + 1)] == best[i];
      if (!same) continue;
      Monomial s = t.mono;
      for (int i = 0; i < k; ++i) s.exp[Var::Y(i + 1).slot()] = 0;
      s.deg = static_cast<uint16_t>(s.deg - best_deg);
      coeff_terms.push_back({s, t.coeff});
    }
    Polynomial c = Polynomial::from_terms(std::move(coeff_terms));
    Polynomial prod(1L);
    Monomial placeholder;
    for (int j = 1; j <= k; ++j) {
      int ex = best[j - 1] - (j < k ? best[j] : 0);
      if (ex < 0) throw std::logic_error("symmetric reduction failed");
      if (ex) {
        prod *= e[j].pow(static_cast<unsigned>(ex));
        placeholder = placeholder * Monomial::of(Var::z(j), ex);
      }
    }
    out += c * Polynomial(placeholder, 1);
    rest -= c * prod;
  }
  return out;
}

std::vector<std::vector<mpq_class>> deformed_power_sum_differential(int k) {
  check_rank(k);
  const Var h = Var::hbar();
  std::vector<std::vector<mpq_class>> m(k + 1, std::vector<mpq_class>(k + 1));
  auto linear_coeff = [](const Polynomial& p, Var v) {
    for (const auto& t : p.terms())
      if (t.mono == Monomial::of(v)) return t.coeff;
    return mpq_class(0);
  };
  for (int a = 1; a <= k; ++a) {
    Polynomial in_e = symmetric_to_elementary(deformed_power_sum(a, k, h), k);
    // e_b = (-1)^{b-1} p_b / b + (nonlinear in p).
    for (int b = 1; b <= k; ++b)
      m[a - 1][b - 1] = linear_coeff(in_e, Var::z(b)) * ((b % 2) ? 1 : -1) / b;
    m[a - 1][k] = linear_coeff(in_e, h);
  }
  m[k][k] = 1;
  return m;
}

}  // namespace yc
