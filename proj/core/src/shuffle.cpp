#include "yangcheck/shuffle.hpp"

#include <algorithm>
#include <stdexcept>

namespace yc {

void require_symmetric_component(const Polynomial& f, int k) {
  if (k < 0 || k > kMaxIndexed) throw std::out_of_range("degree out of range");
  for (int j = k + 1; j <= kMaxIndexed; ++j)
    if (f.contains(Var::Y(j))) throw std::invalid_argument("component of degree " + std::to_string(k) + " uses Y" + std::to_string(j));
  if (k >= 2 && !is_symmetric(f, k)) throw std::invalid_argument("component is not symmetric");
}

ShuffleElement ShuffleElement::single(int k, const Polynomial& f) {
  ShuffleElement e;
  e.add(k, f);
  return e;
}

Polynomial ShuffleElement::component(int k) const {
  auto it = comp_.find(k);
  return it == comp_.end() ? Polynomial() : it->second;
}

void ShuffleElement::add(int k, const Polynomial& f) {
  require_symmetric_component(f, k);
  Polynomial& c = comp_[k];
  c += f;
  if (c.is_zero()) comp_.erase(k);
}

ShuffleElement operator+(const ShuffleElement& a, const ShuffleElement& b) {
  ShuffleElement r = a;
  for (const auto& [k, f] : b.comp_) r.add(k, f);
  return r;
}

ShuffleElement operator-(const ShuffleElement& a, const ShuffleElement& b) {
  ShuffleElement r = a;
  for (const auto& [k, f] : b.comp_) r.add(k, -f);
  return r;
}

Polynomial shift_y(const Polynomial& g, int offset) {
  if (offset == 0) return g;
  auto m = identity_slot_map();
  for (int i = 1; i <= kMaxIndexed; ++i) {
    if (!g.contains(Var::Y(i))) continue;
    if (i + offset > kMaxIndexed) throw std::out_of_range("too many Y variables");
    m[Var::Y(i).slot()] = static_cast<uint8_t>(Var::Y(i + offset).slot());
  }
  return g.rename(m);
}

namespace {

// Shuffle permutations: images of 1..k increasing, images of k+1..k+l
// increasing.
std::vector<Perm> shuffles(int k, int l) {
  std::vector<Perm> out;
  std::vector<bool> first(k + l, false);
  std::fill(first.begin(), first.begin() + k, true);
  do {
    Perm p(k + l);
    int a = 0, b = k;
    for (int pos = 0; pos < k + l; ++pos) {
      if (first[pos]) p[a++] = pos;
      else p[b++] = pos;
    }
    out.push_back(p);
  } while (std::prev_permutation(first.begin(), first.end()));
  return out;
}

Polynomial block_vandermonde(int from, int to) {
  Polynomial r(1L);
  for (int i = from; i <= to; ++i)
    for (int j = i + 1; j <= to; ++j) r *= Polynomial(Var::Y(i)) - Polynomial(Var::Y(j));
  return r;
}

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

Polynomial fo_product(const Polynomial& f, int k, const Polynomial& g, int l, const Polynomial& kappa) {
  require_symmetric_component(f, k);
  require_symmetric_component(g, l);
  int n = k + l;
  if (n > kMaxIndexed) throw std::out_of_range("total degree exceeds variable capacity");
  // With D the cross product of (Y_i - Y_j) and V_k, V_l the block
  // Vandermondes, D V_k V_l = V_{k+l}.  H = F V_k V_l is antisymmetric under
  // S_k x S_l, so Sym(F/D) = Alt(H)/V_{k+l} = k! l! sum_cosets sgn(t) t(H) / V_{k+l}.
  Polynomial h = f * shift_y(g, k) * block_vandermonde(1, k) * block_vandermonde(k + 1, n);
  for (int i = 1; i <= k; ++i)
    for (int j = k + 1; j <= n; ++j) h *= Polynomial(Var::Y(i)) - Polynomial(Var::Y(j)) + kappa;
  Polynomial alt;
  for (const Perm& t : shuffles(k, l)) {
    Polynomial img = perm_act(t, h, Family::Y);
    if (perm_sign(t) < 0) alt -= img;
    else alt += img;
  }
  return divide_by_vandermonde(alt, n);
}

Polynomial hecke_product(const Polynomial& f, int k, const Polynomial& g, int l, const Polynomial& kappa) {
  require_symmetric_component(f, k);
  require_symmetric_component(g, l);
  if (k + l == 0) return f * g;
  return apply_symmetrizer(k + l, kappa, Sign::plus, f * shift_y(g, k));
}

ShuffleElement shuffle_mul(const ShuffleElement& a, const ShuffleElement& b, const Polynomial& kappa, ShuffleKind kind) {
  ShuffleElement r;
  for (const auto& [k, f] : a.components())
    for (const auto& [l, g] : b.components())
      r.add(k + l, kind == ShuffleKind::fo ? fo_product(f, k, g, l, kappa) : hecke_product(f, k, g, l, kappa));
  return r;
}

ProductComparison compare_products(const Polynomial& f, int k, const Polynomial& g, int l, const Polynomial& kappa) {
  ProductComparison c;
  c.k = k;
  c.l = l;
  c.fo = fo_product(f, k, g, l, kappa);
  c.hecke = hecke_product(f, k, g, l, kappa);
  c.binomial = binomial(k + l, k);
  if (c.hecke.is_zero()) {
    if (c.fo.is_zero()) c.pass = true;
    return c;
  }
  mpq_class r = c.fo.is_zero() ? mpq_class(0) : c.fo.leading().coeff / c.hecke.leading().coeff;
  if (c.hecke.scaled(r) == c.fo) c.ratio = r;
  c.pass = c.ratio && *c.ratio == mpq_class(c.binomial);
  return c;
}

bool truncate_check(const ShuffleElement& x, int N) {
  for (const auto& [k, f] : x.components())
    for (int i = 1; i <= k; ++i)
      if (f.degree_in(Var::Y(i)) >= N) return false;
  return true;
}

Polynomial monomial_symmetric(const Partition& lambda, int k) {
  auto lam = lambda.padded(k);
  std::sort(lam.begin(), lam.end());
  Polynomial r;
  do {
    Monomial m;
    for (int i = 0; i < k; ++i) m = m * Monomial::of(Var::Y(i + 1), lam[i]);
    r += Polynomial(m, 1);
  } while (std::next_permutation(lam.begin(), lam.end()));
  return r;
}

std::vector<Partition> partitions_up_to(int max_size, int k) {
  std::vector<Partition> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    out.push_back(Partition{cur});
    if (static_cast<int>(cur.size()) == k) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, max_size, max_size);
  return out;
}

CurrentRelationReport verify_current_relation(int R, bool plus, std::optional<Polynomial> hbar_value) {
  if (R < 0) throw std::invalid_argument("truncation order must be non-negative");
  CurrentRelationReport rep;
  rep.R = R;
  rep.plus = plus;
  Polynomial hbar = hbar_value ? *hbar_value : Polynomial(Var::hbar());
  Polynomial kappa = plus ? hbar : -hbar;
  Polynomial sign_hbar = plus ? -hbar : hbar;
  auto x = [](int i) { return i <= 0 ? Polynomial() : Polynomial(Monomial::of(Var::Y(1), i - 1), 1); };
  std::map<std::pair<int, int>, Polynomial> prod;
  auto mul = [&](int i, int j) -> Polynomial {
    if (i <= 0 || j <= 0) return Polynomial();
    auto key = std::make_pair(i, j);
    auto it = prod.find(key);
    if (it != prod.end()) return it->second;
    Polynomial p = fo_product(x(i), 1, x(j), 1, kappa);
    prod.emplace(key, p);
    return p;
  };
  auto comm = [&](int i, int j) { return mul(i, j) - mul(j, i); };
  for (int total = 0; total <= R; ++total)
    for (int a = 0; a <= total; ++a) {
      int b = total - a;
      Polynomial lhs = comm(a + 1, b) - comm(a, b + 1);
      Polynomial sq = -(mul(a, b) + mul(b, a));
      if (b == 0)
        for (int i = 1; i < a; ++i) sq += mul(i, a - i);
      if (a == 0)
        for (int i = 1; i < b; ++i) sq += mul(i, b - i);
      ++rep.coefficients_checked;
      if (lhs != sign_hbar * sq) {
        rep.first_failure = std::make_pair(a, b);
        return rep;
      }
    }
  return rep;
}

}  // namespace yc
