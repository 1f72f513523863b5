#include "yangcheck/gklo.hpp"

#include <map>
#include <stdexcept>

#include "yangcheck/heckerep.hpp"

namespace yc {

namespace {

using D = DifferenceOperator;

RationalFunction P(int i, int N) {
  RationalFunction r(1L);
  for (int j = 1; j <= N; ++j)
    if (j != i) r /= RationalFunction(Polynomial(Var::w(i)) - Polynomial(Var::w(j)));
  return r;
}

Polynomial hbar() { return Polynomial(Var::hbar()); }

void check_gklo_rank(int N, int max_rank) {
  if (N < 1 || N > max_rank) throw std::invalid_argument("rank out of range: " + std::to_string(N));
}

}  // namespace

std::string to_string(CurrentKind kind) {
  switch (kind) {
    case CurrentKind::x_plus: return "x+";
    case CurrentKind::x_minus: return "x-";
    case CurrentKind::d1: return "d1";
    case CurrentKind::d2: return "d2";
    case CurrentKind::h: return "h";
  }
  return "?";
}

std::optional<CurrentKind> parse_current_kind(const std::string& name) {
  for (auto k : {CurrentKind::x_plus, CurrentKind::x_minus, CurrentKind::d1, CurrentKind::d2, CurrentKind::h})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

Current gklo_image(CurrentKind kind, int N, Var spectral) {
  if (N < 1) throw std::invalid_argument("rank must be at least 1");
  Polynomial t(spectral);
  D value(N);
  auto d1 = [&] {
    Polynomial p(1L);
    for (int i = 1; i <= N; ++i) p *= t - Polynomial(Var::w(i));
    return RationalFunction(p);
  };
  auto d2 = [&] {
    std::vector<Polynomial> den;
    for (int i = 1; i <= N; ++i) den.push_back(t - Polynomial(Var::w(i)) - hbar());
    return RationalFunction::with_factors(Polynomial(1L), den);
  };
  switch (kind) {
    case CurrentKind::x_plus:
      for (int i = 1; i <= N; ++i)
        value = value + D::shift(N, i, -1).scaled(-P(i, N) / RationalFunction(t - Polynomial(Var::w(i))));
      break;
    case CurrentKind::x_minus:
      for (int i = 1; i <= N; ++i)
        value = value + D::shift(N, i, 1).scaled(P(i, N) / RationalFunction(t - Polynomial(Var::w(i)) - hbar()));
      break;
    case CurrentKind::d1: value = D::coefficient(N, d1()); break;
    case CurrentKind::d2: value = D::coefficient(N, d2()); break;
    case CurrentKind::h: value = D::coefficient(N, d1().inverse() * d2()); break;
  }
  return Current{kind, N, spectral, value};
}

namespace {

RelationReport check(const std::string& id, const std::string& statement, const D& residual) {
  RelationReport r{id, statement, std::nullopt};
  if (!residual.is_zero()) {
    const auto& [m, c] = *residual.terms().begin();
    r.failure = Witness{m, c.to_string()};
  }
  return r;
}

}  // namespace

std::vector<RelationReport> verify_relations(int N, int max_rank) {
  check_gklo_rank(N, max_rank);
  Var U = Var::u(), V = Var::v();
  auto img = [&](CurrentKind k, Var s) { return gklo_image(k, N, s).value; };
  D xpu = img(CurrentKind::x_plus, U), xpv = img(CurrentKind::x_plus, V);
  D xmu = img(CurrentKind::x_minus, U), xmv = img(CurrentKind::x_minus, V);
  D d1u = img(CurrentKind::d1, U), d2u = img(CurrentKind::d2, U), d2v = img(CurrentKind::d2, V);
  D hu = img(CurrentKind::h, U), hv = img(CurrentKind::h, V);
  RationalFunction uv = RationalFunction(Polynomial(U) - Polynomial(V));
  RationalFunction h(hbar());

  std::vector<RelationReport> out;
  out.push_back(check("2.1", "[d1(u), d2(v)] = 0", dop_commutator(d1u, d2v)));
  out.push_back(check("2.2(+)", "(u - v)[-x+(u), x-(v)] = -hbar (h(v) - h(u))",
                      dop_commutator(-xpu, xmv).scaled(uv) + (hv - hu).scaled(h)));
  out.push_back(check("2.2", "(u - v)[x+(u), x-(v)] = hbar (h(v) - h(u))",
                      dop_commutator(xpu, xmv).scaled(uv) - (hv - hu).scaled(h)));
  for (int j = 1; j <= 2; ++j) {
    const D& dj = j == 1 ? d1u : d2u;
    RationalFunction sign(j == 1 ? 1L : -1L);
    std::string js = std::to_string(j);
    out.push_back(check("2.3(j=" + js + ")", "(u - v)[d" + js + "(u), x+(v)] = hbar (d_j1 - d_j2) d" + js + "(u) (x+(u) - x+(v))",
                        dop_commutator(dj, xpv).scaled(uv) - (dj * (xpu - xpv)).scaled(h * sign)));
  }
  for (int j = 1; j <= 2; ++j) {
    const D& dj = j == 1 ? d1u : d2u;
    RationalFunction sign(j == 1 ? -1L : 1L);
    std::string js = std::to_string(j);
    out.push_back(check("2.4(j=" + js + ")", "(u - v)[d" + js + "(u), x-(v)] = hbar (d_j2 - d_j1) (x-(u) - x-(v)) d" + js + "(u)",
                        dop_commutator(dj, xmv).scaled(uv) - ((xmu - xmv) * dj).scaled(h * sign)));
  }
  D dp = xpu - xpv, dm = xmu - xmv;
  out.push_back(check("2.5(+)", "(u - v)[x+(u), x+(v)] = -hbar (x+(u) - x+(v))^2",
                      dop_commutator(xpu, xpv).scaled(uv) + (dp * dp).scaled(h)));
  out.push_back(check("2.5(-)", "(u - v)[x-(u), x-(v)] = hbar (x-(u) - x-(v))^2",
                      dop_commutator(xmu, xmv).scaled(uv) - (dm * dm).scaled(h)));
  return out;
}

RationalFunction laurent_coefficient(const RationalFunction& f, Var t, int r) {
  // f = p(t)/q(t); with s = 1/t, f = s^{dq - dp} p~(s)/q~(s), p~, q~ reversed.
  std::vector<Polynomial> p = f.numerator().coefficients_in(t);
  std::vector<Polynomial> q = f.denominator().coefficients_in(t);
  int dp = static_cast<int>(p.size()) - 1, dq = static_cast<int>(q.size()) - 1;
  if (dp < 0) return RationalFunction();
  // Want coefficient of s^r in s^{dq-dp} * series, i.e. series index n = r - (dq - dp).
  int n = r - (dq - dp);
  if (n < 0) return RationalFunction();
  auto rev = [](const std::vector<Polynomial>& c, int idx) {
    int d = static_cast<int>(c.size()) - 1;
    return idx <= d ? RationalFunction(c[d - idx]) : RationalFunction();
  };
  // series c_m with sum_j q~_j c_{m-j} = p~_m.
  RationalFunction lead = rev(q, 0);
  std::vector<RationalFunction> c(n + 1);
  for (int m = 0; m <= n; ++m) {
    RationalFunction acc = rev(p, m);
    for (int j = 1; j <= std::min(m, dq); ++j) acc -= rev(q, j) * c[m - j];
    c[m] = acc / lead;
  }
  return c[n];
}

DifferenceOperator mode(const Current& cur, int r) {
  D out(cur.N);
  for (const auto& [m, c] : cur.value.terms()) out.add(m, laurent_coefficient(c, cur.spectral, r));
  return out;
}

DifferenceOperator shuffle_to_diffop(const Polynomial& f, int k, int N) {
  if (k < 1 || N < 1) throw std::invalid_argument("k and N must be positive");
  if (!is_symmetric(f, k)) throw std::invalid_argument("shuffle element must be symmetric in Y1..Yk");
  D out(N);
  std::vector<int> tuple(k, 1);
  while (true) {
    // w after the shifts U_{i_1}^-1 ... U_{i_{a-1}}^-1.
    std::vector<int> counts(N, 0);
    RationalFunction coeff(1L);
    Substitution eval;
    for (int a = 0; a < k; ++a) {
      int i = tuple[a];
      Substitution sh;
      for (int j = 0; j < N; ++j)
        if (counts[j]) sh.push_back({Var::w(j + 1), hbar().scaled(-counts[j])});
      RationalFunction Pi = P(i, N);
      coeff *= sh.empty() ? Pi : Pi.shift(sh);
      eval.push_back({Var::Y(a + 1), Polynomial(Var::w(i)) - hbar().scaled(counts[i - 1])});
      ++counts[i - 1];
    }
    RationalFunction value = coeff * RationalFunction(f.substitute(eval));
    D::Shift m(N);
    for (int j = 0; j < N; ++j) m[j] = -counts[j];
    out.add(m, value);
    int pos = k - 1;
    while (pos >= 0 && tuple[pos] == N) tuple[pos--] = 1;
    if (pos < 0) break;
    ++tuple[pos];
  }
  return out;
}

DifferenceOperator shuffle_to_diffop_by_products(const Polynomial& f, int k, int N) {
  if (!is_symmetric(f, k)) throw std::invalid_argument("shuffle element must be symmetric in Y1..Yk");
  D out(N);
  for (const auto& term : f.terms()) {
    std::vector<int> tuple(k, 1);
    while (true) {
      Monomial rest = term.mono;
      for (int a = 1; a <= k; ++a) {
        rest.deg = static_cast<uint16_t>(rest.deg - rest.exp[Var::Y(a).slot()]);
        rest.exp[Var::Y(a).slot()] = 0;
      }
      D prod = D::coefficient(N, RationalFunction(Polynomial(rest, term.coeff)));
      for (int a = 0; a < k; ++a) {
        int i = tuple[a];
        Polynomial wp = Polynomial(Var::w(i)).pow(term.mono[Var::Y(a + 1)]);
        prod = prod * D::coefficient(N, P(i, N) * RationalFunction(wp)) * D::shift(N, i, -1);
      }
      out = out + prod;
      int pos = k - 1;
      while (pos >= 0 && tuple[pos] == N) tuple[pos--] = 1;
      if (pos < 0) break;
      ++tuple[pos];
    }
  }
  return out;
}

int gklo_shuffle_sign(int k) { return k % 2 ? -1 : 1; }

MonopoleReport monopole(int k, int N, int max_rank) {
  check_gklo_rank(N, max_rank);
  if (k < 1) throw std::invalid_argument("k must be positive");
  MonopoleReport rep;
  rep.N = N;
  rep.k = k;
  Polynomial rep_poly(1L);
  mpz_class fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= k; ++j)
      if (i != j) rep_poly *= Polynomial(Var::Y(i)) - Polynomial(Var::Y(j)) - hbar();
  rep.representative = rep_poly.scaled(mpq_class(mpz_class(1), fact));
  rep.computed = k > N ? D(N) : shuffle_to_diffop(rep.representative, k, N);
  rep.predicted = D(N);
  for (unsigned mask = 0; mask < (1u << N); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    RationalFunction c(1L);
    D::Shift m(N, 0);
    for (int i = 0; i < N; ++i) {
      if (!(mask >> i & 1)) continue;
      m[i] = -1;
      for (int j = 0; j < N; ++j)
        if (!(mask >> j & 1)) c /= RationalFunction(Polynomial(Var::w(i + 1)) - Polynomial(Var::w(j + 1)));
    }
    rep.predicted.add(m, c);
  }
  return rep;
}

}  // namespace yc
