#include "commands.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "yangcheck/diffops.hpp"
#include "yangcheck/envelope.hpp"
#include "yangcheck/expression.hpp"
#include "yangcheck/gklo.hpp"
#include "yangcheck/heckerep.hpp"
#include "yangcheck/permops.hpp"
#include "yangcheck/random.hpp"
#include "yangcheck/shuffle.hpp"
#include "yangcheck/weylmat.hpp"

using namespace yc;
using nlohmann::json;

namespace cli {

bool Outcome::failed() const {
  for (const auto& c : checks)
    if (!c.pass) return true;
  return false;
}

namespace {

Polynomial shuffle_kappa(const Options& o) { return parse_polynomial(o.kappa.empty() ? "hbar" : o.kappa); }
RationalFunction perm_kappa(const Options& o) { return parse_rational(o.kappa.empty() ? "kappa" : o.kappa); }

Sign parse_sign(const Options& o) { return o.minus ? Sign::minus : Sign::plus; }

std::vector<int> parse_indices(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

Outcome value(const std::string& text, json doc = json::object()) {
  Outcome o;
  o.text = text;
  doc["result"] = text;
  o.doc = std::move(doc);
  return o;
}

void add(Outcome& o, const std::string& name, bool pass, const std::string& detail = "") {
  o.checks.push_back({name, pass, pass ? "" : detail});
}

template <class Vec>
std::string first_nonzero(const Vec& residuals) {
  for (const auto& r : residuals)
    if (!r.is_zero()) return r.to_string();
  return "";
}

// Checks shared by `u ch-check` and `verify all`.
void envelope_checks(Outcome& o, int N, bool full) {
  std::string tag = " (N=" + std::to_string(N) + ")";
  auto A = quantum_determinant(N);
  bool central = true;
  for (const auto& c : A.coefficients())
    for (int a = 1; a <= N; ++a)
      for (int b = 1; b <= N; ++b) central = central && commutator(c, PBWElement::generator(N, a, b)).is_zero();
  if (full) {
    add(o, "qdet central" + tag, central);
    Polynomial expected(1L);
    for (int i = 1; i <= N; ++i) expected *= Polynomial(Var::u()) - Polynomial(Var::w(i));
    Polynomial hc = hc_projection(A);
    add(o, "hc(A(u)) = prod(u - w_i)" + tag, hc == expected, hc.to_string());
    auto image = A.map([](const PBWElement& c) { return transpose_auto(c, Transpose::minus); });
    auto rhs = A.substitute(Polynomial(-1L), Polynomial(Var::hbar()).scaled(N - 1));
    if (N % 2) rhs = rhs.scaled(Polynomial(-1L));
    add(o, "transposition of A(u)" + tag, image == rhs);
    bool comatrix = true;
    for (const auto& row : comatrix_identity_residual(N))
      for (const auto& e : row) comatrix = comatrix && e.is_zero();
    add(o, "comatrix identity" + tag, comatrix);
  }
  add(o, "A(Omega) = 0" + tag, first_nonzero(cayley_hamilton_residual(N, false)).empty(),
      first_nonzero(cayley_hamilton_residual(N, false)));
  add(o, "A(Omega* - hbar) = 0" + tag, first_nonzero(cayley_hamilton_residual(N, true)).empty(),
      first_nonzero(cayley_hamilton_residual(N, true)));
  if (full) {
    bool hecke = true;
    for (bool dual : {false, true})
      for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b)
          hecke = hecke && hecke_axiom_residual(FreeModuleElement::basis(N, dual, {a, b}), 1).is_zero();
    add(o, "Omega_2 = s Omega_1 s - kappa s" + tag, hecke);
  }
}

void weyl_checks(Outcome& o, int N) {
  for (const auto& c : verify_lr_identities(N).checks)
    add(o, c.name + " (N=" + std::to_string(N) + ")", c.pass, c.first_failure);
}

void gklo_checks(Outcome& o, int N) {
  for (const auto& r : verify_relations(N)) {
    std::string detail;
    if (r.failure) {
      detail = "shift [";
      for (size_t i = 0; i < r.failure->shift.size(); ++i) detail += (i ? "," : "") + std::to_string(r.failure->shift[i]);
      detail += "]: " + r.failure->coefficient;
    }
    add(o, "relation " + r.id + " (N=" + std::to_string(N) + ")", r.pass(), detail);
  }
}

}  // namespace

Outcome shuffle_fo(const Options& o) {
  return value(fo_product(parse_polynomial(o.f), o.k, parse_polynomial(o.g), o.l, shuffle_kappa(o)).to_string());
}

Outcome shuffle_hecke(const Options& o) {
  return value(hecke_product(parse_polynomial(o.f), o.k, parse_polynomial(o.g), o.l, shuffle_kappa(o)).to_string());
}

Outcome shuffle_compare(const Options& o) {
  auto c = compare_products(parse_polynomial(o.f), o.k, parse_polynomial(o.g), o.l, shuffle_kappa(o));
  Outcome out;
  std::string ratio = c.ratio ? c.ratio->get_str() : "none";
  out.text = "fo: " + c.fo.to_string() + "\nhecke: " + c.hecke.to_string() + "\nratio: " + ratio +
             "\nbinomial: " + c.binomial.get_str();
  out.doc = {{"k", o.k}, {"l", o.l}, {"fo", c.fo.to_string()}, {"hecke", c.hecke.to_string()}, {"ratio", ratio},
             {"binomial", c.binomial.get_str()}};
  add(out, "fo = C(k+l,k) * hecke", c.pass, "ratio " + ratio);
  return out;
}

Outcome hecke_sigma(const Options& o) {
  return value(apply_sigma(o.i, shuffle_kappa(o), parse_polynomial(o.f)).to_string());
}

Outcome hecke_sym(const Options& o) {
  return value(apply_symmetrizer(o.k, shuffle_kappa(o), parse_sign(o), parse_polynomial(o.f)).to_string());
}

Outcome hecke_hl(const Options& o) {
  return value(hall_littlewood_rational(Partition::parse(o.lambda), o.k).to_string());
}

Outcome hecke_schur(const Options& o) { return value(schur(Partition::parse(o.lambda), o.k).to_string()); }

Outcome hecke_psum(const Options& o) { return value(deformed_power_sum(o.a, o.k).to_string()); }

Outcome perm_qybe(const Options& o) {
  RationalFunction kappa = perm_kappa(o);
  RationalFunction x1 = Var::xi(1), x2 = Var::xi(2), x3 = Var::xi(3);
  auto lhs = su_r(1, 2, x1 - x2, kappa, 3) * su_r(1, 3, x1 - x3, kappa, 3) * su_r(2, 3, x2 - x3, kappa, 3);
  auto rhs = su_r(2, 3, x2 - x3, kappa, 3) * su_r(1, 3, x1 - x3, kappa, 3) * su_r(1, 2, x1 - x2, kappa, 3);
  Outcome out;
  add(out, "R12 R13 R23 = R23 R13 R12 (k=3)", lhs == rhs, (lhs - rhs).to_string());
  return out;
}

Outcome perm_sym(const Options& o) {
  auto product = su_symmetrizer(o.k, perm_kappa(o), parse_sign(o));
  auto closed = su_symmetrizer_closed(o.k, perm_kappa(o), parse_sign(o));
  Outcome out = value(product.to_string());
  add(out, "product = closed form (k=" + std::to_string(o.k) + (o.minus ? ", minus)" : ", plus)"), product == closed);
  return out;
}

Outcome perm_idem(const Options& o) {
  auto e = hecke_idempotent_via_r(o.k, parse_sign(o));
  Outcome out = value(e.to_string());
  add(out, "ordered product = group idempotent (k=" + std::to_string(o.k) + (o.minus ? ", minus)" : ", plus)"), e == group_idempotent(o.k, parse_sign(o)));
  return out;
}

Outcome u_qminor(const Options& o) {
  auto rows = parse_indices(o.rows), cols = parse_indices(o.cols);
  auto m = quantum_minor(o.N, rows, cols);
  Outcome out = value(m.to_string());
  add(out, "row form = column form", m == quantum_minor_column_form(o.N, rows, cols));
  return out;
}

Outcome u_qdet(const Options& o) {
  auto A = quantum_determinant(o.N);
  json coeffs = json::array();
  for (int i = 0; i <= o.N; ++i) coeffs.push_back(A.coeff(o.N - i).to_string());
  return value(A.to_string(), {{"N", o.N}, {"A", coeffs}});
}

Outcome u_hc(const Options& o) {
  if (o.x.empty()) return value(hc_projection(quantum_determinant(o.N)).to_string());
  return value(hc_projection(parse_pbw(o.x, o.N)).to_string());
}

Outcome u_ch_check(const Options& o) {
  Outcome out;
  envelope_checks(out, o.N, false);
  return out;
}

Outcome weyl_verify(const Options& o) {
  Outcome out;
  weyl_checks(out, o.N);
  return out;
}

Outcome dop_mul(const Options& o) {
  auto a = parse_difference_operator(o.f, o.N), b = parse_difference_operator(o.g, o.N);
  return value(yc::dop_mul(a, b).to_string());
}

static CurrentKind kind_of(const Options& o) {
  auto k = parse_current_kind(o.kind);
  if (!k) throw std::invalid_argument("unknown current kind: " + o.kind + " (x+, x-, d1, d2, h)");
  return *k;
}

Outcome gklo_image(const Options& o) { return value(yc::gklo_image(kind_of(o), o.N).value.to_string()); }

Outcome gklo_verify(const Options& o) {
  Outcome out;
  gklo_checks(out, o.N);
  return out;
}

Outcome gklo_monopole(const Options& o) {
  auto m = monopole(o.k, o.N);
  Outcome out = value(m.computed.to_string(), {{"predicted", m.predicted.to_string()}});
  add(out, "computed = predicted (N=" + std::to_string(o.N) + ", k=" + std::to_string(o.k) + ")", m.pass(),
      m.predicted.to_string());
  return out;
}

Outcome gklo_mode(const Options& o) { return value(mode(yc::gklo_image(kind_of(o), o.N), o.r).to_string()); }

Outcome verify_all(const Options& o) {
  Outcome out;
  Options p = o;
  p.kappa = "";
  auto merge = [&](const Outcome& x) { out.checks.insert(out.checks.end(), x.checks.begin(), x.checks.end()); };
  merge(perm_qybe(p));
  for (int k = 2; k <= 3; ++k)
    for (bool minus : {false, true}) {
      p.k = k;
      p.minus = minus;
      merge(perm_sym(p));
    }
  for (int k = 2; k <= 4; ++k)
    for (bool minus : {false, true}) {
      p.k = k;
      p.minus = minus;
      merge(perm_idem(p));
    }

  std::mt19937_64 rng(o.seed);
  Polynomial kappa(Var::kappa());
  bool hecke = true;
  for (int k = 2; k <= 3; ++k)
    for (int it = 0; it < 5; ++it) {
      std::vector<Var> ys;
      for (int j = 1; j <= k; ++j) ys.push_back(Var::Y(j));
      Polynomial f = random_polynomial(rng, ys, o.max_degree, 4);
      for (int i = 1; i < k; ++i) {
        Polynomial sf = apply_sigma(i, kappa, f);
        hecke = hecke && apply_sigma(i, kappa, sf) == f;
        hecke = hecke && Polynomial(Var::Y(i + 1)) * f == apply_sigma(i, kappa, Polynomial(Var::Y(i)) * sf) - kappa * sf;
      }
    }
  add(out, "degenerate affine Hecke relations (seed " + std::to_string(o.seed) + ")", hecke);

  bool products = true;
  for (int k = 1; k <= 2; ++k)
    for (int l = 1; l + k <= 3; ++l)
      for (const auto& lf : partitions_up_to(2, k))
        for (const auto& lg : partitions_up_to(2, l))
          products = products && compare_products(monomial_symmetric(lf, k), k, monomial_symmetric(lg, l), l, Polynomial(Var::hbar())).pass;
  add(out, "fo = C(k+l,k) * hecke (k+l <= 3)", products);
  for (bool plus : {true, false}) {
    auto r = verify_current_relation(o.R, plus);
    add(out, std::string("shuffle current relation ") + (plus ? "+" : "-") + " (R=" + std::to_string(o.R) + ")", r.pass());
  }

  if (o.N <= 3) {
    envelope_checks(out, o.N, true);
    weyl_checks(out, o.N);
  }
  gklo_checks(out, o.N);
  for (int k = 1; k <= o.N; ++k) {
    Options m = o;
    m.k = k;
    merge(gklo_monopole(m));
  }
  return out;
}

}  // namespace cli
