#include "yangcheck/rational_function.hpp"

#include <algorithm>
#include <stdexcept>

namespace yc {

namespace {

bool is_linear(const Polynomial& p) { return p.total_degree() == 1; }

void sort_factors(std::vector<Factor>& fs) {
  std::sort(fs.begin(), fs.end(),
            [](const Factor& a, const Factor& b) { return compare(a.poly, b.poly) > 0; });
}

// Nontrivial common divisor of two normalised, nonconstant polynomials, or 1.
Polynomial common_part(const Polynomial& a, const Polynomial& b) {
  bool la = is_linear(a), lb = is_linear(b);
  if (la && lb) return Polynomial(1L);
  if (la) return b.divide_exact(a) ? a : Polynomial(1L);
  if (lb) return a.divide_exact(b) ? b : Polynomial(1L);
  return gcd(a, b);
}

// Inserts p^e (p normalised, nonconstant) into a pairwise coprime list.
void insert_coprime(std::vector<Factor>& base, const Polynomial& p, int e) {
  if (p.is_constant()) return;
  for (size_t i = 0; i < base.size(); ++i) {
    const Polynomial& b = base[i].poly;
    if (b == p) {
      base[i].exp += e;
      return;
    }
    Polynomial g = common_part(b, p);
    if (g.is_constant()) continue;
    Factor old = base[i];
    base.erase(base.begin() + static_cast<long>(i));
    Polynomial b_rest = *old.poly.divide_exact(g);
    Polynomial p_rest = *p.divide_exact(g);
    insert_coprime(base, g, old.exp + e);
    insert_coprime(base, b_rest, old.exp);
    insert_coprime(base, p_rest, e);
    return;
  }
  base.push_back({p, e});
}

// Splits q^e into a scalar and normalised pieces appended to raw.
void split_raw(const Polynomial& q, int e, mpq_class& scale, std::vector<Factor>& raw) {
  if (q.is_zero()) throw std::domain_error("division by zero");
  auto [s, prim] = primitive_split(q);
  mpq_class se = 1;
  for (int k = 0; k < e; ++k) se *= s;
  scale *= se;
  Monomial mc = prim.monomial_content();
  if (!mc.is_one()) {
    for (int slot = 0; slot < kNumSlots; ++slot)
      if (mc.exp[slot]) raw.push_back({Polynomial(Var::from_slot(slot)), mc.exp[slot] * e});
    prim = prim.divide_monomial(mc);
  }
  if (!prim.is_constant()) raw.push_back({prim, e});
}

std::vector<Factor> refine(const std::vector<Factor>& raw) {
  std::vector<Factor> base;
  bool all_linear = std::all_of(raw.begin(), raw.end(), [](const Factor& f) { return is_linear(f.poly); });
  if (all_linear) {
    for (const auto& f : raw) {
      auto it = std::find_if(base.begin(), base.end(), [&](const Factor& b) { return b.poly == f.poly; });
      if (it == base.end()) base.push_back(f);
      else it->exp += f.exp;
    }
  } else {
    for (const auto& f : raw) insert_coprime(base, f.poly, f.exp);
  }
  sort_factors(base);
  return base;
}

// Removes common factors of num and den.  Only factors listed in `check`
// (indices into den) are examined; nullptr means all.
void cancel(Polynomial& num, std::vector<Factor>& den, const std::vector<bool>* check = nullptr) {
  if (num.is_zero()) {
    den.clear();
    return;
  }
  bool restart = true;
  while (restart) {
    restart = false;
    for (size_t i = 0; i < den.size(); ++i) {
      if (check && i < check->size() && !(*check)[i]) continue;
      Factor& f = den[i];
      if (is_linear(f.poly)) {
        while (f.exp > 0) {
          auto q = num.divide_exact(f.poly);
          if (!q) break;
          num = std::move(*q);
          --f.exp;
        }
        continue;
      }
      if (f.exp == 0) continue;
      Polynomial g = gcd(num, f.poly);
      if (g.is_constant()) continue;
      num = *num.divide_exact(g);
      Factor old = f;
      den.erase(den.begin() + static_cast<long>(i));
      Polynomial rest = *old.poly.divide_exact(g);
      std::vector<Factor> pieces = den;
      insert_coprime(pieces, g, old.exp - 1);
      insert_coprime(pieces, rest, old.exp);
      den = std::move(pieces);
      check = nullptr;
      restart = true;
      break;
    }
  }
  den.erase(std::remove_if(den.begin(), den.end(), [](const Factor& f) { return f.exp <= 0; }), den.end());
  sort_factors(den);
}

Polynomial expand(const std::vector<Factor>& fs) {
  Polynomial r(1L);
  for (const auto& f : fs) r *= f.poly.pow(static_cast<unsigned>(f.exp));
  return r;
}

// Expresses two coprime lists over a common coprime base.
struct CommonBase {
  std::vector<Polynomial> base;
  std::vector<int> ea, eb;
};

CommonBase common_base(const std::vector<Factor>& A, const std::vector<Factor>& B) {
  CommonBase cb;
  bool all_linear = std::all_of(A.begin(), A.end(), [](const Factor& f) { return is_linear(f.poly); }) &&
                    std::all_of(B.begin(), B.end(), [](const Factor& f) { return is_linear(f.poly); });
  if (all_linear) {
    size_t i = 0, j = 0;
    while (i < A.size() || j < B.size()) {
      int c = i == A.size() ? -1 : j == B.size() ? 1 : compare(A[i].poly, B[j].poly);
      if (c > 0) {
        cb.base.push_back(A[i].poly);
        cb.ea.push_back(A[i++].exp);
        cb.eb.push_back(0);
      } else if (c < 0) {
        cb.base.push_back(B[j].poly);
        cb.ea.push_back(0);
        cb.eb.push_back(B[j++].exp);
      } else {
        cb.base.push_back(A[i].poly);
        cb.ea.push_back(A[i++].exp);
        cb.eb.push_back(B[j++].exp);
      }
    }
    return cb;
  }
  std::vector<Factor> base;
  for (const auto& f : A) insert_coprime(base, f.poly, 1);
  for (const auto& f : B) insert_coprime(base, f.poly, 1);
  sort_factors(base);
  auto multiplicity = [](Polynomial p, const Polynomial& b) {
    int m = 0;
    while (!p.is_constant()) {
      auto q = p.divide_exact(b);
      if (!q) break;
      p = std::move(*q);
      ++m;
    }
    return m;
  };
  for (const auto& b : base) {
    int ea = 0, eb = 0;
    for (const auto& f : A) ea += f.exp * multiplicity(f.poly, b.poly);
    for (const auto& f : B) eb += f.exp * multiplicity(f.poly, b.poly);
    cb.base.push_back(b.poly);
    cb.ea.push_back(ea);
    cb.eb.push_back(eb);
  }
  return cb;
}

RationalFunction add_impl(const RationalFunction& a, const RationalFunction& b, bool subtract);

}  // namespace

RationalFunction RationalFunction::with_factors(const Polynomial& num, const std::vector<Polynomial>& den_factors) {
  mpq_class scale = 1;
  std::vector<Factor> raw;
  for (const auto& f : den_factors) split_raw(f, 1, scale, raw);
  RationalFunction r;
  r.num_ = num.scaled(1 / scale);
  r.den_ = refine(raw);
  cancel(r.num_, r.den_);
  return r;
}

RationalFunction RationalFunction::fraction(const Polynomial& num, const Polynomial& den) {
  return with_factors(num, {den});
}

Polynomial RationalFunction::denominator() const { return expand(den_); }

bool RationalFunction::contains(Var v) const {
  if (num_.contains(v)) return true;
  return std::any_of(den_.begin(), den_.end(), [&](const Factor& f) { return f.poly.contains(v); });
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  RationalFunction r;
  Polynomial na = a.num_, nb = b.num_;
  std::vector<Factor> da = a.den_, db = b.den_;
  if (!db.empty()) cancel(na, db);
  if (!da.empty()) cancel(nb, da);
  r.num_ = na * nb;
  if (da.empty()) {
    r.den_ = std::move(db);
  } else if (db.empty()) {
    r.den_ = std::move(da);
  } else {
    CommonBase cb = common_base(da, db);
    for (size_t i = 0; i < cb.base.size(); ++i)
      if (cb.ea[i] + cb.eb[i] > 0) r.den_.push_back({cb.base[i], cb.ea[i] + cb.eb[i]});
    sort_factors(r.den_);
  }
  return r;
}

namespace {

RationalFunction add_impl(const RationalFunction& a, const RationalFunction& b, bool subtract) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return subtract ? -b : b;
  if (a.is_polynomial() && b.is_polynomial())
    return RationalFunction(subtract ? a.numerator() - b.numerator() : a.numerator() + b.numerator());
  CommonBase cb = common_base(a.denominator_factors(), b.denominator_factors());
  Polynomial ma(1L), mb(1L);
  std::vector<Factor> den;
  std::vector<bool> check;
  for (size_t i = 0; i < cb.base.size(); ++i) {
    int e = std::max(cb.ea[i], cb.eb[i]);
    if (e == 0) continue;
    if (e > cb.ea[i]) ma *= cb.base[i].pow(static_cast<unsigned>(e - cb.ea[i]));
    if (e > cb.eb[i]) mb *= cb.base[i].pow(static_cast<unsigned>(e - cb.eb[i]));
    den.push_back({cb.base[i], e});
    // A factor can only cancel when both summands carry it to the same power.
    check.push_back(cb.ea[i] == cb.eb[i]);
  }
  Polynomial num = a.numerator() * ma;
  if (subtract) num -= b.numerator() * mb;
  else num += b.numerator() * mb;
  if (num.is_zero()) return {};
  cancel(num, den, &check);
  return RationalFunction::from_reduced(std::move(num), std::move(den));
}

}  // namespace

RationalFunction RationalFunction::from_reduced(Polynomial num, std::vector<Factor> den) {
  RationalFunction r;
  r.num_ = std::move(num);
  if (!r.num_.is_zero()) r.den_ = std::move(den);
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) { return add_impl(a, b, false); }
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return add_impl(a, b, true); }

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  mpq_class scale = 1;
  std::vector<Factor> raw;
  split_raw(num_, 1, scale, raw);
  RationalFunction r;
  r.num_ = expand(den_).scaled(1 / scale);
  r.den_ = refine(raw);
  return r;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (b.is_constant()) {
    RationalFunction r = a;
    r.num_ = r.num_.scaled(1 / b.num_.constant_value());
    return r;
  }
  return a * b.inverse();
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  if (e > 0)
    for (const auto& f : den_) r.den_.push_back({f.poly, f.exp * e});
  return r;
}

RationalFunction RationalFunction::substitute(const Substitution& values) const {
  if (values.empty()) return *this;
  Polynomial num = num_.substitute(values);
  mpq_class scale = 1;
  std::vector<Factor> raw;
  for (const auto& f : den_) split_raw(f.poly.substitute(values), f.exp, scale, raw);
  RationalFunction r;
  r.num_ = num.scaled(1 / scale);
  r.den_ = refine(raw);
  cancel(r.num_, r.den_);
  return r;
}

RationalFunction RationalFunction::shift(const Substitution& shifts) const {
  Substitution values;
  bool triangular = true;
  for (const auto& [v, s] : shifts) {
    values.emplace_back(v, Polynomial(v) + s);
    for (const auto& [w, t] : shifts)
      if (s.contains(w)) triangular = false;
  }
  if (!triangular) return substitute(values);
  // v -> v + s with s free of shifted variables is an automorphism: it keeps
  // factors coprime, irreducible and coprime to the numerator.
  RationalFunction r;
  mpq_class scale = 1;
  for (const auto& f : den_) {
    auto [s, prim] = primitive_split(f.poly.substitute(values));
    for (int k = 0; k < f.exp; ++k) scale *= s;
    r.den_.push_back({std::move(prim), f.exp});
  }
  sort_factors(r.den_);
  r.num_ = num_.substitute(values).scaled(1 / scale);
  return r;
}

RationalFunction RationalFunction::rename(const std::array<uint8_t, kNumSlots>& slot_map) const {
  RationalFunction r;
  mpq_class scale = 1;
  for (const auto& f : den_) {
    auto [s, prim] = primitive_split(f.poly.rename(slot_map));
    for (int k = 0; k < f.exp; ++k) scale *= s;
    r.den_.push_back({std::move(prim), f.exp});
  }
  r.num_ = num_.rename(slot_map).scaled(1 / scale);
  bool injective = true;
  {
    std::array<bool, kNumSlots> hit{};
    for (int i = 0; i < kNumSlots; ++i) {
      if (hit[slot_map[i]]) injective = false;
      hit[slot_map[i]] = true;
    }
  }
  if (!injective) {
    std::vector<Factor> raw = r.den_;
    r.den_ = refine(raw);
    cancel(r.num_, r.den_);
  } else {
    sort_factors(r.den_);
  }
  return r;
}

namespace {

bool single_variable_power(const Polynomial& p) {
  if (p.size() != 1 || p.leading().coeff != 1) return false;
  int vars = 0;
  for (uint8_t e : p.leading().mono.exp) vars += e != 0;
  return vars == 1;
}

bool single_term(const Polynomial& p) { return p.size() == 1; }

}  // namespace

std::string RationalFunction::to_string() const {
  if (den_.empty()) return num_.to_string();
  Polynomial d = denominator();
  std::string n = single_term(num_) ? num_.to_string() : "(" + num_.to_string() + ")";
  std::string ds = single_variable_power(d) ? d.to_string() : "(" + d.to_string() + ")";
  return n + "/" + ds;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (!(a.num_ == b.num_)) return false;
  if (a.den_.size() == b.den_.size()) {
    bool same = true;
    for (size_t i = 0; i < a.den_.size() && same; ++i)
      same = a.den_[i].exp == b.den_[i].exp && a.den_[i].poly == b.den_[i].poly;
    if (same) return true;
  }
  return a.denominator() == b.denominator();
}

RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw std::invalid_argument("unknown arithmetic operation");
}

namespace {

// Linear polynomial of the form w_i - w_j + k*hbar (already normalised).
bool admissible_linear(const Polynomial& f, int N) {
  int plus = 0, minus = 0;
  for (const auto& t : f.terms()) {
    if (t.mono.is_one()) return false;
    Var v;
    for (int s = 0; s < kNumSlots; ++s)
      if (t.mono.exp[s]) v = Var::from_slot(s);
    if (v.family() == Family::hbar) {
      if (t.coeff.get_den() != 1) return false;
      continue;
    }
    if (v.family() != Family::w || v.index() > N) return false;
    if (t.coeff == 1) ++plus;
    else if (t.coeff == -1) ++minus;
    else return false;
  }
  return plus == 1 && minus == 1;
}

// Integer roots x of p (univariate in `x`, rational coefficients) with
// |x| <= bound found by scanning; returns nullopt when the Cauchy bound is
// too large to scan.
std::optional<std::vector<long>> integer_roots(const Polynomial& p, Var x) {
  auto c = p.coefficients_in(x);
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  if (c.size() <= 1) return std::vector<long>{};
  mpq_class lead = c.back().constant_value();
  mpq_class m = 0;
  for (size_t i = 0; i + 1 < c.size(); ++i) {
    mpq_class r = abs(c[i].is_zero() ? mpq_class(0) : c[i].constant_value()) / abs(lead);
    if (r > m) m = r;
  }
  mpq_class bound_q = m + 1;
  mpz_class bound = bound_q.get_num() / bound_q.get_den() + 1;
  if (bound > 200000) return std::nullopt;
  long b = bound.get_si();
  std::vector<long> roots;
  for (long t = -b; t <= b; ++t) {
    mpq_class val = 0;
    for (size_t i = c.size(); i-- > 0;) val = val * t + (c[i].is_zero() ? mpq_class(0) : c[i].constant_value());
    if (sgn(val) == 0) roots.push_back(t);
  }
  return roots;
}

bool admissible_nonlinear(Polynomial f, int N) {
  for (Var v : f.variables())
    if (!(v.family() == Family::hbar || (v.family() == Family::w && v.index() <= N))) return false;
  const Var t = Var::psi();  // scratch variable, absent from f
  bool progress = true;
  while (!f.is_constant() && progress) {
    progress = false;
    if (is_linear(f)) return admissible_linear(f, N);
    auto vars = f.variables();
    for (Var wi : vars) {
      if (wi.family() != Family::w) continue;
      for (Var wj : vars) {
        if (wj.family() != Family::w || wj == wi) continue;
        // Vanishing at w_i = w_j + t*hbar with generic values elsewhere.
        Substitution sub{{wi, Polynomial(wj) + Polynomial(t) * Polynomial(Var::hbar())}};
        Polynomial g = f.substitute(sub);
        Substitution generic;
        long val = 7;
        for (Var v : g.variables()) {
          if (v == t) continue;
          generic.emplace_back(v, v.family() == Family::hbar ? Polynomial(1L) : Polynomial(val));
          val = val * 13 + 5;
        }
        auto roots = integer_roots(g.substitute(generic), t);
        if (!roots) return false;
        for (long r : *roots) {
          // Factor vanishing at w_i = w_j + r*hbar.
          Polynomial cand = Polynomial(wi) - Polynomial(wj) - Polynomial(Var::hbar()).scaled(r);
          cand = primitive_split(cand).second;
          while (auto q = f.divide_exact(cand)) {
            f = std::move(*q);
            progress = true;
          }
        }
        if (progress) break;
      }
      if (progress) break;
    }
  }
  return f.is_constant();
}

}  // namespace

bool denominator_admissible(const RationalFunction& f, int N, const std::vector<Var>& exempt) {
  for (const auto& fac : f.denominator_factors()) {
    bool skip = std::any_of(exempt.begin(), exempt.end(), [&](Var v) { return fac.poly.contains(v); });
    if (skip) continue;
    if (is_linear(fac.poly)) {
      if (!admissible_linear(fac.poly, N)) return false;
    } else if (!admissible_nonlinear(fac.poly, N)) {
      return false;
    }
  }
  return true;
}

}  // namespace yc
