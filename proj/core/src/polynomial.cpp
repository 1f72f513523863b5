#include "yangcheck/polynomial.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace yc {

Monomial Monomial::of(Var v, int e) {
  if (e < 0 || e > 255) throw std::overflow_error("monomial exponent out of range");
  Monomial m;
  m.exp[v.slot()] = static_cast<uint8_t>(e);
  m.deg = static_cast<uint16_t>(e);
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (deg > other.deg) return false;
  for (int i = 0; i < kNumSlots; ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  bool overflow = false;
  for (int i = 0; i < kNumSlots; ++i) {
    unsigned s = unsigned(exp[i]) + other.exp[i];
    overflow |= s > 255;
    r.exp[i] = static_cast<uint8_t>(s);
  }
  if (overflow) throw std::overflow_error("monomial exponent exceeds 255");
  r.deg = static_cast<uint16_t>(deg + other.deg);
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  for (int i = 0; i < kNumSlots; ++i) r.exp[i] = static_cast<uint8_t>(exp[i] - other.exp[i]);
  r.deg = static_cast<uint16_t>(deg - other.deg);
  return r;
}

int compare(const Monomial& a, const Monomial& b) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  return std::memcmp(a.exp.data(), b.exp.data(), kNumSlots);
}

size_t MonomialHash::operator()(const Monomial& m) const {
  uint64_t h = 1469598103934665603ull;
  for (uint8_t x : m.exp) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

namespace {

struct Desc {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

void sort_and_combine(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return compare(a.mono, b.mono) > 0; });
  size_t out = 0;
  for (size_t i = 0; i < terms.size();) {
    size_t j = i + 1;
    mpq_class c = std::move(terms[i].coeff);
    while (j < terms.size() && terms[j].mono == terms[i].mono) c += terms[j++].coeff;
    if (sgn(c) != 0) {
      terms[out].mono = terms[i].mono;
      terms[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.push_back({Monomial{}, mpq_class(c)});
}

Polynomial::Polynomial(const mpq_class& c) {
  if (sgn(c) != 0) terms_.push_back({Monomial{}, c});
}

Polynomial::Polynomial(Var v) { terms_.push_back({Monomial::of(v), mpq_class(1)}); }

Polynomial::Polynomial(const Monomial& m, const mpq_class& c) {
  if (sgn(c) != 0) terms_.push_back({m, c});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  sort_and_combine(terms);
  Polynomial p;
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1;
}

mpq_class Polynomial::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_.empty() ? mpq_class(0) : terms_[0].coeff;
}

mpq_class Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

int Polynomial::degree_in(Var v) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.mono.exp[v.slot()]);
  return d;
}

std::vector<Var> Polynomial::variables() const {
  std::array<bool, kNumSlots> seen{};
  for (const auto& t : terms_)
    for (int i = 0; i < kNumSlots; ++i) seen[i] = seen[i] || t.mono.exp[i] != 0;
  std::vector<Var> out;
  for (int i = 0; i < kNumSlots; ++i)
    if (seen[i]) out.push_back(Var::from_slot(i));
  return out;
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return {};
  Monomial m = terms_[0].mono;
  for (const auto& t : terms_)
    for (int i = 0; i < kNumSlots; ++i) m.exp[i] = std::min(m.exp[i], t.mono.exp[i]);
  int d = 0;
  for (uint8_t x : m.exp) d += x;
  m.deg = static_cast<uint16_t>(d);
  return m;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, subtract ? mpq_class(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      mpq_class s = subtract ? mpq_class(a[i].coeff - b[j].coeff) : mpq_class(a[i].coeff + b[j].coeff);
      if (sgn(s) != 0) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::times_monomial(const Monomial& m, const mpq_class& c) const {
  Polynomial r;
  if (sgn(c) == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1) return b.times_monomial(a.terms_[0].mono, a.terms_[0].coeff);
  if (b.terms_.size() == 1) return a.times_monomial(b.terms_[0].mono, b.terms_[0].coeff);
  std::unordered_map<Monomial, mpq_class, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  mpq_class prod;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      prod = s.coeff * t.coeff;
      auto [it, fresh] = acc.try_emplace(s.mono * t.mono, prod);
      if (!fresh) it->second += prod;
    }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) terms.push_back({m, std::move(c)});
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return compare(x.mono, y.mono) > 0; });
  Polynomial r;
  r.terms_ = std::move(terms);
  return r;
}

Polynomial Polynomial::scaled(const mpq_class& c) const { return times_monomial(Monomial{}, c); }

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result(1L), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::divide_monomial(const Monomial& m) const {
  Polynomial r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!m.divides(t.mono)) throw std::logic_error("monomial does not divide polynomial");
    r.terms_.push_back({t.mono / m, t.coeff});
  }
  return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  if (terms_.empty()) return Polynomial{};
  if (d.terms_.size() == 1) {
    const Term& t = d.terms_[0];
    Polynomial r;
    r.terms_.reserve(terms_.size());
    for (const auto& s : terms_) {
      if (!t.mono.divides(s.mono)) return std::nullopt;
      r.terms_.push_back({s.mono / t.mono, s.coeff / t.coeff});
    }
    return r;
  }
  // Cheap rejections: leading and trailing monomials, per-variable degrees.
  if (!d.terms_.front().mono.divides(terms_.front().mono)) return std::nullopt;
  if (!d.terms_.back().mono.divides(terms_.back().mono)) return std::nullopt;
  {
    std::array<uint8_t, kNumSlots> da{}, dd{};
    for (const auto& t : terms_)
      for (int i = 0; i < kNumSlots; ++i) da[i] = std::max(da[i], t.mono.exp[i]);
    for (const auto& t : d.terms_)
      for (int i = 0; i < kNumSlots; ++i) dd[i] = std::max(dd[i], t.mono.exp[i]);
    for (int i = 0; i < kNumSlots; ++i)
      if (dd[i] > da[i]) return std::nullopt;
  }
  std::map<Monomial, mpq_class, Desc> rem;
  for (const auto& t : terms_) rem.emplace_hint(rem.end(), t.mono, t.coeff);
  const Term& lead = d.terms_.front();
  std::vector<Term> quotient;
  mpq_class qc, delta;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead.mono.divides(it->first)) return std::nullopt;
    Monomial qm = it->first / lead.mono;
    qc = it->second / lead.coeff;
    rem.erase(it);
    for (size_t k = 1; k < d.terms_.size(); ++k) {
      delta = qc * d.terms_[k].coeff;
      auto [pos, fresh] = rem.try_emplace(d.terms_[k].mono * qm, -delta);
      if (!fresh) {
        pos->second -= delta;
        if (sgn(pos->second) == 0) rem.erase(pos);
      }
    }
    quotient.push_back({qm, qc});
  }
  Polynomial q;
  q.terms_ = std::move(quotient);
  return q;
}

Polynomial Polynomial::substitute(const Substitution& values) const {
  if (values.empty() || terms_.empty()) return *this;
  std::array<int, kNumSlots> which;
  which.fill(-1);
  for (size_t i = 0; i < values.size(); ++i) which[values[i].first.slot()] = static_cast<int>(i);
  std::vector<std::vector<Polynomial>> powers(values.size());
  auto power = [&](size_t i, int e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial(1L));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * values[i].second);
    return cache[e];
  };
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Monomial kept = t.mono;
    Polynomial factor(Monomial{}, t.coeff);
    bool touched = false;
    for (int s = 0; s < kNumSlots; ++s) {
      if (which[s] < 0 || kept.exp[s] == 0) continue;
      factor = factor * power(which[s], kept.exp[s]);
      kept.deg = static_cast<uint16_t>(kept.deg - kept.exp[s]);
      kept.exp[s] = 0;
      touched = true;
    }
    if (!touched) {
      out.push_back(t);
      continue;
    }
    for (const auto& ft : factor.terms_) out.push_back({ft.mono * kept, ft.coeff});
  }
  return from_terms(std::move(out));
}

Polynomial Polynomial::rename(const std::array<uint8_t, kNumSlots>& slot_map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    m.deg = t.mono.deg;
    for (int s = 0; s < kNumSlots; ++s) {
      if (!t.mono.exp[s]) continue;
      unsigned e = unsigned(m.exp[slot_map[s]]) + t.mono.exp[s];
      if (e > 255) throw std::overflow_error("monomial exponent exceeds 255");
      m.exp[slot_map[s]] = static_cast<uint8_t>(e);
    }
    out.push_back({m, t.coeff});
  }
  return from_terms(std::move(out));
}

std::vector<Polynomial> Polynomial::coefficients_in(Var v) const {
  std::vector<Polynomial> out(degree_in(v) + 1);
  int s = v.slot();
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    int d = m.exp[s];
    m.exp[s] = 0;
    m.deg = static_cast<uint16_t>(m.deg - d);
    out[d].terms_.push_back({m, t.coeff});
  }
  return out;
}

Polynomial Polynomial::from_coefficients(Var v, const std::vector<Polynomial>& coeffs) {
  Polynomial r;
  for (size_t d = 0; d < coeffs.size(); ++d)
    if (!coeffs[d].is_zero()) r += coeffs[d].times_monomial(Monomial::of(v, static_cast<int>(d)));
  return r;
}

namespace {

std::string monomial_string(const Monomial& m) {
  std::string s;
  for (int i = 0; i < kNumSlots; ++i) {
    if (!m.exp[i]) continue;
    if (!s.empty()) s += '*';
    s += Var::from_slot(i).name();
    if (m.exp[i] > 1) s += '^' + std::to_string(m.exp[i]);
  }
  return s;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    mpq_class c = t.coeff;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += c.get_str();
    } else if (c == 1) {
      out += monomial_string(t.mono);
    } else {
      out += c.get_str() + "*" + monomial_string(t.mono);
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

int compare(const Polynomial& a, const Polynomial& b) {
  size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (size_t i = 0; i < n; ++i) {
    int c = compare(a.terms_[i].mono, b.terms_[i].mono);
    if (c) return c;
    int d = cmp(a.terms_[i].coeff, b.terms_[i].coeff);
    if (d) return d < 0 ? -1 : 1;
  }
  if (a.terms_.size() == b.terms_.size()) return 0;
  return a.terms_.size() < b.terms_.size() ? -1 : 1;
}

std::pair<mpq_class, Polynomial> primitive_split(const Polynomial& p) {
  if (p.is_zero()) return {mpq_class(0), Polynomial{}};
  mpz_class l = 1, g = 0;
  for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
  for (const auto& t : p.terms()) {
    mpz_class n = t.coeff.get_num() * (l / t.coeff.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  mpq_class scale(g, l);
  scale.canonicalize();
  if (sgn(p.leading().coeff) < 0) scale = -scale;
  if (scale == 1) return {scale, p};
  mpq_class inv = 1 / scale;
  return {scale, p.scaled(inv)};
}

namespace {

Polynomial normalized(const Polynomial& p) { return primitive_split(p).second; }

using UniPoly = std::vector<mpq_class>;  // ascending

void trim(UniPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// p with every variable other than x set to point[slot]; ascending in x.
UniPoly evaluate_except(const Polynomial& p, Var x, const std::array<long, kNumSlots>& point) {
  UniPoly out(static_cast<size_t>(p.degree_in(x)) + 1);
  for (const auto& t : p.terms()) {
    mpz_class v = 1;
    for (int s = 0; s < kNumSlots; ++s)
      if (s != x.slot() && t.mono.exp[s]) {
        mpz_class b;
        mpz_pow_ui(b.get_mpz_t(), mpz_class(point[s]).get_mpz_t(), t.mono.exp[s]);
        v *= b;
      }
    out[t.mono.exp[x.slot()]] += t.coeff * v;
  }
  return out;
}

int unigcd_degree(UniPoly a, UniPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    while (a.size() >= b.size() && !a.empty()) {
      mpq_class f = a.back() / b.back();
      size_t shift = a.size() - b.size();
      for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
      trim(a);
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

// True when a and b are certainly coprime: for every shared variable x, a
// specialisation of the others that keeps both leading coefficients in x
// has a constant gcd in x, so the true gcd has degree 0 in x.
bool certainly_coprime(const Polynomial& a, const Polynomial& b) {
  std::array<long, kNumSlots> point{};
  for (int s = 0; s < kNumSlots; ++s) point[s] = 3 + 7 * s + (s * s) % 11;  // fixed, distinct
  for (Var x : a.variables()) {
    if (!b.contains(x)) continue;
    UniPoly ea = evaluate_except(a, x, point), eb = evaluate_except(b, x, point);
    if (ea.back() == 0 || eb.back() == 0) return false;
    if (unigcd_degree(ea, eb) != 0) return false;
  }
  return true;
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b);

// gcd of the coefficients of p viewed as a polynomial in x.
Polynomial content_in(const Polynomial& p, Var x) {
  Polynomial g;
  for (const auto& c : p.coefficients_in(x)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? normalized(c) : gcd_rec(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Polynomial prem(const Polynomial& a, const Polynomial& b, Var x) {
  auto bc = b.coefficients_in(x);
  int db = static_cast<int>(bc.size()) - 1;
  const Polynomial& lcb = bc.back();
  Polynomial r = a;
  while (!r.is_zero()) {
    int dr = r.degree_in(x);
    if (dr < db) break;
    Polynomial lcr = r.coefficients_in(x)[dr];
    r = lcb * r - (lcr * b).times_monomial(Monomial::of(x, dr - db));
  }
  return r;
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  if (a.is_constant() || b.is_constant()) return Polynomial(1L);
  Polynomial na = normalized(a), nb = normalized(b);
  if (na == nb) return na;
  if (na.size() <= nb.size()) {
    if (nb.divide_exact(na)) return na;
  } else if (na.divide_exact(nb)) {
    return nb;
  }
  if (certainly_coprime(na, nb)) return Polynomial(1L);
  auto va = na.variables(), vb = nb.variables();
  for (Var x : va)
    if (!nb.contains(x)) return gcd_rec(content_in(na, x), nb);
  for (Var x : vb)
    if (!na.contains(x)) return gcd_rec(na, content_in(nb, x));
  // Main variable: the common variable of least degree.
  Var x = va.front();
  int best = 1 << 30;
  for (Var y : va) {
    int d = std::max(na.degree_in(y), nb.degree_in(y));
    if (d < best) {
      best = d;
      x = y;
    }
  }
  Polynomial ca = content_in(na, x), cb = content_in(nb, x);
  Polynomial pa = *na.divide_exact(ca), pb = *nb.divide_exact(cb);
  Polynomial c = gcd_rec(ca, cb);
  if (pa.degree_in(x) < pb.degree_in(x)) std::swap(pa, pb);
  Polynomial g;
  while (true) {
    Polynomial r = prem(pa, pb, x);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    if (r.degree_in(x) == 0) {
      g = Polynomial(1L);
      break;
    }
    r = *r.divide_exact(content_in(r, x));
    pa = std::move(pb);
    pb = normalized(r);
  }
  if (!g.is_constant()) g = *g.divide_exact(content_in(g, x));
  return normalized(c * g);
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return normalized(b);
  if (b.is_zero()) return normalized(a);
  Monomial ma = a.monomial_content(), mb = b.monomial_content(), mg;
  int d = 0;
  for (int i = 0; i < kNumSlots; ++i) {
    mg.exp[i] = std::min(ma.exp[i], mb.exp[i]);
    d += mg.exp[i];
  }
  mg.deg = static_cast<uint16_t>(d);
  Polynomial g = gcd_rec(a.divide_monomial(ma), b.divide_monomial(mb));
  return normalized(g.times_monomial(mg));
}

std::array<uint8_t, kNumSlots> identity_slot_map() {
  std::array<uint8_t, kNumSlots> m{};
  for (int i = 0; i < kNumSlots; ++i) m[i] = static_cast<uint8_t>(i);
  return m;
}

std::array<uint8_t, kNumSlots> permutation_slot_map(Family family, const std::vector<int>& perm) {
  int base;
  switch (family) {
    case Family::w: base = 0; break;
    case Family::Y: base = 8; break;
    case Family::z: base = 16; break;
    case Family::xi: base = 27; break;
    default: throw std::invalid_argument("family has no index");
  }
  auto m = identity_slot_map();
  int limit = family == Family::xi ? kMaxXi : kMaxIndexed;
  if (static_cast<int>(perm.size()) > limit) throw std::out_of_range("permutation too long for family");
  for (size_t i = 0; i < perm.size(); ++i) m[base + i] = static_cast<uint8_t>(base + perm[i]);
  return m;
}

}  // namespace yc
