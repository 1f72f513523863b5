#include "yangcheck/diffops.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

#include "yangcheck/expression.hpp"

namespace yc {

namespace {

int merged_rank(int a, int b) {
  if (a && b && a != b) throw std::invalid_argument("rank mismatch");
  return a ? a : b;
}

void check_shift(const DifferenceOperator::Shift& m) {
  for (int e : m)
    if (std::abs(e) > kMaxShift) throw std::invalid_argument("shift exponent exceeds " + std::to_string(kMaxShift));
}

RationalFunction shifted(const RationalFunction& c, const DifferenceOperator::Shift& m) {
  Substitution s;
  for (size_t i = 0; i < m.size(); ++i)
    if (m[i]) s.push_back({Var::w(static_cast<int>(i) + 1), Polynomial(Var::hbar()).scaled(m[i])});
  return s.empty() ? c : c.shift(s);
}

}  // namespace

DifferenceOperator DifferenceOperator::coefficient(int N, const RationalFunction& c) {
  return monomial(N, Shift(N, 0), c);
}

DifferenceOperator DifferenceOperator::monomial(int N, const Shift& m, const RationalFunction& c) {
  if (static_cast<int>(m.size()) != N) throw std::invalid_argument("shift vector length mismatch");
  DifferenceOperator r(N);
  r.add(m, c);
  return r;
}

DifferenceOperator DifferenceOperator::shift(int N, int i, int e) {
  if (i < 1 || i > N) throw std::out_of_range("shift index out of range");
  Shift m(N, 0);
  m[i - 1] = e;
  return monomial(N, m);
}

RationalFunction DifferenceOperator::coefficient_of(const Shift& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RationalFunction() : it->second;
}

void DifferenceOperator::add(const Shift& m, const RationalFunction& c) {
  if (c.is_zero()) return;
  check_shift(m);
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DifferenceOperator operator+(const DifferenceOperator& a, const DifferenceOperator& b) {
  DifferenceOperator r = a;
  r.N_ = merged_rank(a.N_, b.N_);
  for (const auto& [m, c] : b.terms_) r.add(m, c);
  return r;
}

DifferenceOperator operator-(const DifferenceOperator& a, const DifferenceOperator& b) {
  DifferenceOperator r = a;
  r.N_ = merged_rank(a.N_, b.N_);
  for (const auto& [m, c] : b.terms_) r.add(m, -c);
  return r;
}

DifferenceOperator operator*(const DifferenceOperator& a, const DifferenceOperator& b) {
  DifferenceOperator r(merged_rank(a.N_, b.N_));
  for (const auto& [m, c] : a.terms_)
    for (const auto& [n, d] : b.terms_) {
      DifferenceOperator::Shift mn(m.size());
      for (size_t i = 0; i < m.size(); ++i) mn[i] = m[i] + n[i];
      r.add(mn, c * shifted(d, m));
    }
  return r;
}

DifferenceOperator DifferenceOperator::scaled(const RationalFunction& c) const {
  DifferenceOperator r(N_);
  for (const auto& [m, d] : terms_) r.add(m, c * d);
  return r;
}

DifferenceOperator DifferenceOperator::inverse() const {
  if (terms_.size() != 1) throw std::domain_error("only single-term difference operators are invertible here");
  const auto& [m, c] = *terms_.begin();
  Shift neg(m.size());
  for (size_t i = 0; i < m.size(); ++i) neg[i] = -m[i];
  // (c U^m)^{-1} = U^{-m} c^{-1} = c^{-1}(w - hbar m) U^{-m}.
  return monomial(N_, neg, shifted(c.inverse(), neg));
}

DifferenceOperator DifferenceOperator::pow(int e) const {
  DifferenceOperator base = e < 0 ? inverse() : *this;
  DifferenceOperator r = coefficient(N_, RationalFunction(1L));
  for (int i = 0; i < std::abs(e); ++i) r = r * base;
  return r;
}

DifferenceOperator DifferenceOperator::permuted(const std::vector<int>& p) const {
  auto slot_map = permutation_slot_map(Family::w, p);
  DifferenceOperator r(N_);
  for (const auto& [m, c] : terms_) {
    Shift out(m.size());
    for (size_t i = 0; i < m.size(); ++i) out[p[i]] = m[i];
    r.add(out, c.rename(slot_map));
  }
  return r;
}

std::string DifferenceOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string mono;
    for (size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += "u" + std::to_string(i + 1);
      if (m[i] != 1) mono += "^" + std::to_string(m[i]);
    }
    std::string term;
    if (mono.empty()) term = "(" + c.to_string() + ")";
    else if (c == RationalFunction(1L)) term = mono;
    else if (c == RationalFunction(-1L)) term = "-" + mono;
    else term = "(" + c.to_string() + ")*" + mono;
    if (out.empty()) out = term;
    else if (term[0] == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out;
}

DifferenceOperator dop_mul(const DifferenceOperator& a, const DifferenceOperator& b) { return a * b; }

DifferenceOperator dop_commutator(const DifferenceOperator& a, const DifferenceOperator& b) { return a * b - b * a; }

bool coeffs_admissible(const DifferenceOperator& a, int N) {
  for (const auto& [m, c] : a.terms())
    if (!denominator_admissible(c, N, {Var::u(), Var::v()})) return false;
  return true;
}

namespace {

// "uK" with K in 1..N names a shift atom.
int shift_atom(const std::string& name, int N) {
  if (name.size() < 2 || name[0] != 'u') return 0;
  for (size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return 0;
  int k = std::stoi(name.substr(1));
  return k >= 1 && k <= N ? k : -1;
}

DifferenceOperator evaluate(const Expr& e, int N) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::integer:
      return DifferenceOperator::coefficient(N, RationalFunction(mpq_class(e.text)));
    case K::identifier: {
      int k = shift_atom(e.text, N);
      if (k > 0) return DifferenceOperator::shift(N, k);
      if (k < 0) throw ParseError(e.position, "shift index out of range: " + e.text);
      auto v = Var::parse(e.text);
      if (!v) throw ParseError(e.position, "unknown identifier: " + e.text);
      return DifferenceOperator::coefficient(N, RationalFunction(*v));
    }
    case K::add:
      return evaluate(*e.args[0], N) + evaluate(*e.args[1], N);
    case K::sub:
      return evaluate(*e.args[0], N) - evaluate(*e.args[1], N);
    case K::mul:
      return evaluate(*e.args[0], N) * evaluate(*e.args[1], N);
    case K::div: {
      DifferenceOperator d = evaluate(*e.args[1], N);
      try {
        return evaluate(*e.args[0], N) * d.inverse();
      } catch (const std::domain_error&) {
        throw ParseError(e.args[1]->position, "divisor must be a single term");
      }
    }
    case K::neg:
      return -evaluate(*e.args[0], N);
    case K::pow: {
      DifferenceOperator b = evaluate(*e.args[0], N);
      if (e.exponent < 0 && b.terms().size() != 1) throw ParseError(e.position, "negative power of a sum");
      return b.pow(static_cast<int>(e.exponent));
    }
  }
  throw ParseError(e.position, "unsupported expression");
}

}  // namespace

DifferenceOperator parse_difference_operator(std::string_view text, int N) {
  if (N < 1) throw std::invalid_argument("rank must be at least 1");
  auto tree = parse_expression(text);
  return evaluate(*tree, N);
}

}  // namespace yc
