#include "yangcheck/envelope.hpp"

#include <cctype>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "yangcheck/expression.hpp"

namespace yc {

void check_rank(int N, int max_rank) {
  if (N < 1) throw std::invalid_argument("rank must be at least 1");
  if (N > max_rank) throw std::invalid_argument("rank " + std::to_string(N) + " exceeds the limit " + std::to_string(max_rank));
  if (N > 9) throw std::invalid_argument("rank above 9 is not supported");
}

namespace {

const std::vector<Generator>& generator_table(int N) {
  static std::mutex mu;
  static std::map<int, std::vector<Generator>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto it = tables.find(N);
  if (it != tables.end()) return it->second;
  std::vector<Generator> t;
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j < i; ++j) t.push_back({i, j});
  for (int i = 1; i <= N; ++i) t.push_back({i, i});
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) t.push_back({i, j});
  return tables.emplace(N, std::move(t)).first->second;
}

int merged_rank(int a, int b) {
  if (a && b && a != b) throw std::invalid_argument("rank mismatch");
  return a ? a : b;
}

Polynomial hbar() { return Polynomial(Var::hbar()); }

// word * generator, memoised per thread.
PBWElement word_times_generator(int N, const PBWElement::Word& m, char g) {
  if (m.empty() || m.back() <= g) {
    PBWElement r(N);
    r.add(m + g, Polynomial(1L));
    return r;
  }
  thread_local std::unordered_map<std::string, PBWElement> memo;
  std::string key;
  key.reserve(m.size() + 2);
  key += static_cast<char>(N);
  key += g;
  key += m;
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  char x = m.back();
  PBWElement::Word prefix = m.substr(0, m.size() - 1);
  // prefix x g = (prefix g) x + prefix [x, g].
  PBWElement r = word_times_generator(N, prefix, g).times_generator(x);
  Generator gx = pbw_generator(N, x), gg = pbw_generator(N, g);
  if (gx.j == gg.i) r = r + hbar() * word_times_generator(N, prefix, static_cast<char>(pbw_id(N, gx.i, gg.j)));
  if (gg.j == gx.i) r = r - hbar() * word_times_generator(N, prefix, static_cast<char>(pbw_id(N, gg.i, gx.j)));
  memo.emplace(std::move(key), r);
  return r;
}

std::string generator_name(int N, char id) {
  Generator g = pbw_generator(N, id);
  return "E" + std::to_string(g.i) + std::to_string(g.j);
}

bool single_term(const Polynomial& p) { return p.size() == 1; }

}  // namespace

int pbw_id(int N, int i, int j) {
  if (i < 1 || j < 1 || i > N || j > N) throw std::out_of_range("generator index out of range");
  if (i > j) return (i - 1) * (i - 2) / 2 + (j - 1);
  int lower = N * (N - 1) / 2;
  if (i == j) return lower + i - 1;
  int before = 0;
  for (int r = 1; r < i; ++r) before += N - r;
  return lower + N + before + (j - i - 1);
}

Generator pbw_generator(int N, int id) { return generator_table(N).at(id); }

PBWElement PBWElement::scalar(int N, const Polynomial& c) {
  PBWElement r(N);
  r.add("", c);
  return r;
}

PBWElement PBWElement::generator(int N, int i, int j) {
  PBWElement r(N);
  r.add(std::string(1, static_cast<char>(pbw_id(N, i, j))), Polynomial(1L));
  return r;
}

PBWElement PBWElement::from_word(int N, const std::vector<Generator>& word, const Polynomial& c) {
  PBWElement r = scalar(N, c);
  for (const auto& g : word) r = r.times_generator(pbw_id(N, g.i, g.j));
  return r;
}

Polynomial PBWElement::coefficient(const std::vector<Generator>& sorted_word) const {
  Word w;
  for (const auto& g : sorted_word) w += static_cast<char>(pbw_id(N_, g.i, g.j));
  auto it = terms_.find(w);
  return it == terms_.end() ? Polynomial() : it->second;
}

void PBWElement::add(const Word& word, const Polynomial& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(word, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PBWElement operator+(const PBWElement& a, const PBWElement& b) {
  PBWElement r = a;
  r.N_ = merged_rank(a.N_, b.N_);
  for (const auto& [w, c] : b.terms_) r.add(w, c);
  return r;
}

PBWElement operator-(const PBWElement& a, const PBWElement& b) {
  PBWElement r = a;
  r.N_ = merged_rank(a.N_, b.N_);
  for (const auto& [w, c] : b.terms_) r.add(w, -c);
  return r;
}

PBWElement operator*(const Polynomial& c, const PBWElement& x) {
  PBWElement r(x.N_);
  if (c.is_zero()) return r;
  for (const auto& [w, d] : x.terms_) r.add(w, c * d);
  return r;
}

PBWElement PBWElement::times_generator(int id) const {
  PBWElement r(N_);
  for (const auto& [w, c] : terms_) r = r + c * word_times_generator(N_, w, static_cast<char>(id));
  return r;
}

PBWElement operator*(const PBWElement& a, const PBWElement& b) {
  int N = merged_rank(a.N_, b.N_);
  PBWElement r(N);
  for (const auto& [w, c] : b.terms_) {
    PBWElement t = c * a;
    for (char g : w) t = t.times_generator(g);
    r = r + t;
  }
  return r;
}

std::string PBWElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    std::string mono;
    for (size_t i = 0; i < w.size();) {
      size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (!mono.empty()) mono += "*";
      mono += generator_name(N_, w[i]);
      if (j - i > 1) mono += "^" + std::to_string(j - i);
      i = j;
    }
    bool negative = single_term(c) && c.leading().coeff < 0;
    Polynomial mag = negative ? -c : c;
    std::string term;
    if (mono.empty()) term = mag.to_string();
    else if (mag.is_one()) term = mono;
    else if (single_term(mag)) term = mag.to_string() + "*" + mono;
    else term = "(" + mag.to_string() + ")*" + mono;
    if (out.empty()) out = negative ? "-" + term : term;
    else out += (negative ? " - " : " + ") + term;
  }
  return out;
}

PBWElement commutator(const PBWElement& a, const PBWElement& b) { return a * b - b * a; }

namespace {

PBWElement evaluate_pbw(const Expr& e, int N) {
  using K = Expr::Kind;
  switch (e.kind) {
    case K::integer:
      return PBWElement::scalar(N, Polynomial(mpq_class(e.text)));
    case K::identifier: {
      const std::string& t = e.text;
      if (t.size() == 3 && t[0] == 'E' && std::isdigit(static_cast<unsigned char>(t[1])) &&
          std::isdigit(static_cast<unsigned char>(t[2]))) {
        int i = t[1] - '0', j = t[2] - '0';
        if (i < 1 || j < 1 || i > N || j > N) throw ParseError(e.position, "generator index out of range: " + t);
        return PBWElement::generator(N, i, j);
      }
      auto v = Var::parse(t);
      if (!v) throw ParseError(e.position, "unknown identifier: " + t);
      return PBWElement::scalar(N, Polynomial(*v));
    }
    case K::add:
      return evaluate_pbw(*e.args[0], N) + evaluate_pbw(*e.args[1], N);
    case K::sub:
      return evaluate_pbw(*e.args[0], N) - evaluate_pbw(*e.args[1], N);
    case K::mul:
      return evaluate_pbw(*e.args[0], N) * evaluate_pbw(*e.args[1], N);
    case K::div: {
      PBWElement d = evaluate_pbw(*e.args[1], N);
      const auto& t = d.terms();
      if (t.size() != 1 || !t.begin()->first.empty() || !t.begin()->second.is_constant())
        throw ParseError(e.args[1]->position, "division only by nonzero constants");
      return Polynomial(1 / t.begin()->second.constant_value()) * evaluate_pbw(*e.args[0], N);
    }
    case K::neg:
      return -evaluate_pbw(*e.args[0], N);
    case K::pow: {
      if (e.exponent < 0) throw ParseError(e.position, "negative powers are not defined here");
      PBWElement b = evaluate_pbw(*e.args[0], N), r = PBWElement::one(N);
      for (long i = 0; i < e.exponent; ++i) r = r * b;
      return r;
    }
  }
  throw ParseError(e.position, "unsupported expression");
}

}  // namespace

PBWElement parse_pbw(std::string_view text, int N) {
  check_rank(N);
  return evaluate_pbw(*parse_expression(text), N);
}

PBWElement transpose_auto(const PBWElement& x, Transpose kind) {
  int N = x.rank();
  PBWElement r(N);
  for (const auto& [w, c] : x.terms()) {
    PBWElement t = PBWElement::scalar(N, c);
    if (kind == Transpose::anti) {
      for (size_t i = w.size(); i-- > 0;) {
        Generator g = pbw_generator(N, w[i]);
        t = t.times_generator(pbw_id(N, g.j, g.i));
      }
    } else {
      for (char id : w) {
        Generator g = pbw_generator(N, id);
        t = -t.times_generator(pbw_id(N, g.j, g.i));
      }
    }
    r = r + t;
  }
  return r;
}

Polynomial hc_projection(const PBWElement& x) {
  int N = x.rank();
  Polynomial out;
  for (const auto& [w, c] : x.terms()) {
    Polynomial t = c;
    bool keep = true;
    for (char id : w) {
      Generator g = pbw_generator(N, id);
      if (g.i != g.j) {
        keep = false;
        break;
      }
      t *= Polynomial(Var::w(g.i)) - hbar().scaled(N - g.i);
    }
    if (keep) out += t;
  }
  return out;
}

Polynomial hc_projection(const UPoly<PBWElement>& x) {
  std::vector<Polynomial> c;
  for (const auto& e : x.coefficients()) c.push_back(hc_projection(e));
  return Polynomial::from_coefficients(Var::u(), c);
}

EntryFn<PBWElement> envelope_entries(int N) {
  return [N](int a, int b) { return PBWElement::generator(N, a, b); };
}

UPoly<PBWElement> quantum_minor(int N, const std::vector<int>& rows, const std::vector<int>& cols) {
  check_rank(N);
  if (rows.size() > static_cast<size_t>(N)) throw std::invalid_argument("minor larger than the matrix");
  return quantum_minor_rows<PBWElement>(envelope_entries(N), PBWElement::one(N), rows, cols);
}

UPoly<PBWElement> quantum_minor_column_form(int N, const std::vector<int>& rows, const std::vector<int>& cols) {
  check_rank(N);
  if (rows.size() > static_cast<size_t>(N)) throw std::invalid_argument("minor larger than the matrix");
  return quantum_minor_cols<PBWElement>(envelope_entries(N), PBWElement::one(N), rows, cols);
}

UPoly<PBWElement> quantum_determinant(int N) {
  check_rank(N);
  return yc::quantum_determinant<PBWElement>(envelope_entries(N), PBWElement::one(N), N);
}

UMatrix<PBWElement> quantum_comatrix(int N) {
  check_rank(N);
  return yc::quantum_comatrix<PBWElement>(envelope_entries(N), PBWElement::one(N), N);
}

UMatrix<PBWElement> comatrix_identity_residual(int N) {
  auto E = envelope_entries(N);
  PBWElement one = PBWElement::one(N);
  auto lhs = matmul(substitute(quantum_comatrix(N), Polynomial(1L), hbar().scaled(N - 1)), t_matrix(E, one, N));
  UPoly<PBWElement> a = quantum_determinant(N).substitute(Polynomial(-1L), Polynomial());
  if (N % 2) a = a.scaled(Polynomial(-1L));
  for (int i = 0; i < N; ++i) lhs[i][i] = lhs[i][i] - a;
  return lhs;
}

// ---------------------------------------------------------------------------

FreeModuleElement FreeModuleElement::basis(int N, bool dual, const Index& index, const PBWElement& coeff) {
  FreeModuleElement r(N, static_cast<int>(index.size()), dual);
  r.add(index, coeff);
  return r;
}

PBWElement FreeModuleElement::coefficient(const Index& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? PBWElement(N_) : it->second;
}

void FreeModuleElement::add(const Index& index, const PBWElement& coeff) {
  if (static_cast<int>(index.size()) != k_) throw std::invalid_argument("tensor length mismatch");
  for (int a : index)
    if (a < 1 || a > N_) throw std::out_of_range("basis index out of range");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(index, coeff);
  if (!inserted) {
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

static void require_same_shape(const FreeModuleElement& a, const FreeModuleElement& b) {
  if (a.rank() != b.rank() || a.tensor_length() != b.tensor_length() || a.dual() != b.dual())
    throw std::invalid_argument("free module shape mismatch");
}

FreeModuleElement operator+(const FreeModuleElement& a, const FreeModuleElement& b) {
  require_same_shape(a, b);
  FreeModuleElement r = a;
  for (const auto& [i, c] : b.terms_) r.add(i, c);
  return r;
}

FreeModuleElement operator-(const FreeModuleElement& a, const FreeModuleElement& b) {
  require_same_shape(a, b);
  FreeModuleElement r = a;
  for (const auto& [i, c] : b.terms_) r.add(i, -c);
  return r;
}

FreeModuleElement FreeModuleElement::scaled(const Polynomial& c) const {
  FreeModuleElement r(N_, k_, dual_);
  for (const auto& [i, x] : terms_) r.add(i, c * x);
  return r;
}

FreeModuleElement FreeModuleElement::left_mul(const PBWElement& x) const {
  FreeModuleElement r(N_, k_, dual_);
  for (const auto& [i, c] : terms_) r.add(i, x * c);
  return r;
}

bool operator==(const FreeModuleElement& a, const FreeModuleElement& b) {
  return a.N_ == b.N_ && a.k_ == b.k_ && a.dual_ == b.dual_ && a.terms_ == b.terms_;
}

std::string FreeModuleElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [idx, c] : terms_) {
    std::string vec;
    for (size_t s = 0; s < idx.size(); ++s) {
      if (s) vec += "|";
      vec += (dual_ ? "phi" : "v") + std::to_string(idx[s]);
    }
    std::string cs = c.to_string();
    std::string term;
    if (c == PBWElement::one(N_)) term = vec;
    else if (c.terms().size() == 1 && cs.find(' ') == std::string::npos) term = cs + "*" + vec;
    else term = "(" + cs + ")*" + vec;
    out += out.empty() ? term : " + " + term;
  }
  return out;
}

FreeModuleElement generator_action(const FreeModuleElement& x, Generator g) {
  // Vector: E_ij v_k = delta_jk v_i.  Dual: E_ij phi_k = -delta_ik phi_j.
  FreeModuleElement r(x.rank(), x.tensor_length(), x.dual());
  for (const auto& [idx, c] : x.terms())
    for (size_t s = 0; s < idx.size(); ++s) {
      auto out = idx;
      if (!x.dual() && idx[s] == g.j) {
        out[s] = g.i;
        r.add(out, c);
      } else if (x.dual() && idx[s] == g.i) {
        out[s] = g.j;
        r.add(out, -c);
      }
    }
  return r;
}

FreeModuleElement right_act(const FreeModuleElement& x, Generator g) {
  int N = x.rank();
  FreeModuleElement r(N, x.tensor_length(), x.dual());
  int id = pbw_id(N, g.i, g.j);
  for (const auto& [idx, c] : x.terms()) r.add(idx, c.times_generator(id));
  return r - generator_action(x, g).scaled(hbar());
}

FreeModuleElement right_act(const FreeModuleElement& x, const PBWElement& y) {
  FreeModuleElement r(x.rank(), x.tensor_length(), x.dual());
  for (const auto& [w, c] : y.terms()) {
    FreeModuleElement t = x.scaled(c);
    for (char id : w) t = right_act(t, pbw_generator(x.rank(), id));
    r = r + t;
  }
  return r;
}

namespace {

// One-factor operator on the basis element e_a of U (x) V.
FreeModuleElement single_omega(int N, bool dual, int a) {
  FreeModuleElement r(N, 1, dual);
  if (!dual) {
    // Omega(v_a) = sum_j E_aj v_j.
    for (int j = 1; j <= N; ++j) r.add({j}, PBWElement::generator(N, a, j));
  } else {
    // Omega*(phi_a) = sum_j phi_j . E_ja.
    for (int j = 1; j <= N; ++j) r = r + right_act(FreeModuleElement::basis(N, true, {j}), Generator{j, a});
  }
  return r;
}

}  // namespace

FreeModuleElement omega_apply(const FreeModuleElement& x, int slot) {
  int N = x.rank(), k = x.tensor_length();
  check_rank(N);
  check_rank(k);
  if (slot < 1 || slot > k) throw std::out_of_range("slot out of range");
  std::vector<FreeModuleElement> single;
  for (int a = 1; a <= N; ++a) single.push_back(single_omega(N, x.dual(), a));
  FreeModuleElement r(N, k, x.dual());
  for (const auto& [idx, c] : x.terms()) {
    FreeModuleElement::Index head(idx.begin(), idx.begin() + slot - 1);
    FreeModuleElement prefix = FreeModuleElement::basis(N, x.dual(), head, c);
    for (const auto& [one_idx, y] : single[idx[slot - 1] - 1].terms()) {
      FreeModuleElement moved = right_act(prefix, y);
      for (const auto& [pidx, pc] : moved.terms()) {
        auto full = pidx;
        full.push_back(one_idx[0]);
        full.insert(full.end(), idx.begin() + slot, idx.end());
        r.add(full, pc);
      }
    }
  }
  return r;
}

FreeModuleElement omega_star_apply(const FreeModuleElement& x, int slot) {
  if (!x.dual()) throw std::invalid_argument("omega_star_apply needs a dual module element");
  return omega_apply(x, slot);
}

FreeModuleElement swap_slots(const FreeModuleElement& x, int i) {
  if (i < 1 || i >= x.tensor_length()) throw std::out_of_range("slot out of range");
  FreeModuleElement r(x.rank(), x.tensor_length(), x.dual());
  for (const auto& [idx, c] : x.terms()) {
    auto out = idx;
    std::swap(out[i - 1], out[i]);
    r.add(out, c);
  }
  return r;
}

FreeModuleElement hecke_axiom_residual(const FreeModuleElement& x, int i) {
  Polynomial kappa = x.dual() ? -hbar() : hbar();
  FreeModuleElement lhs = omega_apply(x, i + 1);
  FreeModuleElement rhs = swap_slots(omega_apply(swap_slots(x, i), i), i) - swap_slots(x, i).scaled(kappa);
  return lhs - rhs;
}

namespace {

// O on U (x) V, O = Omega or Omega* - hbar.
FreeModuleElement ch_operator(const FreeModuleElement& x) {
  FreeModuleElement r = omega_apply(x, 1);
  return x.dual() ? r - x.scaled(hbar()) : r;
}

}  // namespace

std::vector<FreeModuleElement> cayley_hamilton_residual(int N, bool dual) {
  check_rank(N);
  auto A = quantum_determinant(N);
  std::vector<FreeModuleElement> out;
  for (int a = 1; a <= N; ++a) {
    FreeModuleElement power = FreeModuleElement::basis(N, dual, {a});
    FreeModuleElement total(N, 1, dual);
    // A(u) = sum_i A_i u^{N-i}; A_i = coeff(N - i).
    for (int d = 0; d <= N; ++d) {
      total = total + power.left_mul(A.coeff(d));
      if (d < N) power = ch_operator(power);
    }
    out.push_back(total);
  }
  return out;
}

std::vector<FreeModuleElement> conjugation_residual(int N, bool dual, bool shifted_left) {
  check_rank(N);
  auto A = quantum_determinant(N);
  auto Ai = [&](int i) { return i < 0 || i > N ? PBWElement(N) : A.coeff(N - i); };
  std::vector<FreeModuleElement> out;
  for (int i = 0; i <= N + 1; ++i)
    for (int a = 1; a <= N; ++a) {
      FreeModuleElement e = FreeModuleElement::basis(N, dual, {a});
      FreeModuleElement Oe = omega_apply(e, 1);
      FreeModuleElement eAprev = right_act(e, Ai(i - 1));
      FreeModuleElement OeAprev = omega_apply(eAprev, 1);
      FreeModuleElement lhs, rhs;
      if (!shifted_left) {
        lhs = e.left_mul(Ai(i)) - Oe.left_mul(Ai(i - 1));
        rhs = right_act(e, Ai(i)) - (OeAprev - eAprev.scaled(hbar()));
      } else {
        lhs = e.left_mul(Ai(i)) - (Oe - e.scaled(hbar())).left_mul(Ai(i - 1));
        rhs = right_act(e, Ai(i)) - OeAprev;
      }
      out.push_back(lhs - rhs);
    }
  return out;
}

}  // namespace yc
