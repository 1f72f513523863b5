#include <random>

#include "doctest.h"
#include "yangcheck/envelope.hpp"
#include "yangcheck/expression.hpp"

using namespace yc;

namespace {

const Polynomial hbar = Var::hbar();

PBWElement E(int N, int i, int j) { return PBWElement::generator(N, i, j); }
PBWElement S(int N, const Polynomial& c) { return PBWElement::scalar(N, c); }
using U = UPoly<PBWElement>;

// T_ab(u - s hbar) built directly.
U T(int N, int a, int b, int s) {
  PBWElement c0 = E(N, a, b);
  if (a != b) return U(c0);
  return U::linear(c0 - S(N, hbar.scaled(s)), PBWElement::one(N));
}

std::vector<int> without(const std::vector<int>& v, size_t pos) {
  std::vector<int> r = v;
  r.erase(r.begin() + pos);
  return r;
}

std::vector<std::vector<int>> index_tuples(int N, int m) {
  std::vector<std::vector<int>> out{{}};
  for (int s = 0; s < m; ++s) {
    std::vector<std::vector<int>> next;
    for (const auto& t : out)
      for (int a = 1; a <= N; ++a) {
        auto x = t;
        x.push_back(a);
        next.push_back(x);
      }
    out = next;
  }
  return out;
}

U minor_or_one(int N, const std::vector<int>& a, const std::vector<int>& b) {
  return a.empty() ? U(PBWElement::one(N)) : quantum_minor(N, a, b);
}

}  // namespace

TEST_CASE("PBW normal form examples") {
  CHECK(E(2, 1, 2) * E(2, 2, 1) == E(2, 2, 1) * E(2, 1, 2) + hbar * E(2, 1, 1) - hbar * E(2, 2, 2));
  CHECK((E(2, 1, 2) * E(2, 2, 1)).to_string() == "E21*E12 + hbar*E11 - hbar*E22");
  PBWElement d = E(2, 1, 1) * E(2, 2, 2);
  CHECK(d.terms().size() == 1);
  CHECK(d.to_string() == "E11*E22");
  CHECK(commutator(E(3, 1, 2), E(3, 2, 3)) == hbar * E(3, 1, 3));
  CHECK((E(1, 1, 1) * E(1, 1, 1)).to_string() == "E11^2");
}

TEST_CASE("generator ids follow the PBW order") {
  for (int N = 1; N <= 4; ++N) {
    int n = 0;
    for (int id = 0; id < N * N; ++id) {
      Generator g = pbw_generator(N, id);
      CHECK(pbw_id(N, g.i, g.j) == id);
      ++n;
    }
    CHECK(n == N * N);
  }
  CHECK(pbw_generator(3, 0).i == 2);
  CHECK(pbw_generator(3, 3).i == 1);
  CHECK(pbw_generator(3, 3).j == 1);
  CHECK(pbw_generator(3, 8).i == 2);
  CHECK(pbw_generator(3, 8).j == 3);
}

TEST_CASE("PBW multiplication is associative and satisfies the gl_N relations") {
  const int N = 3;
  for (int a = 1; a <= N; ++a)
    for (int b = 1; b <= N; ++b)
      for (int c = 1; c <= N; ++c)
        for (int d = 1; d <= N; ++d) {
          PBWElement rhs(N);
          if (b == c) rhs = rhs + hbar * E(N, a, d);
          if (d == a) rhs = rhs - hbar * E(N, c, b);
          CHECK(commutator(E(N, a, b), E(N, c, d)) == rhs);
        }
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> idx(1, N), len(1, 3);
  auto random_word = [&] {
    PBWElement x = PBWElement::one(N);
    int l = len(rng);
    for (int i = 0; i < l; ++i) x = x * E(N, idx(rng), idx(rng));
    return x + S(N, Polynomial(static_cast<long>(idx(rng))));
  };
  for (int it = 0; it < 25; ++it) {
    PBWElement x = random_word(), y = random_word(), z = random_word();
    CHECK((x * y) * z == x * (y * z));
    // hbar-degree never exceeds the number of reorderings.
    PBWElement xy = x * y;
    for (const auto& [w, c] : xy.terms()) CHECK(c.degree_in(Var::hbar()) <= 6);
  }
}

TEST_CASE("quantum minor examples and forms") {
  const int N = 2;
  CHECK(quantum_minor(N, {1}, {2}) == U(E(N, 1, 2)));
  CHECK(quantum_minor(N, {2}, {2}) == T(N, 2, 2, 0));
  CHECK(quantum_minor(N, {1, 1}, {1, 2}).is_zero());
  CHECK(quantum_minor(N, {1, 2}, {2, 2}).is_zero());
  U expected = T(N, 1, 1, 0) * T(N, 2, 2, 1) - U(E(N, 2, 1) * E(N, 1, 2));
  CHECK(quantum_minor(N, {1, 2}, {1, 2}) == expected);
  CHECK(quantum_minor(N, {1, 2}, {1, 2}).degree() == 2);
  CHECK_THROWS(quantum_minor(N, {1, 2}, {1}));

  for (int n = 1; n <= 3; ++n)
    for (int m = 1; m <= n; ++m)
      for (const auto& a : index_tuples(n, m))
        for (const auto& b : index_tuples(n, m)) {
          U row = quantum_minor(n, a, b);
          CHECK(row == quantum_minor_column_form(n, a, b));
          if (m >= 2) {
            auto a2 = a, b2 = b;
            std::swap(a2[0], a2[1]);
            std::swap(b2[m - 2], b2[m - 1]);
            CHECK(quantum_minor(n, a2, b) == row.scaled(Polynomial(-1L)));
            CHECK(quantum_minor(n, a, b2) == row.scaled(Polynomial(-1L)));
          }
        }
}

TEST_CASE("quantum minor expansions along the first and last row and column") {
  const int N = 3;
  for (int m = 2; m <= 3; ++m)
    for (const auto& a : index_tuples(N, m))
      for (const auto& b : index_tuples(N, m)) {
        U full = quantum_minor(N, a, b);
        U s1, s2, s3, s4;
        std::vector<int> b_head(b.begin(), b.end() - 1), a_head(a.begin(), a.end() - 1);
        std::vector<int> b_tail(b.begin() + 1, b.end()), a_tail(a.begin() + 1, a.end());
        Polynomial h = hbar;
        for (int l = 1; l <= m; ++l) {
          auto sign = [](int e) { return Polynomial(e % 2 ? -1L : 1L); };
          s1 = s1 + (minor_or_one(N, without(a, l - 1), b_head) * T(N, a[l - 1], b[m - 1], m - 1)).scaled(sign(m - l));
          s2 = s2 + (minor_or_one(N, a_head, without(b, l - 1)).substitute(Polynomial(1L), -h) * T(N, a[m - 1], b[l - 1], 0))
                        .scaled(sign(m - l));
          s3 = s3 + (T(N, a[l - 1], b[0], 0) * minor_or_one(N, without(a, l - 1), b_tail).substitute(Polynomial(1L), -h))
                        .scaled(sign(l - 1));
          s4 = s4 + (T(N, a[0], b[l - 1], m - 1) * minor_or_one(N, a_tail, without(b, l - 1))).scaled(sign(l - 1));
        }
        CHECK(s1 == full);
        CHECK(s2 == full);
        CHECK(s3 == full);
        CHECK(s4 == full);
      }
}

TEST_CASE("commutator of a generator with a quantum minor") {
  for (int N = 2; N <= 3; ++N)
    for (int m = 1; m <= 2; ++m)
      for (const auto& a : index_tuples(N, m))
        for (const auto& b : index_tuples(N, m))
          for (int k = 1; k <= N; ++k)
            for (int l = 1; l <= N; ++l) {
              U minor = quantum_minor(N, a, b);
              PBWElement e = E(N, k, l);
              U lhs = U(e) * minor - minor * U(e);
              U rhs;
              for (int i = 0; i < m; ++i) {
                if (a[i] == l) {
                  auto a2 = a;
                  a2[i] = k;
                  rhs = rhs + quantum_minor(N, a2, b).scaled(hbar);
                }
                if (b[i] == k) {
                  auto b2 = b;
                  b2[i] = l;
                  rhs = rhs - quantum_minor(N, a, b2).scaled(hbar);
                }
              }
              CHECK(lhs == rhs);
            }
}

TEST_CASE("quantum determinant") {
  CHECK(quantum_determinant(1) == U::linear(-E(1, 1, 1), PBWElement::one(1)));
  CHECK(quantum_determinant(1).to_string() == "u - E11");
  CHECK(quantum_determinant(2).to_string() == "u^2 + (-E11 - E22 - hbar)*u + (-E21*E12 + E11*E22 + hbar*E22)");
  const int N = 2;
  U u = U::linear(PBWElement(N), PBWElement::one(N));
  U expected = (u - U(E(N, 1, 1) + S(N, hbar))) * (u - U(E(N, 2, 2))) - U(E(N, 2, 1) * E(N, 1, 2));
  CHECK(quantum_determinant(N) == expected);
  for (int n = 1; n <= 3; ++n) {
    U A = quantum_determinant(n);
    CHECK(A.degree() == n);
    CHECK(A.coeff(n) == PBWElement::one(n));
    for (const auto& c : A.coefficients())
      for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) CHECK(commutator(c, E(n, a, b)).is_zero());
  }
}

TEST_CASE("quantum comatrix identity") {
  CHECK(quantum_comatrix(1)[0][0] == U(PBWElement::one(1)));
  for (int N = 1; N <= 3; ++N)
    for (const auto& row : comatrix_identity_residual(N))
      for (const auto& e : row) CHECK(e.is_zero());
}

TEST_CASE("Harish-Chandra projection") {
  CHECK(hc_projection(PBWElement::one(2)) == Polynomial(1L));
  CHECK(hc_projection(E(2, 1, 2) * E(2, 2, 1)) == parse_polynomial("hbar*(w1 - hbar) - hbar*w2"));
  CHECK(hc_projection(E(2, 2, 1)).is_zero());
  for (int N = 1; N <= 3; ++N) {
    Polynomial expected(1L);
    for (int i = 1; i <= N; ++i) expected *= Polynomial(Var::u()) - Polynomial(Var::w(i));
    CHECK(hc_projection(quantum_determinant(N)) == expected);
  }
}

TEST_CASE("transposition maps") {
  CHECK(transpose_auto(E(3, 1, 2) * E(3, 2, 3), Transpose::anti) == E(3, 3, 2) * E(3, 2, 1));
  CHECK(transpose_auto(E(3, 1, 2) * E(3, 2, 3), Transpose::minus) == E(3, 2, 1) * E(3, 3, 2));
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> idx(1, 3);
  for (int it = 0; it < 15; ++it) {
    PBWElement x = E(3, idx(rng), idx(rng)) * E(3, idx(rng), idx(rng)) * E(3, idx(rng), idx(rng)) + E(3, idx(rng), idx(rng));
    PBWElement y = E(3, idx(rng), idx(rng)) * E(3, idx(rng), idx(rng));
    CHECK(transpose_auto(transpose_auto(x, Transpose::minus), Transpose::minus) == x);
    CHECK(transpose_auto(transpose_auto(x, Transpose::anti), Transpose::anti) == x);
    CHECK(transpose_auto(x * y, Transpose::anti) == transpose_auto(y, Transpose::anti) * transpose_auto(x, Transpose::anti));
    CHECK(transpose_auto(x * y, Transpose::minus) == transpose_auto(x, Transpose::minus) * transpose_auto(y, Transpose::minus));
  }
  for (int N = 1; N <= 3; ++N) {
    U A = quantum_determinant(N);
    U image = A.map([](const PBWElement& c) { return transpose_auto(c, Transpose::minus); });
    U expected = A.substitute(Polynomial(-1L), hbar.scaled(N - 1));
    if (N % 2) expected = expected.scaled(Polynomial(-1L));
    CHECK(image == expected);
  }
}

TEST_CASE("free module basics and right action") {
  auto v = [](int N, std::vector<int> i) { return FreeModuleElement::basis(N, false, i); };
  auto phi = [](int N, std::vector<int> i) { return FreeModuleElement::basis(N, true, i); };
  CHECK(right_act(v(1, {1}), Generator{1, 1}) == v(1, {1}).left_mul(E(1, 1, 1)) - v(1, {1}).scaled(hbar));
  CHECK(right_act(v(2, {2}), Generator{1, 2}) == v(2, {2}).left_mul(E(2, 1, 2)) - v(2, {1}).scaled(hbar));
  CHECK(omega_apply(v(1, {1}), 1) == v(1, {1}).left_mul(E(1, 1, 1)));
  CHECK(omega_apply(v(2, {1}), 1) == v(2, {1}).left_mul(E(2, 1, 1)) + v(2, {2}).left_mul(E(2, 1, 2)));
  CHECK(omega_apply(v(2, {1}), 1).to_string() == "E11*v1 + E12*v2");
  CHECK(omega_star_apply(phi(1, {1}), 1) == phi(1, {1}).left_mul(E(1, 1, 1) + S(1, hbar)));
  CHECK(omega_star_apply(phi(1, {1}), 1).to_string() == "(E11 + hbar)*phi1");
  CHECK(omega_star_apply(phi(2, {1}), 1) ==
        right_act(phi(2, {1}), Generator{1, 1}) + right_act(phi(2, {2}), Generator{2, 1}));
  CHECK_THROWS(omega_star_apply(v(2, {1}), 1));
  CHECK_THROWS(omega_apply(v(2, {1}), 2));

  // Right-module axiom and compatibility with the left action.
  for (bool dual : {false, true})
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b)
        for (int c = 1; c <= 2; ++c)
          for (int d = 1; d <= 2; ++d) {
            FreeModuleElement x = FreeModuleElement::basis(2, dual, {1, 2}, E(2, 2, 1) + S(2, Polynomial(3L)));
            FreeModuleElement lhs = right_act(right_act(x, Generator{a, b}), Generator{c, d}) -
                                    right_act(right_act(x, Generator{c, d}), Generator{a, b});
            CHECK(lhs == right_act(x, commutator(E(2, a, b), E(2, c, d))));
            CHECK(right_act(x.left_mul(E(2, c, d)), Generator{a, b}) == right_act(x, Generator{a, b}).left_mul(E(2, c, d)));
          }
}

TEST_CASE("Omega is a bimodule map commuting with the center") {
  for (bool dual : {false, true})
    for (int N = 1; N <= 2; ++N) {
      U A = quantum_determinant(N);
      for (int a = 1; a <= N; ++a) {
        FreeModuleElement x = FreeModuleElement::basis(N, dual, {a}, E(N, 1, N) + PBWElement::one(N));
        for (int i = 1; i <= N; ++i)
          for (int j = 1; j <= N; ++j) {
            CHECK(omega_apply(right_act(x, Generator{i, j}), 1) == right_act(omega_apply(x, 1), Generator{i, j}));
            CHECK(omega_apply(x.left_mul(E(N, i, j)), 1) == omega_apply(x, 1).left_mul(E(N, i, j)));
          }
        for (const auto& c : A.coefficients())
          CHECK(omega_apply(x.left_mul(c), 1) == omega_apply(x, 1).left_mul(c));
      }
    }
}

TEST_CASE("Omega_i satisfy the degenerate affine Hecke relations") {
  for (bool dual : {false, true})
    for (int N = 1; N <= 2; ++N)
      for (int k = 2; k <= 3; ++k)
        for (const auto& idx : index_tuples(N, k))
          for (PBWElement c : {PBWElement::one(N), E(N, N, 1), E(N, 1, 1) * E(N, 1, N)}) {
            FreeModuleElement x = FreeModuleElement::basis(N, dual, idx, c);
            for (int i = 1; i < k; ++i) CHECK(hecke_axiom_residual(x, i).is_zero());
            for (int i = 1; i <= k; ++i)
              for (int j = i + 1; j <= k; ++j)
                CHECK(omega_apply(omega_apply(x, i), j) == omega_apply(omega_apply(x, j), i));
          }
}

TEST_CASE("Cayley-Hamilton") {
  for (int N = 1; N <= 3; ++N)
    for (bool dual : {false, true})
      for (const auto& r : cayley_hamilton_residual(N, dual)) CHECK(r.is_zero());
}

TEST_CASE("coefficientwise conjugation by the center") {
  auto all_zero = [](const std::vector<FreeModuleElement>& rs) {
    for (const auto& r : rs)
      if (!r.is_zero()) return false;
    return true;
  };
  for (int N = 1; N <= 2; ++N) {
    CHECK(all_zero(conjugation_residual(N, false, true)));
    CHECK(all_zero(conjugation_residual(N, true, false)));
    // The hbar shift is on the other side for the two modules.
    CHECK_FALSE(all_zero(conjugation_residual(N, false, false)));
    CHECK_FALSE(all_zero(conjugation_residual(N, true, true)));
  }
}

TEST_CASE("rank guard") {
  CHECK_THROWS(quantum_determinant(5));
  CHECK_THROWS(check_rank(0));
  CHECK_NOTHROW(check_rank(6, 8));
}

TEST_CASE("PBW parser") {
  CHECK(parse_pbw("E12*E21", 2) == E(2, 1, 2) * E(2, 2, 1));
  CHECK(parse_pbw("E21*E12 + hbar*E11 - hbar*E22", 2) == E(2, 1, 2) * E(2, 2, 1));
  CHECK_THROWS_AS(parse_pbw("E31", 2), ParseError);
  CHECK_THROWS_AS(parse_pbw("E11/E22", 2), ParseError);
  for (int N = 1; N <= 3; ++N) {
    PBWElement a = quantum_determinant(N).coeff(N - 1);
    CHECK(parse_pbw(a.to_string(), N) == a);
  }
  CHECK(parse_pbw("(E11 + 1)^2/2", 1) == Polynomial(mpq_class(1, 2)) * (E(1, 1, 1) * E(1, 1, 1) + Polynomial(2L) * E(1, 1, 1) + PBWElement::one(1)));
}
