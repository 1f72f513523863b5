#include <random>

#include "doctest.h"
#include "yangcheck/diffops.hpp"
#include "yangcheck/expression.hpp"
#include "yangcheck/random.hpp"

using namespace yc;

namespace {

using D = DifferenceOperator;
RationalFunction R(const char* s) { return parse_rational(s); }
D C(int N, const char* s) { return D::coefficient(N, R(s)); }

D random_operator(std::mt19937_64& rng, int N) {
  std::vector<Var> ws;
  for (int i = 1; i <= N; ++i) ws.push_back(Var::w(i));
  ws.push_back(Var::hbar());
  std::uniform_int_distribution<int> sh(-2, 2), nterms(1, 3), pick(0, 1);
  D r(N);
  int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    D::Shift m(N);
    for (auto& e : m) e = sh(rng);
    RationalFunction c = random_polynomial(rng, ws, 2, 3);
    if (pick(rng)) c = c / RationalFunction(Polynomial(Var::w(1)) - Polynomial(Var::w(N)) + Polynomial(Var::hbar()).scaled(N));
    r.add(m, c);
  }
  return r;
}

}  // namespace

TEST_CASE("shift rule") {
  CHECK(D::shift(2, 1) * C(2, "w1") == C(2, "w1 + hbar") * D::shift(2, 1));
  CHECK(D::shift(2, 1) * D::shift(2, 1, -1) == C(2, "1"));
  CHECK(dop_commutator(D::shift(2, 1), C(2, "w2")).is_zero());
  CHECK(dop_commutator(D::shift(2, 1, -1), C(2, "w1")) == D::shift(2, 1, -1).scaled(R("-hbar")));
  CHECK(dop_commutator(C(2, "w1^2"), C(2, "1/(w1 - w2)")).is_zero());
  CHECK(dop_commutator(D::shift(2, 1), D::shift(2, 2, -1)).is_zero());
}

TEST_CASE("associativity, conjugation and inverses") {
  std::mt19937_64 rng(99);
  for (int N = 1; N <= 4; ++N)
    for (int it = 0; it < 6; ++it) {
      D a = random_operator(rng, N), b = random_operator(rng, N), c = random_operator(rng, N);
      CHECK((a * b) * c == a * (b * c));
      // Jacobi.
      D jac = dop_commutator(a, dop_commutator(b, c)) + dop_commutator(b, dop_commutator(c, a)) +
              dop_commutator(c, dop_commutator(a, b));
      CHECK(jac.is_zero());
      // Conjugation by U^m is the shift automorphism.
      D::Shift m(N);
      for (int i = 0; i < N; ++i) m[i] = i % 2 ? -1 : 2;
      D Um = D::monomial(N, m);
      RationalFunction f = R("w1^2 - hbar*w1 + 3");
      Substitution s;
      for (int i = 0; i < N; ++i) s.push_back({Var::w(i + 1), Polynomial(Var::hbar()).scaled(m[i])});
      CHECK(Um * D::coefficient(N, f) * Um.inverse() == D::coefficient(N, f.shift(s)));
      // Single terms are invertible on both sides.
      D single = D::monomial(N, m, R("(w1 + 2)/(w1 - w2 + hbar)"));
      CHECK(single * single.inverse() == C(N, "1"));
      CHECK(single.inverse() * single == C(N, "1"));
    }
}

TEST_CASE("admissibility") {
  CHECK_FALSE(coeffs_admissible(D::monomial(1, {1}, R("1/w1")), 1));
  CHECK(coeffs_admissible(C(2, "w1^2 + hbar"), 2));
  CHECK(coeffs_admissible(D::monomial(2, {-1, 0}, R("1/((u - w1)*(w1 - w2))")), 2));
  CHECK_FALSE(coeffs_admissible(D::monomial(2, {-1, 0}, R("1/(w1 + w2)")), 2));
}

TEST_CASE("printing and parsing") {
  D x = D::monomial(2, {-1, 1}, R("w1 + hbar")) + C(2, "1/(w1 - w2)") + D::shift(2, 1);
  CHECK(x.to_string() == "(w1 + hbar)*u1^-1*u2 + (1/(w1 - w2)) + u1");
  CHECK(parse_difference_operator(x.to_string(), 2) == x);
  CHECK(parse_difference_operator("u1*w1", 2) == C(2, "w1 + hbar") * D::shift(2, 1));
  CHECK(parse_difference_operator("u1^-1*u1", 1) == C(1, "1"));
  CHECK(parse_difference_operator("u2^3", 2) == D::shift(2, 2, 3));
  CHECK_THROWS_AS(parse_difference_operator("u3", 2), ParseError);
  CHECK_THROWS_AS(parse_difference_operator("foo", 2), ParseError);
  CHECK_THROWS_AS(parse_difference_operator("(u1 + u2)^-1", 2), ParseError);
  CHECK_THROWS(D::shift(1, 1, 17));
}

TEST_CASE("permuting indices") {
  D x = D::monomial(2, {-1, 0}, R("1/(w1 - w2)"));
  D y = x.permuted({1, 0});
  CHECK(y == D::monomial(2, {0, -1}, R("1/(w2 - w1)")));
  CHECK(y.permuted({1, 0}) == x);
}
