#include "doctest.h"
#include "yangcheck/envelope.hpp"
#include "yangcheck/weylmat.hpp"

using namespace yc;

namespace {
const Polynomial hbar = Var::hbar();
WeylElement x(int N, int i, int j) { return WeylElement::x(N, i, j); }
WeylElement d(int N, int i, int j) { return WeylElement::d(N, i, j); }
}  // namespace

TEST_CASE("Weyl normal ordering") {
  CHECK(d(1, 1, 1) * x(1, 1, 1) == x(1, 1, 1) * d(1, 1, 1) + WeylElement::scalar(1, hbar));
  CHECK(d(2, 1, 1) * x(2, 1, 2) == x(2, 1, 2) * d(2, 1, 1));
  WeylElement xd = x(1, 1, 1) * d(1, 1, 1);
  CHECK((xd * xd).to_string() == "x11^2*d11^2 + hbar*x11*d11");
  // d^2 x^2 = x^2 d^2 + 4 hbar x d + 2 hbar^2.
  WeylElement dd = d(1, 1, 1) * d(1, 1, 1), xx = x(1, 1, 1) * x(1, 1, 1);
  CHECK(dd * xx == xx * dd + (hbar.scaled(4)) * xd + WeylElement::scalar(1, hbar.pow(2).scaled(2)));
  // Associativity on mixed words.
  WeylElement a = d(2, 1, 2) * x(2, 1, 2) + x(2, 2, 1), b = d(2, 1, 2) * d(2, 2, 1), c = x(2, 2, 1) * x(2, 1, 2) * x(2, 1, 2);
  CHECK((a * b) * c == a * (b * c));
}

TEST_CASE("E^R and E^L") {
  auto ER1 = build_E(Side::right, 1), EL1 = build_E(Side::left, 1);
  CHECK(ER1[0][0] == x(1, 1, 1) * d(1, 1, 1));
  CHECK(EL1[0][0] == -(x(1, 1, 1) * d(1, 1, 1)));
  // E^L = -D X + hbar N Id.
  for (int N = 1; N <= 2; ++N) {
    auto EL = build_E(Side::left, N);
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j) {
        WeylElement dx(N);
        for (int a = 1; a <= N; ++a) dx = dx + d(N, i, a) * x(N, j, a);
        WeylElement expected = -dx + (i == j ? WeylElement::scalar(N, hbar.scaled(N)) : WeylElement(N));
        CHECK(EL[i - 1][j - 1] == expected);
      }
  }
  const int N = 2;
  auto ER = build_E(Side::right, N), EL = build_E(Side::left, N);
  CHECK(commutator(ER[0][0], ER[0][1]) == hbar * ER[0][1]);
  CHECK(commutator(ER[0][1], EL[1][0]).is_zero());
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c)
        for (int e = 0; e < N; ++e) {
          for (const auto* M : {&ER, &EL}) {
            WeylElement rhs(N);
            if (b == c) rhs = rhs + hbar * (*M)[a][e];
            if (e == a) rhs = rhs - hbar * (*M)[c][b];
            CHECK(commutator((*M)[a][b], (*M)[c][e]) == rhs);
          }
          CHECK(commutator(ER[a][b], EL[c][e]).is_zero());
        }
}

TEST_CASE("generator map to Weyl algebra agrees with PBW products") {
  const int N = 2;
  auto ER = build_E(Side::right, N);
  auto image = [&](const PBWElement& p) {
    WeylElement r(N);
    for (const auto& [w, c] : p.terms()) {
      WeylElement t = WeylElement::scalar(N, c);
      for (char id : w) {
        Generator g = pbw_generator(N, id);
        t = t * ER[g.i - 1][g.j - 1];
      }
      r = r + t;
    }
    return r;
  };
  for (int a = 1; a <= N; ++a)
    for (int b = 1; b <= N; ++b)
      for (int c = 1; c <= N; ++c)
        for (int e = 1; e <= N; ++e) {
          PBWElement prod = PBWElement::generator(N, a, b) * PBWElement::generator(N, c, e) * PBWElement::generator(N, b, a);
          CHECK(image(prod) == ER[a - 1][b - 1] * ER[c - 1][e - 1] * ER[b - 1][a - 1]);
        }
}

TEST_CASE("left/right identities") {
  // N = 1: both determinants read u + x d.
  auto one = WeylElement::one(1);
  auto EL = build_E(Side::left, 1);
  auto AL = quantum_determinant<WeylElement>([&](int a, int b) { return EL[a - 1][b - 1]; }, one, 1);
  CHECK(AL == UPoly<WeylElement>::linear(x(1, 1, 1) * d(1, 1, 1), one));
  for (int N = 1; N <= 3; ++N) {
    WeylReport r = verify_lr_identities(N);
    REQUIRE(r.checks.size() == 3);
    for (const auto& c : r.checks) {
      INFO(c.name << " " << c.first_failure);
      CHECK(c.pass);
    }
    CHECK(r.pass());
  }
  CHECK_THROWS(verify_lr_identities(4));
}
