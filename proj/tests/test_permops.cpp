#include "doctest.h"
#include "yangcheck/expression.hpp"
#include "yangcheck/permops.hpp"

using namespace yc;

namespace {

RationalFunction rf(const char* s) { return parse_rational(s); }
const RationalFunction kappa = Var::kappa();

}  // namespace

TEST_CASE("permutations") {
  Perm a{1, 2, 0}, b{1, 0, 2};
  CHECK(perm_mul(a, b) == Perm{2, 1, 0});
  CHECK(perm_mul(a, perm_inverse(a)) == perm_identity(3));
  CHECK(perm_sign(a) == 1);
  CHECK(perm_sign(b) == -1);
  CHECK(all_perms(4).size() == 24);
  for (const Perm& p : all_perms(4)) {
    Perm q = perm_identity(4);
    for (int i : reduced_word(p)) q = perm_mul(q, perm_transposition(4, i, i + 1));
    CHECK(q == p);
  }
}

TEST_CASE("perm_compose examples") {
  auto P12 = PermAlgebraElement::term(2, {1, 0}, 1L);
  CHECK(P12 * P12 == PermAlgebraElement::identity(2));
  auto z1 = PermAlgebraElement::term(2, {0, 1}, Var::z(1));
  CHECK((P12 * z1).to_string() == "(z2)*[2,1]");
  auto f = PermAlgebraElement::term(2, {0, 1}, rf("1/(z1-z2)"));
  auto g = PermAlgebraElement::term(2, {0, 1}, rf("z1^2"));
  CHECK(f * g == PermAlgebraElement::term(2, {0, 1}, rf("z1^2/(z1-z2)")));
  CHECK_THROWS(P12 * PermAlgebraElement::identity(3));
}

TEST_CASE("su_r") {
  RationalFunction xi = Var::xi();
  auto r = su_r(1, 2, xi, kappa, 2);
  auto expect = PermAlgebraElement::term(2, {0, 1}, rf("(z1-z2+kappa)/((z1-z2)*kappa)")) -
                PermAlgebraElement::term(2, {1, 0}, rf("(z1-z2+xi)/((z1-z2)*xi)"));
  CHECK(r == expect);
  CHECK(r.terms().size() == 2);
  CHECK_THROWS(su_r(1, 1, xi, kappa, 2));
}

TEST_CASE("QYBE at k=3") {
  RationalFunction x1 = Var::xi(1), x2 = Var::xi(2), x3 = Var::xi(3);
  auto lhs = su_r(1, 2, x1 - x2, kappa, 3) * su_r(1, 3, x1 - x3, kappa, 3) * su_r(2, 3, x2 - x3, kappa, 3);
  auto rhs = su_r(2, 3, x2 - x3, kappa, 3) * su_r(1, 3, x1 - x3, kappa, 3) * su_r(1, 2, x1 - x2, kappa, 3);
  CHECK(lhs == rhs);
  // A wrong spectral argument breaks it.
  auto bad = su_r(1, 2, x1 - x2, kappa, 3) * su_r(1, 3, x1 - x2, kappa, 3) * su_r(2, 3, x2 - x3, kappa, 3);
  CHECK(bad != rhs);
}

TEST_CASE("affinization is exact") {
  RationalFunction xi = Var::xi();
  for (int k = 2; k <= 3; ++k)
    for (int i = 1; i < k; ++i) {
      auto lhs = su_rcheck(i, -kappa * xi, kappa, k).scaled(kappa);
      auto rhs = hecke_sigma_element(i, kappa, k) + PermAlgebraElement::identity(k).scaled(xi.inverse());
      CHECK(lhs == rhs);
    }
}

TEST_CASE("braiding element at xi = kappa squares to a multiple of itself") {
  auto r = su_rcheck(1, kappa, kappa, 2);
  CHECK(r * r == r.scaled(RationalFunction(-2L) / kappa));
}

TEST_CASE("kappa-symmetrizers match closed forms") {
  CHECK(su_symmetrizer(1, kappa, Sign::plus) == PermAlgebraElement::identity(1));
  auto h2 = su_symmetrizer(2, kappa, Sign::plus);
  CHECK(h2 == PermAlgebraElement::term(2, {0, 1}, g_factor(rf("z1-z2"), kappa)) +
                  PermAlgebraElement::term(2, {1, 0}, g_factor(rf("z2-z1"), kappa)));
  for (int k = 2; k <= 4; ++k)
    CHECK(su_symmetrizer(k, kappa, Sign::plus) == su_symmetrizer_closed(k, kappa, Sign::plus));
  for (int k = 2; k <= 3; ++k)
    CHECK(su_symmetrizer(k, kappa, Sign::minus) == su_symmetrizer_closed(k, kappa, Sign::minus));
}

TEST_CASE("Hecke idempotents from R-matrices") {
  auto e2 = hecke_idempotent_via_r(2, Sign::plus);
  CHECK(e2 == PermAlgebraElement::term(2, {0, 1}, rf("1/2")) + PermAlgebraElement::term(2, {1, 0}, rf("1/2")));
  CHECK(hecke_idempotent_via_r(2, Sign::minus) ==
        PermAlgebraElement::term(2, {0, 1}, rf("1/2")) - PermAlgebraElement::term(2, {1, 0}, rf("1/2")));
  for (int k = 2; k <= 5; ++k)
    for (Sign s : {Sign::plus, Sign::minus}) {
      auto e = hecke_idempotent_via_r(k, s);
      CHECK(e == group_idempotent(k, s));
      CHECK(e * e == e);
    }
}

TEST_CASE("Hecke braid relation with spectral parameters") {
  RationalFunction x1 = Var::xi(1), x2 = Var::xi(2), x3 = Var::xi(3);
  auto lhs = hecke_rcheck(1, x2 - x3, 3) * hecke_rcheck(2, x1 - x3, 3) * hecke_rcheck(1, x1 - x2, 3);
  auto rhs = hecke_rcheck(2, x1 - x2, 3) * hecke_rcheck(1, x1 - x3, 3) * hecke_rcheck(2, x2 - x3, 3);
  CHECK(lhs == rhs);
}

TEST_CASE("sign normalisation of the antisymmetric product") {
  // With prefactor (-1)^{k(k+1)/2}/k! the product is -e_k^- for odd k >= 3.
  for (int k : {3, 5}) {
    auto e = hecke_idempotent_via_r(k, Sign::minus);
    CHECK(e.scaled(-1L) != group_idempotent(k, Sign::minus));
  }
}
