#include "commands.hpp"
#include "doctest.h"
#include "yangcheck/diffops.hpp"
#include "yangcheck/envelope.hpp"
#include "yangcheck/expression.hpp"
#include "yangcheck/gklo.hpp"
#include "yangcheck/shuffle.hpp"

using namespace yc;

TEST_CASE("results round-trip through the parsers") {
  cli::Options o;
  o.k = 2;
  o.l = 1;
  o.f = "Y1^2 + Y2^2";
  o.g = "Y1";
  Polynomial fo = fo_product(parse_polynomial(o.f), 2, parse_polynomial(o.g), 1, Var::hbar());
  CHECK(parse_polynomial(cli::shuffle_fo(o).doc["result"].get<std::string>()) == fo);

  for (int N = 1; N <= 3; ++N) {
    o.N = N;
    for (const char* kind : {"x+", "x-", "d1", "d2", "h"}) {
      o.kind = kind;
      auto text = cli::gklo_image(o).doc["result"].get<std::string>();
      CHECK(parse_difference_operator(text, N) == yc::gklo_image(*parse_current_kind(kind), N).value);
    }
    auto qdet = cli::u_qdet(o).doc;
    for (int i = 0; i <= N; ++i)
      CHECK(parse_pbw(qdet["A"][i].get<std::string>(), N) == quantum_determinant(N).coeff(N - i));
    o.k = 1;
    auto mono = cli::gklo_monopole(o).doc;
    CHECK(parse_difference_operator(mono["result"].get<std::string>(), N) == monopole(1, N).computed);
  }
}

TEST_CASE("identical invocations give identical output") {
  cli::Options o;
  o.N = 2;
  CHECK(cli::verify_all(o).checks.size() == cli::verify_all(o).checks.size());
  auto a = cli::gklo_verify(o), b = cli::gklo_verify(o);
  REQUIRE(a.checks.size() == b.checks.size());
  for (size_t i = 0; i < a.checks.size(); ++i) CHECK(a.checks[i].name == b.checks[i].name);
  o.kind = "x-";
  CHECK(cli::gklo_image(o).text == cli::gklo_image(o).text);
  CHECK_FALSE(cli::verify_all(o).failed());
}

TEST_CASE("errors surface as exceptions for the dispatcher") {
  cli::Options o;
  o.f = "Y1 +";
  CHECK_THROWS_AS(cli::shuffle_fo(o), ParseError);
  o.kind = "nope";
  CHECK_THROWS_AS(cli::gklo_image(o), std::invalid_argument);
}
