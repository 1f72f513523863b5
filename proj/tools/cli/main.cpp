#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "yangcheck/expression.hpp"

namespace {

void print(const cli::Outcome& out, bool json) {
  if (json) {
    nlohmann::json doc = out.doc;
    if (!out.checks.empty()) {
      nlohmann::json checks = nlohmann::json::array();
      for (const auto& c : out.checks) {
        nlohmann::json item = {{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) item["detail"] = c.detail;
        checks.push_back(item);
      }
      doc["checks"] = checks;
      doc["pass"] = !out.failed();
    }
    std::cout << doc.dump(2) << "\n";
    return;
  }
  if (!out.text.empty()) std::cout << out.text << "\n";
  for (const auto& c : out.checks) {
    std::cout << c.name << ": " << (c.pass ? "PASS" : "FAIL");
    if (!c.detail.empty()) std::cout << " [" << c.detail << "]";
    std::cout << "\n";
  }
  if (!out.checks.empty()) std::cout << (out.failed() ? "FAIL" : "PASS") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for shuffle algebras, Hecke operators, quantum minors and GKLO difference operators"};
  app.require_subcommand(1);
  cli::Options opt;
  cli::Command selected = nullptr;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, cli::Command cmd) {
    CLI::App* s = parent->add_subcommand(name, help);
    s->add_flag("--json", opt.json, "emit one JSON document");
    s->callback([&selected, cmd] { selected = cmd; });
    return s;
  };
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };
  auto kl = [&](CLI::App* s) {
    s->add_option("--k", opt.k, "number of variables of f")->check(CLI::Range(1, 8));
    s->add_option("--l", opt.l, "number of variables of g")->check(CLI::Range(1, 8));
    s->add_option("--f", opt.f, "first symmetric polynomial in Y1..Yk");
    s->add_option("--g", opt.g, "second symmetric polynomial in Y1..Yl");
    s->add_option("--kappa", opt.kappa, "deformation parameter (default hbar)");
  };
  auto rank = [&](CLI::App* s) { s->add_option("--N", opt.N, "rank")->check(CLI::Range(1, 8)); };

  CLI::App* shuffle = group("shuffle", "shuffle algebra products");
  kl(leaf(shuffle, "fo", "Feigin-Odesskii product", cli::shuffle_fo));
  kl(leaf(shuffle, "hecke", "Hecke-symmetrizer product", cli::shuffle_hecke));
  kl(leaf(shuffle, "compare", "compare the two products", cli::shuffle_compare));

  CLI::App* hecke = group("hecke", "polynomial representation of the degenerate affine Hecke algebra");
  auto* hs = leaf(hecke, "sigma", "apply sigma_i to f", cli::hecke_sigma);
  hs->add_option("--i", opt.i, "generator index")->check(CLI::Range(1, 7));
  hs->add_option("--f", opt.f, "polynomial in Y");
  hs->add_option("--kappa", opt.kappa, "deformation parameter (default hbar)");
  auto* hy = leaf(hecke, "sym", "apply the (anti)symmetrizer e_k", cli::hecke_sym);
  hy->add_option("--k", opt.k)->check(CLI::Range(1, 6));
  hy->add_option("--f", opt.f, "polynomial in Y1..Yk");
  hy->add_option("--kappa", opt.kappa, "deformation parameter (default hbar)");
  hy->add_flag("--minus", opt.minus, "antisymmetrizer");
  auto* hh = leaf(hecke, "hl", "rational Hall-Littlewood function", cli::hecke_hl);
  hh->add_option("--k", opt.k)->check(CLI::Range(1, 6));
  hh->add_option("--lambda", opt.lambda, "partition, comma separated");
  auto* hsch = leaf(hecke, "schur", "Schur polynomial", cli::hecke_schur);
  hsch->add_option("--k", opt.k)->check(CLI::Range(1, 8));
  hsch->add_option("--lambda", opt.lambda, "partition, comma separated");
  auto* hp = leaf(hecke, "psum", "deformed power sum", cli::hecke_psum);
  hp->add_option("--k", opt.k)->check(CLI::Range(1, 8));
  hp->add_option("--a", opt.a)->check(CLI::Range(0, 12));

  CLI::App* perm = group("perm", "permutation-algebra R-operators");
  leaf(perm, "qybe", "Yang-Baxter equation at k=3", cli::perm_qybe)->add_option("--kappa", opt.kappa);
  auto* ps = leaf(perm, "sym", "symmetrizer product vs closed form", cli::perm_sym);
  ps->add_option("--k", opt.k)->check(CLI::Range(1, 5));
  ps->add_option("--kappa", opt.kappa);
  ps->add_flag("--minus", opt.minus, "antisymmetrizer");
  auto* pi = leaf(perm, "idem", "Hecke idempotent from R-matrices", cli::perm_idem);
  pi->add_option("--k", opt.k)->check(CLI::Range(1, 6));
  pi->add_flag("--minus", opt.minus, "antisymmetric idempotent");

  CLI::App* u = group("u", "universal enveloping algebra computations");
  auto* qm = leaf(u, "qminor", "quantum minor", cli::u_qminor);
  rank(qm);
  qm->add_option("--rows", opt.rows, "row indices, comma separated")->required();
  qm->add_option("--cols", opt.cols, "column indices, comma separated")->required();
  rank(leaf(u, "qdet", "quantum determinant A(u)", cli::u_qdet));
  auto* hc = leaf(u, "hc", "Harish-Chandra projection (of A(u) unless --x is given)", cli::u_hc);
  rank(hc);
  hc->add_option("--x", opt.x, "PBW expression in Eij");
  rank(leaf(u, "ch-check", "Cayley-Hamilton for Omega and Omega*", cli::u_ch_check));

  CLI::App* weyl = group("weyl", "Weyl algebra on matrices");
  rank(leaf(weyl, "verify", "left/right identities", cli::weyl_verify));

  CLI::App* dop = group("dop", "difference operators");
  auto* dm = leaf(dop, "mul", "product f*g", cli::dop_mul);
  rank(dm);
  dm->add_option("--f", opt.f, "left factor, shifts written u1..uN");
  dm->add_option("--g", opt.g, "right factor");

  CLI::App* gklo = group("gklo", "GKLO images of the shifted Yangian");
  auto* gi = leaf(gklo, "image", "image of a current", cli::gklo_image);
  rank(gi);
  gi->add_option("--kind", opt.kind, "x+, x-, d1, d2 or h");
  rank(leaf(gklo, "verify", "shifted Yangian relations on the images", cli::gklo_verify));
  auto* gm = leaf(gklo, "monopole", "monopole operator", cli::gklo_monopole);
  rank(gm);
  gm->add_option("--k", opt.k)->check(CLI::Range(1, 8));
  auto* gmo = leaf(gklo, "mode", "mode of a current", cli::gklo_mode);
  rank(gmo);
  gmo->add_option("--kind", opt.kind, "x+, x-, d1, d2 or h");
  gmo->add_option("--r", opt.r, "coefficient of u^-r");

  CLI::App* verify = group("verify", "aggregate suites");
  auto* va = leaf(verify, "all", "run every module suite", cli::verify_all);
  rank(va);
  va->add_option("--seed", opt.seed, "seed for random inputs");
  va->add_option("--max-degree", opt.max_degree, "degree of random polynomials")->check(CLI::Range(0, 6));
  va->add_option("--R", opt.R, "order of the shuffle current relation check")->check(CLI::Range(0, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    cli::Outcome out = selected(opt);
    print(out, opt.json);
    return out.failed() ? 1 : 0;
  } catch (const yc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
