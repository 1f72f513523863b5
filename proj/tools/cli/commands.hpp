#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace cli {

struct Options {
  int N = 2, k = 1, l = 1, R = 4, r = 1, a = 1, i = 1;
  int max_degree = 3;
  std::uint64_t seed = 1;
  bool json = false, dual = false, minus = false;
  std::string f = "1", g = "1", x, kind = "x+", kappa, lambda = "1", rows, cols;
};

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

// Either a single canonical value or a list of checks.
struct Outcome {
  std::string text;
  nlohmann::json doc = nlohmann::json::object();
  std::vector<Check> checks;
  bool failed() const;
};

using Command = Outcome (*)(const Options&);

Outcome shuffle_fo(const Options&);
Outcome shuffle_hecke(const Options&);
Outcome shuffle_compare(const Options&);
Outcome hecke_sigma(const Options&);
Outcome hecke_sym(const Options&);
Outcome hecke_hl(const Options&);
Outcome hecke_schur(const Options&);
Outcome hecke_psum(const Options&);
Outcome perm_qybe(const Options&);
Outcome perm_sym(const Options&);
Outcome perm_idem(const Options&);
Outcome u_qminor(const Options&);
Outcome u_qdet(const Options&);
Outcome u_hc(const Options&);
Outcome u_ch_check(const Options&);
Outcome weyl_verify(const Options&);
Outcome dop_mul(const Options&);
Outcome gklo_image(const Options&);
Outcome gklo_verify(const Options&);
Outcome gklo_monopole(const Options&);
Outcome gklo_mode(const Options&);
Outcome verify_all(const Options&);

}  // namespace cli
