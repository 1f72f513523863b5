#include "yangcheck/random.hpp"

namespace yc {

Polynomial random_polynomial(std::mt19937_64& rng, const std::vector<Var>& vars, int max_degree, int terms,
                             int coeff) {
  std::uniform_int_distribution<int> cdist(-coeff, coeff);
  std::uniform_int_distribution<int> ddist(0, max_degree);
  std::uniform_int_distribution<size_t> vdist(0, vars.empty() ? 0 : vars.size() - 1);
  std::vector<Term> out;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int d = vars.empty() ? 0 : ddist(rng);
    for (int j = 0; j < d; ++j) m = m * Monomial::of(vars[vdist(rng)]);
    out.push_back({m, mpq_class(cdist(rng))});
  }
  return Polynomial::from_terms(std::move(out));
}

}  // namespace yc
