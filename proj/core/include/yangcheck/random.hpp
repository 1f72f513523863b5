#pragma once

#include <random>
#include <vector>

#include "yangcheck/polynomial.hpp"

namespace yc {

// Random polynomial in `vars` with up to `terms` terms of total degree at
// most `max_degree` and integer coefficients in [-coeff, coeff].
Polynomial random_polynomial(std::mt19937_64& rng, const std::vector<Var>& vars, int max_degree, int terms,
                             int coeff = 5);

}  // namespace yc
