#pragma once
// Reference q-expansions obtained without any modular symbol machinery:
// eta products and Eisenstein series. Used as ground truth for the Hecke
// eigenvalue computations.

#include "core/arith.hpp"

namespace msadj {

// Coefficients a_1..a_n (index 0 unused, set to 0) of
// prod_j eta(d_j z)^{r_j}, assuming sum d_j r_j = 24 so the product starts at q^1.
std::vector<Int> eta_product(const std::vector<std::pair<long, long>>& drs, long n);

// a_1..a_n of the discriminant form (level 1, weight 12), via eta(z)^24.
std::vector<Int> qexp_delta(long n);
// same thing through (E4^3 - E6^2)/1728, as an independent route.
std::vector<Int> qexp_delta_eisenstein(long n);
// a_1..a_n of the level 11 weight 2 form, eta(z)^2 eta(11z)^2.
std::vector<Int> qexp_11a(long n);
// a_1..a_n of the level 5 weight 4 form, eta(z)^4 eta(5z)^4.
std::vector<Int> qexp_5w4(long n);

}  // namespace msadj
