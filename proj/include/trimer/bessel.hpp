#pragma once

#include <vector>

namespace trimer {

// Integer-order Bessel function of the first kind J_n(x).
//
// Absolute accuracy is 1e-12 or better for |x| <= 50, |n| <= 100. Negative
// orders and negative arguments go through the reflection identities
// J_{-n}(x) = (-1)^n J_n(x) and J_n(-x) = (-1)^n J_n(x), applied as an exact
// sign flip on the non-negative evaluation, so the identities hold bit-exactly.
// Orders far above the argument (n > x + 40) whose value underflows below
// 1e-300 return exactly 0.
double bessel_j(int n, double x);

// J_0(x) .. J_nmax(x) for x >= 0 from a single downward-recurrence pass.
std::vector<double> bessel_j_all(int nmax, double x);

}  // namespace trimer
