#pragma once

#include <gmpxx.h>

#include "chernratio/chern_poly.hpp"

namespace chernratio {

/// td_d in c_1..c_d with constant rational coefficients. Built from the
/// series x/(1-e^{-x}) over formal Chern roots: take its logarithm, convert
/// the power sums to c_i by Newton's identities, exponentiate.
ChernPoly todd_polynomial(int d);

/// td_n, which evaluates to χ(X, O_X) on the Chern numbers of an n-fold.
ChernPoly chi_structure_sheaf_functional(int n);

/// prod over primes p of p^{floor(d/(p-1))}; every denominator of td_d
/// divides it (12, 24, 720, 1440, 60480 for d = 2..6).
mpz_class todd_denominator_bound(int d);

}  // namespace chernratio
