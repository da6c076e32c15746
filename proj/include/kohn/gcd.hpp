// Exact multivariate GCD and squarefree parts over Q(i).
//
// Recursive content / primitive-part reduction in a main variable with a
// subresultant PRS driving the pseudo-remainder chain. Results are
// normalized monic under grevlex, so gcds are canonical representatives.

#pragma once

#include "kohn/polynomial.hpp"

namespace kohn {

// Degree in one variable (-1 for the zero polynomial).
int degree_in(const Polynomial& p, int var);

// Coefficient of var^k, as a polynomial with zero exponent in var.
Polynomial coefficient_of_power(const Polynomial& p, int var, int k);

// Monic under grevlex; divides both inputs exactly; gcd(0,0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// Same irreducible factors as p, each to multiplicity one:
// p / gcd(p, dp/dz_1, ..., dp/dz_n) iterated to a fixed point, monic.
// Throws on zero input.
Polynomial squarefree_part(const Polynomial& p);

} // namespace kohn
