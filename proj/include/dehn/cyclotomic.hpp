#pragma once

#include <cstdint>

#include "dehn/polynomial.hpp"
#include "dehn/rational.hpp"

namespace dehn {

// d-th cyclotomic polynomial, monic of degree phi(d): exact division of
// t^d - 1 by the product of the cyclotomic polynomials of the proper
// divisors of d.
IntPolynomial cyclotomic_poly(int d);

// Resultant over Z via the fraction-free subresultant scheme.  When f is
// monic this is the product of g over the roots of f.  Requires f nonzero.
Integer resultant(const IntPolynomial& f, const IntPolynomial& g);

// Cyclotomic norm |f(t)|_d: the absolute value of the product of f over the
// primitive d-th roots of unity, evaluated as |Res(Phi_d, t^-k f)| after a
// Laurent shift making the constant term nonzero.  The shift preserves the
// value because each root of unity has norm +-1.  Requires f nonzero, d >= 1.
Integer norm_d(const LaurentPolynomial& f, int d);

// Closed form (5q^2 - 1)^2 for the degree-5 cover norm of the figure-eight
// knot after 2/q-surgery; q must be odd.
Integer fig8_cover_norm(std::int64_t q);

// sqrt(norm_value) > 4q^2, evaluated exactly as norm_value > 16 q^4.
bool hypothesis_24_holds(const Integer& norm_value, std::int64_t q);

}  // namespace dehn
