#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dehn/polynomial.hpp"

namespace dehn {

struct ParseError : std::invalid_argument {
    ParseError(const std::string& what, std::size_t position);
    std::size_t position;
};

// Laurent polynomial text: terms "coeff", "t", "coeff t", optionally with
// "^exponent" (exponent may be negative), joined by '+'/'-'; whitespace is
// insignificant and the Unicode minus sign is accepted.
LaurentPolynomial parse_laurent(std::string_view src);

// Canonical rendering, descending exponents, ASCII only; parse_laurent of
// the result reproduces the coefficient map.
std::string render_laurent(const LaurentPolynomial& f);

std::string render_poly(const IntPolynomial& f);

// Integer parsing with the same Unicode-minus tolerance as the polynomials.
std::int64_t parse_int(std::string_view text, const std::string& what);

}  // namespace dehn
