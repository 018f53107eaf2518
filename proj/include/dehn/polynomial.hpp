#pragma once

#include <complex>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "dehn/rational.hpp"

namespace dehn {

// Dense polynomial over Z, coefficients stored lowest degree first; the
// leading coefficient is nonzero unless the polynomial is zero (empty).
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);
    static IntPolynomial constant(Integer c);
    static IntPolynomial monomial(int deg, Integer coeff = Integer(1));

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const Integer& leading() const;
    Integer coeff(int i) const;
    const std::vector<Integer>& coeffs() const { return coeffs_; }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const Integer& c) const;
    IntPolynomial operator-() const;
    bool operator==(const IntPolynomial& o) const = default;

    // Quotient of an exact division in Z[t]; throws std::domain_error if the
    // divisor does not divide exactly.
    IntPolynomial divide_exact(const IntPolynomial& divisor) const;

    Integer eval(const Integer& x) const;
    std::complex<double> eval(const std::complex<double>& z) const;

  private:
    void trim();
    std::vector<Integer> coeffs_;
};

// Laurent polynomial over Z: map from exponent to coefficient, canonical form
// with no stored zero coefficients (the zero polynomial is the empty map).
class LaurentPolynomial {
  public:
    LaurentPolynomial() = default;
    LaurentPolynomial(std::initializer_list<std::pair<const int, Integer>> terms);

    void add_term(int exponent, const Integer& c);
    bool is_zero() const { return terms_.empty(); }
    int min_exp() const;
    int max_exp() const;
    Integer coeff(int exponent) const;
    const std::map<int, Integer>& terms() const { return terms_; }

    LaurentPolynomial operator*(const LaurentPolynomial& o) const;
    LaurentPolynomial operator-() const;
    LaurentPolynomial shifted(int k) const;  // multiply by t^k
    bool operator==(const LaurentPolynomial& o) const = default;

    // (dense, shift) with *this = t^shift * dense and dense having a nonzero
    // constant term; the zero polynomial maps to (zero, 0).
    std::pair<IntPolynomial, int> to_dense() const;

    // Evaluation for |z| = 1 cross-checks; z must be nonzero.
    std::complex<double> eval_unit(const std::complex<double>& z) const;

  private:
    std::map<int, Integer> terms_;
};

// f = +-t^k * g for some integer k.
bool doteq(const LaurentPolynomial& f, const LaurentPolynomial& g);

}  // namespace dehn
