#include "dehn/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace dehn {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

IntPolynomial IntPolynomial::constant(Integer c) {
    IntPolynomial p;
    p.coeffs_.push_back(std::move(c));
    p.trim();
    return p;
}

IntPolynomial IntPolynomial::monomial(int deg, Integer coeff) {
    if (deg < 0)
        throw std::invalid_argument("monomial degree must be nonnegative");
    IntPolynomial p;
    if (coeff != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(deg) + 1, Integer(0));
        p.coeffs_.back() = std::move(coeff);
    }
    return p;
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

const Integer& IntPolynomial::leading() const {
    if (is_zero())
        throw std::domain_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Integer IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return Integer(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Integer> out(std::max(coeffs_.size(), o.coeffs_.size()), Integer(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        out[i] += o.coeffs_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    return *this + (-o);
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Integer> out(coeffs_);
    for (auto& c : out)
        c = -c;
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero())
        return IntPolynomial();
    std::vector<Integer> out(coeffs_.size() + o.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const Integer& c) const {
    std::vector<Integer> out(coeffs_);
    for (auto& a : out)
        a *= c;
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
    if (divisor.is_zero())
        throw std::domain_error("division by the zero polynomial");
    IntPolynomial rem = *this;
    if (rem.is_zero())
        return IntPolynomial();
    if (rem.degree() < divisor.degree())
        throw std::domain_error("inexact polynomial division");
    std::vector<Integer> quot(static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1,
                              Integer(0));
    const Integer& lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        Integer factor = idiv_exact(rem.leading(), lead);
        int shift = rem.degree() - divisor.degree();
        quot[static_cast<std::size_t>(shift)] = factor;
        rem = rem - divisor * IntPolynomial::monomial(shift, factor);
    }
    if (!rem.is_zero())
        throw std::domain_error("inexact polynomial division");
    return IntPolynomial(std::move(quot));
}

Integer IntPolynomial::eval(const Integer& x) const {
    Integer acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::complex<double> IntPolynomial::eval(const std::complex<double>& z) const {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + std::complex<double>(it->get_d(), 0.0);
    return acc;
}

LaurentPolynomial::LaurentPolynomial(
    std::initializer_list<std::pair<const int, Integer>> terms) {
    for (const auto& [e, c] : terms)
        add_term(e, c);
}

void LaurentPolynomial::add_term(int exponent, const Integer& c) {
    if (c == 0)
        return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_.emplace(exponent, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

int LaurentPolynomial::min_exp() const {
    if (is_zero())
        throw std::domain_error("zero polynomial has no exponents");
    return terms_.begin()->first;
}

int LaurentPolynomial::max_exp() const {
    if (is_zero())
        throw std::domain_error("zero polynomial has no exponents");
    return terms_.rbegin()->first;
}

Integer LaurentPolynomial::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Integer(0) : it->second;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
    LaurentPolynomial out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            out.add_term(e1 + e2, c1 * c2);
    return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial out;
    for (const auto& [e, c] : terms_)
        out.add_term(e, -c);
    return out;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
    LaurentPolynomial out;
    for (const auto& [e, c] : terms_)
        out.add_term(e + k, c);
    return out;
}

std::pair<IntPolynomial, int> LaurentPolynomial::to_dense() const {
    if (is_zero())
        return {IntPolynomial(), 0};
    int shift = min_exp();
    std::vector<Integer> coeffs(static_cast<std::size_t>(max_exp() - shift) + 1, Integer(0));
    for (const auto& [e, c] : terms_)
        coeffs[static_cast<std::size_t>(e - shift)] = c;
    return {IntPolynomial(std::move(coeffs)), shift};
}

std::complex<double> LaurentPolynomial::eval_unit(const std::complex<double>& z) const {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [e, c] : terms_) {
        std::complex<double> ze =
            (e >= 0) ? std::pow(z, e) : (std::complex<double>(1.0, 0.0) / std::pow(z, -e));
        acc += std::complex<double>(c.get_d(), 0.0) * ze;
    }
    return acc;
}

bool doteq(const LaurentPolynomial& f, const LaurentPolynomial& g) {
    if (f.is_zero() || g.is_zero())
        return f.is_zero() && g.is_zero();
    if (f.terms().size() != g.terms().size())
        return false;
    int k = f.min_exp() - g.min_exp();
    const Integer& a = f.terms().begin()->second;
    const Integer& b = g.terms().begin()->second;
    int sign;
    if (a == b)
        sign = +1;
    else if (a == -b)
        sign = -1;
    else
        return false;
    for (const auto& [e, c] : g.terms()) {
        Integer want = (sign > 0) ? c : Integer(-c);
        if (f.coeff(e + k) != want)
            return false;
    }
    return true;
}

}  // namespace dehn
