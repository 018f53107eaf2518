#include "dehn/lescop.hpp"

#include <numeric>
#include <stdexcept>

#include "dehn/dedekind.hpp"

namespace dehn {

SeifertCandidate::SeifertCandidate(std::int64_t alpha_, std::int64_t beta_,
                                   std::int64_t q1_, std::int64_t q2_, std::int64_t q3_)
    : alpha(alpha_), beta(beta_), q1(q1_), q2(q2_), q3(q3_) {
    if (alpha < 1 || alpha >= beta)
        throw std::invalid_argument("candidate requires 1 <= alpha < beta");
    if (beta > (std::int64_t(1) << 31))
        throw std::invalid_argument("candidate requires beta <= 2^31");
    if (std::gcd(alpha, beta) != 1)
        throw std::invalid_argument("candidate requires gcd(alpha, beta) = 1");
    if (std::gcd(q1, 2 * alpha) != 1)
        throw std::invalid_argument("candidate requires odd q1 with gcd(q1, 2*alpha) = 1");
    if (std::gcd(q2, 2 * beta) != 1)
        throw std::invalid_argument("candidate requires odd q2 with gcd(q2, 2*beta) = 1");
    if (std::gcd(q3, static_cast<std::int64_t>(5)) != 1)
        throw std::invalid_argument("candidate requires gcd(q3, 5) = 1");
}

Rational euler_number(const SeifertCandidate& c) {
    return make_rational(c.q1, 2 * c.alpha) + make_rational(c.q2, 2 * c.beta) +
           make_rational(c.q3, 5);
}

std::optional<Integer> h1_order(const SeifertCandidate& c) {
    Rational e = euler_number(c);
    if (e == 0)
        return std::nullopt;
    Integer scale = 20 * Integer(static_cast<long>(c.alpha)) * Integer(static_cast<long>(c.beta));
    Rational order = make_rational(scale, Integer(1)) * e;
    // e has denominator dividing 10*alpha*beta, so the order is an integer.
    if (order.get_den() != 1)
        throw std::logic_error("euler number denominator does not divide 20*alpha*beta");
    return abs(order.get_num());
}

Rational lescop_seifert(const SeifertCandidate& c) {
    Rational e = euler_number(c);
    if (e == 0)
        throw std::invalid_argument(
            "lescop invariant of this family requires e != 0 (not a rational homology sphere)");
    const Integer a(static_cast<long>(c.alpha)), b(static_cast<long>(c.beta));
    Rational base = make_rational(-4 * a * b, Integer(5)) + make_rational(5 * b, 24 * a) +
                    make_rational(5 * a, 24 * b) + make_rational(Integer(1), 120 * a * b) -
                    make_rational(1, 4);
    Rational dedekind_total = dedekind_fast(c.q1, 2 * c.alpha) +
                              dedekind_fast(c.q2, 2 * c.beta) + dedekind_fast(c.q3, 5);
    if (e > 0)
        return base - dedekind_total;
    return -(base + dedekind_total);
}

const LaurentPolynomial& alexander_fig8() {
    static const LaurentPolynomial delta{{2, Integer(1)}, {1, Integer(-3)}, {0, Integer(1)}};
    return delta;
}

Rational lescop_surgery_2q(const SurgerySpec& s) {
    if (s.q % 2 == 0 || s.q == 0)
        throw std::invalid_argument("surgery coefficient 2/q requires odd nonzero q");
    if (s.lambda_sigma != 0)
        throw std::invalid_argument("(2.1) requires lambda(Sigma) = 0");
    if (!doteq(s.alexander, alexander_fig8()))
        throw std::invalid_argument("(2.2) requires Delta_K(t) = t^2-3t+1 up to units +-t^k");
    return make_rational(-s.q, 1);
}

}  // namespace dehn
