#include "dehn/dedekind.hpp"

#include <numeric>
#include <stdexcept>

namespace dehn {

namespace {

void validate_args(std::int64_t q, std::int64_t p) {
    if (p < 1)
        throw std::invalid_argument("dedekind sum requires p >= 1");
    if (std::gcd(q, p) != 1)
        throw std::invalid_argument("dedekind sum requires gcd(q, p) = 1");
}

void validate_even_p(std::int64_t p) {
    if (p % 2 != 0)
        throw std::invalid_argument("f(2,p) bound requires even p");
    if (p < 8)
        throw std::invalid_argument("f(2,p) bound requires p >= 8");
}

}  // namespace

Rational sawtooth(const Rational& x) {
    if (x.get_den() == 1)
        return Rational(0);
    return x - Rational(rfloor(x)) - make_rational(1, 2);
}

Rational dedekind_naive(std::int64_t q, std::int64_t p) {
    validate_args(q, p);
    // Reduce q modulo p first; ((kq/p)) has period p in q, so every term is
    // unchanged and k*qr stays well inside 64 bits for any feasible p.
    std::int64_t qr = q % p;
    if (qr < 0)
        qr += p;
    Rational sum(0);
    for (std::int64_t k = 1; k < p; ++k)
        sum += sawtooth(make_rational(k, p)) * sawtooth(make_rational(k * qr, p));
    return sum;
}

Rational dedekind_fast(std::int64_t q, std::int64_t p) {
    validate_args(q, p);
    Integer P(static_cast<long>(p));
    Integer Q;
    mpz_fdiv_r(Q.get_mpz_t(), Integer(static_cast<long>(q)).get_mpz_t(), P.get_mpz_t());
    Rational acc(0);
    int sign = +1;
    // Invariant: 0 <= Q < P and gcd(Q,P) = 1; P = 1 terminates (empty sum).
    while (P > 1) {
        Integer num = P * P + Q * Q + 1;
        Rational term = make_rational(num, 12 * Q * P) - make_rational(1, 4);
        acc += (sign > 0) ? term : -term;
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), P.get_mpz_t(), Q.get_mpz_t());
        P = Q;
        Q = r;
        sign = -sign;
    }
    return acc;
}

Rational bound_f2p(std::int64_t p) {
    validate_even_p(p);
    Integer P(static_cast<long>(p));
    return make_rational((P - 1) * (P - 5), 24 * P);
}

bool check_prop31(std::int64_t p, std::int64_t q) {
    validate_even_p(p);
    if (q % 2 == 0)
        throw std::invalid_argument("f(2,p) bound check requires odd q");
    if (q < 3 || q > p - 3)
        throw std::invalid_argument("f(2,p) bound check requires 3 <= q <= p-3");
    if (std::gcd(p, q) != 1)
        throw std::invalid_argument("f(2,p) bound check requires gcd(p, q) = 1");
    return abs(dedekind_fast(q, p)) < bound_f2p(p);
}

bool check_lemma32(std::int64_t p, std::int64_t q_star) {
    validate_even_p(p);
    if (std::gcd(p, q_star) != 1)
        throw std::invalid_argument("p/24 bound check requires gcd(p, q*) = 1");
    std::int64_t r = q_star % p;
    if (r < 0)
        r += p;
    if (r == 1 || r == p - 1)
        throw std::invalid_argument("p/24 bound check excludes q* = +-1 (mod p)");
    return abs(dedekind_fast(q_star, p)) < make_rational(p, 24);
}

}  // namespace dehn
