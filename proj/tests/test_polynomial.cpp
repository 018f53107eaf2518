#include <doctest.h>

#include <random>

#include "dehn/polynomial.hpp"

using namespace dehn;

namespace {

LaurentPolynomial random_laurent(std::mt19937& rng, int max_abs_exp = 4, int max_coeff = 9) {
    std::uniform_int_distribution<int> nterms(1, 5), exp(-max_abs_exp, max_abs_exp),
        coeff(-max_coeff, max_coeff);
    LaurentPolynomial f;
    while (f.is_zero())
        for (int i = 0, n = nterms(rng); i < n; ++i)
            f.add_term(exp(rng), Integer(coeff(rng)));
    return f;
}

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("dense polynomial canonical form") {
    IntPolynomial zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    IntPolynomial trimmed(std::vector<Integer>{Integer(1), Integer(2), Integer(0), Integer(0)});
    CHECK(trimmed.degree() == 1);
    CHECK(trimmed.leading() == 2);
    CHECK(IntPolynomial::constant(Integer(0)).is_zero());
    CHECK(IntPolynomial::monomial(3).degree() == 3);
}

TEST_CASE("dense arithmetic and evaluation") {
    IntPolynomial f(std::vector<Integer>{Integer(1), Integer(-3), Integer(1)});  // t^2-3t+1
    IntPolynomial g(std::vector<Integer>{Integer(-1), Integer(1)});              // t-1
    CHECK((f * g).degree() == 3);
    CHECK((f + (-f)).is_zero());
    CHECK(f.eval(Integer(3)) == 1);
    CHECK(f.eval(Integer(0)) == 1);
    CHECK((f * g).eval(Integer(5)) == f.eval(Integer(5)) * g.eval(Integer(5)));
}

TEST_CASE("exact division round trips and rejects remainders") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coeff(-6, 6), deg(0, 5);
    for (int i = 0; i < 200; ++i) {
        std::vector<Integer> ca(deg(rng) + 1), cb(deg(rng) + 1);
        for (auto& c : ca)
            c = coeff(rng);
        for (auto& c : cb)
            c = coeff(rng);
        IntPolynomial a(ca), b(cb);
        if (a.is_zero() || b.is_zero())
            continue;
        CHECK((a * b).divide_exact(b) == a);
    }
    IntPolynomial f(std::vector<Integer>{Integer(1), Integer(0), Integer(1)});  // t^2+1
    IntPolynomial g(std::vector<Integer>{Integer(-1), Integer(1)});             // t-1
    CHECK_THROWS_AS(f.divide_exact(g), std::domain_error);
}

TEST_CASE("laurent canonical form drops zeros") {
    LaurentPolynomial f;
    f.add_term(2, Integer(2));
    f.add_term(2, Integer(-2));
    CHECK(f.is_zero());
    f.add_term(-1, Integer(4));
    f.add_term(3, Integer(1));
    CHECK(f.min_exp() == -1);
    CHECK(f.max_exp() == 3);
    CHECK(f.coeff(0) == 0);
    CHECK(f.terms().size() == 2);
}

TEST_CASE("laurent shift and dense conversion") {
    LaurentPolynomial f{{2, Integer(1)}, {1, Integer(-3)}, {0, Integer(1)}};
    LaurentPolynomial shifted = f.shifted(-1);
    CHECK(shifted.coeff(-1) == 1);
    auto [dense, shift] = shifted.to_dense();
    CHECK(shift == -1);
    CHECK(dense.degree() == 2);
    CHECK(dense.coeff(0) == 1);
    CHECK(dense.coeff(1) == -3);
    auto [dense0, shift0] = LaurentPolynomial().to_dense();
    CHECK(dense0.is_zero());
    CHECK(shift0 == 0);
}

TEST_CASE("doteq identifies unit multiples") {
    LaurentPolynomial delta{{2, Integer(1)}, {1, Integer(-3)}, {0, Integer(1)}};
    LaurentPolynomial shifted{{1, Integer(-1)}, {0, Integer(3)}, {-1, Integer(-1)}};  // -t+3-t^-1
    LaurentPolynomial other{{2, Integer(1)}, {1, Integer(1)}, {0, Integer(1)}};
    CHECK(doteq(delta, shifted));
    CHECK(doteq(delta, delta));
    CHECK_FALSE(doteq(delta, other));
    CHECK(doteq(LaurentPolynomial(), LaurentPolynomial()));
    CHECK_FALSE(doteq(delta, LaurentPolynomial()));
}

TEST_CASE("doteq on random unit multiples and perturbations") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> shift(-5, 5), sign(0, 1);
    for (int i = 0; i < 200; ++i) {
        LaurentPolynomial f = random_laurent(rng);
        LaurentPolynomial g = f.shifted(shift(rng));
        if (sign(rng))
            g = -g;
        CHECK(doteq(f, g));
        LaurentPolynomial h = g;
        h.add_term(g.max_exp() + 1, Integer(1));
        CHECK_FALSE(doteq(f, h));
    }
}

TEST_CASE("laurent multiplication agrees with evaluation") {
    std::mt19937 rng(23);
    for (int i = 0; i < 50; ++i) {
        LaurentPolynomial f = random_laurent(rng), g = random_laurent(rng);
        LaurentPolynomial fg = f * g;
        std::complex<double> z = std::polar(1.0, 0.7 + 0.01 * i);
        std::complex<double> lhs = fg.is_zero() ? std::complex<double>(0) : fg.eval_unit(z);
        std::complex<double> rhs = f.eval_unit(z) * g.eval_unit(z);
        CHECK(std::abs(lhs - rhs) < 1e-6 * (1.0 + std::abs(rhs)));
    }
}

}  // TEST_SUITE
