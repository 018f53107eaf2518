#include "dehn/cyclotomic.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace dehn {

namespace {

std::vector<int> divisors_of(int n) {
    std::vector<int> divs;
    for (int i = 1; i <= n; ++i)
        if (n % i == 0)
            divs.push_back(i);
    return divs;
}

IntPolynomial t_pow_minus_one(int n) {
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1, Integer(0));
    c[0] = -1;
    c[static_cast<std::size_t>(n)] = 1;
    return IntPolynomial(std::move(c));
}

// Pseudo-remainder: the R with lc(B)^(deg A - deg B + 1) * A = Q*B + R.
IntPolynomial pseudo_remainder(IntPolynomial A, const IntPolynomial& B) {
    const Integer& b = B.leading();
    int needed = A.degree() - B.degree() + 1;
    int done = 0;
    while (!A.is_zero() && A.degree() >= B.degree()) {
        int shift = A.degree() - B.degree();
        A = A * b - B * IntPolynomial::monomial(shift, A.leading());
        ++done;
    }
    for (; done < needed; ++done)
        A = A * b;
    return A;
}

}  // namespace

IntPolynomial cyclotomic_poly(int d) {
    if (d <= 0)
        throw std::invalid_argument("cyclotomic polynomial requires d >= 1");
    std::map<int, IntPolynomial> phi;
    for (int e : divisors_of(d)) {
        IntPolynomial num = t_pow_minus_one(e);
        for (const auto& [f, pf] : phi)
            if (e % f == 0)
                num = num.divide_exact(pf);
        phi.emplace(e, std::move(num));
    }
    return phi.at(d);
}

Integer resultant(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero())
        throw std::invalid_argument("resultant requires nonzero f");
    if (g.is_zero())
        return f.degree() == 0 ? Integer(1) : Integer(0);

    IntPolynomial A = f, B = g;
    int sign = 1;
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if (A.degree() % 2 == 1 && B.degree() % 2 == 1)
            sign = -sign;
    }
    if (B.degree() == 0)
        return sign * ipow(B.leading(), static_cast<unsigned long>(A.degree()));

    // Subresultant PRS (Cohen, alg. 3.3.7): each remainder is divided by
    // g*h^delta, all divisions exact over Z.
    Integer g_coef(1), h_coef(1);
    while (true) {
        int delta = A.degree() - B.degree();
        if (A.degree() % 2 == 1 && B.degree() % 2 == 1)
            sign = -sign;
        IntPolynomial R = pseudo_remainder(A, B);
        A = B;
        Integer divisor = g_coef * ipow(h_coef, static_cast<unsigned long>(delta));
        if (R.is_zero())
            return Integer(0);  // deg A >= 1 here, so a common factor remains
        std::vector<Integer> scaled = R.coeffs();
        for (auto& c : scaled)
            c = idiv_exact(c, divisor);
        B = IntPolynomial(std::move(scaled));
        g_coef = A.leading();
        if (delta > 0)
            h_coef = idiv_exact(ipow(g_coef, static_cast<unsigned long>(delta)),
                                ipow(h_coef, static_cast<unsigned long>(delta - 1)));
        if (B.degree() == 0)
            break;
    }
    Integer num = ipow(B.leading(), static_cast<unsigned long>(A.degree()));
    Integer den = ipow(h_coef, static_cast<unsigned long>(A.degree() - 1));
    return sign * idiv_exact(num, den);
}

Integer norm_d(const LaurentPolynomial& f, int d) {
    if (f.is_zero())
        throw std::invalid_argument("norm is undefined for the zero polynomial");
    if (d <= 0)
        throw std::invalid_argument("norm requires d >= 1");
    auto [dense, shift] = f.to_dense();
    (void)shift;
    return abs(resultant(cyclotomic_poly(d), dense));
}

Integer fig8_cover_norm(std::int64_t q) {
    if (q % 2 == 0)
        throw std::invalid_argument("surgery coefficient 2/q requires odd q");
    Integer Q(static_cast<long>(q));
    Integer base = 5 * Q * Q - 1;
    return base * base;
}

bool hypothesis_24_holds(const Integer& norm_value, std::int64_t q) {
    if (norm_value < 0)
        throw std::invalid_argument("hypothesis (2.4) requires norm_value >= 0");
    Integer Q(static_cast<long>(q));
    return norm_value > 16 * Q * Q * Q * Q;
}

}  // namespace dehn
