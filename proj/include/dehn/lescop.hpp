#pragma once

#include <cstdint>
#include <optional>

#include "dehn/polynomial.hpp"
#include "dehn/rational.hpp"

namespace dehn {

// Seifert candidate over S^2 with three exceptional fibers of multiplicities
// 2*alpha, 2*beta, 5 and Seifert invariants q1, q2, q3.  Validated eagerly:
//   1 <= alpha < beta, gcd(alpha,beta) = 1,
//   gcd(q1, 2*alpha) = gcd(q2, 2*beta) = gcd(q3, 5) = 1 (q1, q2 odd).
struct SeifertCandidate {
    std::int64_t alpha;
    std::int64_t beta;
    std::int64_t q1;
    std::int64_t q2;
    std::int64_t q3;

    SeifertCandidate(std::int64_t alpha, std::int64_t beta, std::int64_t q1,
                     std::int64_t q2, std::int64_t q3);

    bool operator==(const SeifertCandidate& o) const = default;
};

// e = q1/(2 alpha) + q2/(2 beta) + q3/5.
Rational euler_number(const SeifertCandidate& c);

// |H_1| = |20 alpha beta e|; nullopt when e = 0 (first homology is infinite).
std::optional<Integer> h1_order(const SeifertCandidate& c);

// Lescop invariant of the candidate.  With
//   B = (-4/5) alpha beta + 5 beta/(24 alpha) + 5 alpha/(24 beta)
//       + 1/(120 alpha beta) - 1/4
// and T = s(q1, 2 alpha) + s(q2, 2 beta) + s(q3, 5), returns B - T when
// e > 0 and -(B + T) when e < 0.  Rejects e = 0.
Rational lescop_seifert(const SeifertCandidate& c);

// 2/q-surgery on a knot K in a homology sphere Sigma.  The theorem replay
// needs lambda(Sigma) = 0 and Delta_K(t) = t^2 - 3t + 1 up to units.
struct SurgerySpec {
    std::int64_t q;
    LaurentPolynomial alexander;
    Rational lambda_sigma;
};

// t^2 - 3t + 1, the Alexander polynomial hypothesis (2.2) fixes (the
// figure-eight knot's).
const LaurentPolynomial& alexander_fig8();

// Lescop invariant of the surgered manifold: -q for this instance.  Rejects
// lambda_sigma != 0 and Alexander polynomials not = t^2-3t+1 up to units.
Rational lescop_surgery_2q(const SurgerySpec& s);

}  // namespace dehn
