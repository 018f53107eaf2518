#pragma once

#include <cstdint>

#include "dehn/rational.hpp"

namespace dehn {

// Sawtooth function ((x)): 0 at integers, x - floor(x) - 1/2 otherwise.
Rational sawtooth(const Rational& x);

// Dedekind sum s(q,p) = sum_{k=1}^{p-1} ((k/p)) ((kq/p)), evaluated term by
// term.  Quadratic-time; kept as the independent oracle for dedekind_fast.
// Requires p >= 1 and gcd(q,p) = 1.
Rational dedekind_naive(std::int64_t q, std::int64_t p);

// Same value as dedekind_naive, computed through the reciprocity law
//   s(q,p) + s(p,q) = -1/4 + (p/q + q/p + 1/(pq))/12
// together with periodicity s(q mod p, p) = s(q,p).  The number of steps is
// the length of the Euclidean algorithm on (q mod p, p).
Rational dedekind_fast(std::int64_t q, std::int64_t p);

// f(2,p) = (p-1)(p-5)/(24p) for even p >= 8.
Rational bound_f2p(std::int64_t p);

// Exact check of |s(q,p)| < f(2,p) for even p >= 8 and odd q with
// 3 <= q <= p-3, gcd(p,q) = 1.
bool check_prop31(std::int64_t p, std::int64_t q);

// Exact check of |s(q*,p)| < p/24 for even p >= 8, gcd(p,q*) = 1 and
// q* != +-1 (mod p).
bool check_lemma32(std::int64_t p, std::int64_t q_star);

}  // namespace dehn
