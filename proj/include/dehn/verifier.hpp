#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "dehn/lescop.hpp"
#include "dehn/rational.hpp"

namespace dehn {

// Outcome of checking one admissible candidate against one coefficient q.
struct CandidateRecord {
    SeifertCandidate candidate;
    int e_sign;            // sign of the Euler number, +1 or -1
    Rational lambda;       // lescop_seifert(candidate)
    Integer h1;            // |H_1|, always 2 for admissible candidates
    std::int64_t ab_product;  // alpha * beta
    bool survivor;         // lambda = -q and alpha*beta > 2|q|
    bool eq2_holds;        // diagnostic: |lambda| < alpha*beta/2
};

struct VerifyOptions {
    int threads = 1;              // 0 = one per hardware thread
    bool drop_norm_bound = false;  // fault injection: skip the alpha*beta > 2|q| test
};

struct VerificationReport {
    std::int64_t q = 0;
    std::int64_t beta_max = 0;
    bool norm_bound_dropped = false;
    std::uint64_t pairs_examined = 0;
    std::uint64_t candidates_examined = 0;
    std::vector<CandidateRecord> survivors;
    std::chrono::milliseconds elapsed{0};
};

// All candidates for the pair (alpha, beta) whose Euler number is exactly
// e_sign/(10 alpha beta), one per residue triple
// (q1 mod 2 alpha, q2 mod 2 beta, q3 mod 5).  Shifting q1 by 2 alpha (resp.
// q2 by 2 beta, q3 by 5) moves 10 alpha beta e by a multiple of
// 10 alpha beta and changes no Dedekind sum, so admissibility and the
// invariant depend on the residues alone; the returned lift satisfies the
// Euler condition with exact equality.
std::vector<SeifertCandidate> enumerate_candidates(std::int64_t alpha, std::int64_t beta,
                                                   int e_sign);

// Evaluate one candidate against the surgery side.  Survivor means
// lambda = -q together with alpha*beta > 2|q| (the integer form of
// (alpha*beta)^2 > 4q^2); drop_norm_bound removes the second test.
// Rejects candidates with |H_1| != 2.
CandidateRecord check_candidate(const SeifertCandidate& c, std::int64_t q,
                                bool drop_norm_bound = false);

// Exhaustive replay over all coprime 1 <= alpha < beta <= beta_max and both
// signs of e.  An empty survivor list verifies the theorem instance up to
// the bound; the bound is the caller's, the theorem itself has none.
VerificationReport verify_theorem(std::int64_t q, std::int64_t beta_max,
                                  const VerifyOptions& options = {});

// The alpha = 1 parity fact: for even beta >= 8, odd q1, q2 and
// 5*beta*q1 + 5*q2 + 2*beta*q3 = 1, decides q2 != +-1 (mod 2 beta).
bool check_sharp(std::int64_t beta, std::int64_t q1, std::int64_t q2, std::int64_t q3);

// Slack of the e > 0 inequality chain: RHS - LHS of
//   (3/10) alpha beta < -1/4 + 5 beta/(24 alpha) + (5/24)(alpha/beta)
//                       + 1/(120 alpha beta) + |T|.
// Negative for every admissible candidate with alpha >= 2, which is the
// contradiction the proof runs on.  Requires |H_1| = 2 and e > 0.
Rational eq4_gap(const SeifertCandidate& c);

}  // namespace dehn
