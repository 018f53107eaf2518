#include "dehn/verifier.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "dehn/dedekind.hpp"

namespace dehn {

namespace {

std::int64_t positive_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

void validate_coefficient(std::int64_t q) {
    if (q % 2 == 0)
        throw std::invalid_argument("surgery coefficient 2/q requires odd q");
    if (q > -3 && q < 3)
        throw std::invalid_argument("(2.3) requires |q| >= 3");
}

}  // namespace

std::vector<SeifertCandidate> enumerate_candidates(std::int64_t alpha, std::int64_t beta,
                                                   int e_sign) {
    if (alpha < 1 || alpha >= beta)
        throw std::invalid_argument("enumeration requires 1 <= alpha < beta");
    if (beta > 1000000)
        throw std::invalid_argument("enumeration requires beta <= 1000000");
    if (std::gcd(alpha, beta) != 1)
        throw std::invalid_argument("enumeration requires gcd(alpha, beta) = 1");
    if (e_sign != 1 && e_sign != -1)
        throw std::invalid_argument("e_sign must be +1 or -1");

    const std::int64_t modulus = 10 * alpha * beta;  // 10 a b e = 5b q1 + 5a q2 + 2ab q3
    std::vector<SeifertCandidate> out;
    for (std::int64_t r1 = 1; r1 < 2 * alpha; r1 += 2) {
        if (std::gcd(r1, alpha) != 1)
            continue;
        for (std::int64_t r3 = 1; r3 <= 4; ++r3) {
            // Solve 5a*r2 = e_sign - 5b*r1 - 2ab*r3 (mod 10ab); dividing by
            // 5a = gcd(5a, 10ab) leaves a unique residue mod 2b.
            std::int64_t c = positive_mod(e_sign - 5 * beta * r1 - 2 * alpha * beta * r3,
                                          modulus);
            if (c % (5 * alpha) != 0)
                continue;
            std::int64_t r2 = (c / (5 * alpha)) % (2 * beta);
            if (r2 % 2 == 0 || std::gcd(r2, beta) != 1)
                continue;
            // Lift along q1 so the Euler condition holds exactly.
            std::int64_t n = 5 * beta * r1 + 5 * alpha * r2 + 2 * alpha * beta * r3;
            std::int64_t k = (n - e_sign) / modulus;
            out.emplace_back(alpha, beta, r1 - 2 * alpha * k, r2, r3);
        }
    }
    std::sort(out.begin(), out.end(), [&](const SeifertCandidate& x, const SeifertCandidate& y) {
        auto key = [&](const SeifertCandidate& s) {
            return std::array<std::int64_t, 3>{positive_mod(s.q1, 2 * alpha), s.q2, s.q3};
        };
        return key(x) < key(y);
    });
    return out;
}

CandidateRecord check_candidate(const SeifertCandidate& c, std::int64_t q,
                                bool drop_norm_bound) {
    if (q % 2 == 0 || q == 0)
        throw std::invalid_argument("surgery coefficient 2/q requires odd nonzero q");
    auto h1 = h1_order(c);
    if (!h1 || *h1 != 2)
        throw std::invalid_argument("candidate must have |H_1| = 2");

    CandidateRecord rec{c,
                        sgn(euler_number(c)) > 0 ? +1 : -1,
                        lescop_seifert(c),
                        *h1,
                        c.alpha * c.beta,
                        false,
                        false};
    const Integer abs_q = abs(Integer(static_cast<long>(q)));
    const Integer ab(static_cast<long>(rec.ab_product));
    bool lambda_matches = (rec.lambda == make_rational(-q, 1));
    bool norm_bound = (ab > 2 * abs_q);
    rec.survivor = lambda_matches && (drop_norm_bound || norm_bound);
    rec.eq2_holds = abs(rec.lambda) < make_rational(ab, Integer(2));
    return rec;
}

VerificationReport verify_theorem(std::int64_t q, std::int64_t beta_max,
                                  const VerifyOptions& options) {
    validate_coefficient(q);
    if (beta_max < 2)
        throw std::invalid_argument("verification requires beta_max >= 2");
    if (beta_max > 1000000)
        throw std::invalid_argument("verification requires beta_max <= 1000000");

    const auto start = std::chrono::steady_clock::now();

    // Workers claim whole beta values; alpha runs in order inside each, so
    // merging by beta keeps the report identical for any worker count.
    struct BetaOutcome {
        std::uint64_t pairs = 0;
        std::uint64_t examined = 0;
        std::vector<CandidateRecord> survivors;
    };
    std::vector<BetaOutcome> outcomes(static_cast<std::size_t>(beta_max) + 1);

    unsigned thread_count = options.threads > 0
                                ? static_cast<unsigned>(options.threads)
                                : std::max(1u, std::thread::hardware_concurrency());

    std::atomic<std::int64_t> next_beta{2};
    auto worker = [&]() {
        for (;;) {
            std::int64_t beta = next_beta.fetch_add(1);
            if (beta > beta_max)
                return;
            BetaOutcome& slot = outcomes[static_cast<std::size_t>(beta)];
            for (std::int64_t alpha = 1; alpha < beta; ++alpha) {
                if (std::gcd(alpha, beta) != 1)
                    continue;
                ++slot.pairs;
                for (int e_sign : {+1, -1}) {
                    for (const SeifertCandidate& cand :
                         enumerate_candidates(alpha, beta, e_sign)) {
                        CandidateRecord rec = check_candidate(cand, q, options.drop_norm_bound);
                        ++slot.examined;
                        if (rec.survivor)
                            slot.survivors.push_back(std::move(rec));
                    }
                }
            }
        }
    };

    if (thread_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(thread_count);
        for (unsigned t = 0; t < thread_count; ++t)
            threads.emplace_back(worker);
        for (auto& t : threads)
            t.join();
    }

    VerificationReport report;
    report.q = q;
    report.beta_max = beta_max;
    report.norm_bound_dropped = options.drop_norm_bound;
    for (const BetaOutcome& o : outcomes) {
        report.pairs_examined += o.pairs;
        report.candidates_examined += o.examined;
        report.survivors.insert(report.survivors.end(), o.survivors.begin(), o.survivors.end());
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return report;
}

bool check_sharp(std::int64_t beta, std::int64_t q1, std::int64_t q2, std::int64_t q3) {
    if (beta % 2 != 0 || beta < 8)
        throw std::invalid_argument("parity condition requires even beta >= 8");
    if (q1 % 2 == 0 || q2 % 2 == 0)
        throw std::invalid_argument("parity condition requires odd q1 and q2");
    if (5 * beta * q1 + 5 * q2 + 2 * beta * q3 != 1)
        throw std::invalid_argument("parity condition requires 5b*q1 + 5*q2 + 2b*q3 = 1");
    std::int64_t r = positive_mod(q2, 2 * beta);
    return r != 1 && r != 2 * beta - 1;
}

Rational eq4_gap(const SeifertCandidate& c) {
    auto h1 = h1_order(c);
    if (!h1 || *h1 != 2)
        throw std::invalid_argument("candidate must have |H_1| = 2");
    if (!(euler_number(c) > 0))
        throw std::invalid_argument("inequality slack is defined for the e > 0 branch only");
    const Integer a(static_cast<long>(c.alpha)), b(static_cast<long>(c.beta));
    Rational dedekind_total = dedekind_fast(c.q1, 2 * c.alpha) +
                              dedekind_fast(c.q2, 2 * c.beta) + dedekind_fast(c.q3, 5);
    Rational rhs = make_rational(-1, 4) + make_rational(5 * b, 24 * a) +
                   make_rational(5 * a, 24 * b) + make_rational(Integer(1), 120 * a * b) +
                   abs(dedekind_total);
    Rational lhs = make_rational(3 * a * b, Integer(10));
    return rhs - lhs;
}

}  // namespace dehn
