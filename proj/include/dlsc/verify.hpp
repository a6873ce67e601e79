#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dlsc/scheme.hpp"

namespace dlsc {

// "With high probability" operationalized: zero violations expected at the
// default large q within this per-suite budget; small-q runs are
// informational and make the failure mode visible.
inline constexpr double kViolationBudget = 1e-3;

struct LemmaReport {
    std::string lemma;            // lemma1 / lemma2 / lemma3 / ladder
    SystemParams params;          // meaningful except for lemma2
    std::uint64_t q = 0;
    std::size_t trials = 0;
    std::size_t checks = 0;       // matrices / subsets examined in total
    std::size_t violations = 0;   // trials with at least one violation
    std::vector<std::uint64_t> violation_seeds;
    double observed_rate = 0;     // violations / trials
    bool rate_defined = true;     // false when trials == 0

    // lemma2 only
    double success_rate = -1;
    double bound = -1;            // (1 - 2/q)^s

    bool within_budget() const { return !rate_defined || observed_rate <= kViolationBudget; }
    std::string to_json() const;
};

// Lemma on the decoding matrices: per trial, fresh F and fresh v draws; for
// every responding set A, every responder position, and every non-responder
// with every (Nr-1)-subset of A, the stacked matrix must be invertible.
LemmaReport check_lemma1(const SystemParams& params, std::size_t trials,
                         std::uint64_t seed);

// Subspace-sampling lemma: S, T < F_q^r with dim S = dim_s and
// dim(S cap T) = dim_st < dim_s, synthesized as coordinate spans under a
// random change of basis. Per trial, s uniform draws from S must avoid T and
// stay independent; the success rate is compared against (1 - 2/q)^s.
LemmaReport check_lemma2(std::size_t ambient, std::size_t dim_s, std::size_t dim_st,
                         std::size_t s, std::uint64_t q, std::size_t trials,
                         std::uint64_t seed);

// Span lower bound for the u-vectors of any l responding workers, checked in
// both its forms: dim span >= Kc - (K/N)(Nr-l) and the equivalent
// column-space intersection bound <= (K/N)(Nr-l), which must agree exactly.
LemmaReport check_lemma3(const SystemParams& params, std::size_t l,
                         std::size_t trials, std::uint64_t seed,
                         bool all_subsets = true);

// Mixed u/v dimension ladder: random a, b and responder ordering per trial;
// span of {u-rows of the first a workers, v-rows of workers a+1..b} must
// reach Kc - (K/N)(Nr-b).
LemmaReport check_dimension_ladder(const SystemParams& params, std::size_t trials,
                                   std::uint64_t seed);

}  // namespace dlsc
