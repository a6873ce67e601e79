#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dlsc/scheme.hpp"

namespace dlsc {

// All size-Nr subsets of [1..N], lexicographic.
std::vector<std::vector<std::size_t>> all_scenarios(std::size_t N, std::size_t Nr);

std::size_t binomial(std::size_t n, std::size_t k);

struct DecodeFailureRecord {
    std::uint64_t seed = 0;               // round seed, replays the failure
    std::vector<std::size_t> A;
    std::size_t worker = 0;
    std::string kind;                     // responder / nonresponder / fallback / mismatch
};

struct RoundOptions {
    SchemeKind kind = SchemeKind::Auto;
    // Non-responders receive every responder's signal but must decode from
    // only Nr-1 of them; strict mode checks every (Nr-1)-subset instead of
    // the lexicographically first.
    bool strict = false;
};

struct RoundResult {
    std::vector<Matrix> decoded;  // per worker, Kc x L (empty on failure)
    std::vector<DecodeFailureRecord> failures;
    std::size_t cost_symbols = 0;
    std::size_t fallback_retries = 0;
};

// One full protocol round: everyone encodes, responders in A transmit, all N
// workers decode and are checked against F W. Decode failures land in the
// result, they are never thrown.
RoundResult run_round(const CyclicAssignment& assignment, const Matrix& F,
                      const Matrix& W, const std::vector<std::size_t>& A,
                      Rng& rng, const RoundOptions& opts);

struct SimulationReport {
    SystemParams params;
    std::string scheme;
    std::uint64_t master_seed = 0;
    std::size_t trials = 0;
    std::size_t scenarios_checked = 0;
    std::vector<DecodeFailureRecord> decode_failures;
    std::vector<std::size_t> scenario_cost_symbols;  // per scenario, symbols per round
    double worst_case_cost_R = 0;                    // max over A of sum T_n / L
    std::vector<double> per_worker_error_rate;       // eps_n, max over A
    double empirical_error_rate = 0;                 // max over workers
    std::size_t fallback_retries = 0;

    std::string to_json() const;
};

struct SimulateOptions {
    SchemeKind kind = SchemeKind::Auto;
    bool strict = false;
    bool force = false;                 // lift the scenario-count guard
    std::ostream* transcript = nullptr; // per-round signal dump
};

// For each trial: fresh (F, W); then every straggler pattern A is played.
SimulationReport exhaustive_stragglers(const SystemParams& params, std::size_t trials,
                                       std::uint64_t master_seed,
                                       const SimulateOptions& opts = {});

}  // namespace dlsc
