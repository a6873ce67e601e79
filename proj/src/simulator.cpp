#include "dlsc/simulator.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "dlsc/errors.hpp"

namespace dlsc {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<std::vector<std::size_t>> all_scenarios(std::size_t N, std::size_t Nr) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(Nr);
    for (std::size_t i = 0; i < Nr; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        // next combination
        std::size_t i = Nr;
        while (i > 0 && cur[i - 1] == N - Nr + i) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < Nr; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

namespace {

// Coded rows a worker evaluates locally from its own messages: one row per
// vector in `vecs`, each equal to vec^T [F_1;...;F_Kc].
Matrix local_rows(const std::vector<Vec>& vecs, const Matrix& F,
                  const CyclicAssignment& assignment, std::size_t n,
                  const Matrix& W) {
    Matrix rows(F.field(), vecs.size(), W.cols());
    for (std::size_t i = 0; i < vecs.size(); ++i)
        rows.set_row(i, coded_row_from_local(vecs[i], F, assignment, n, W));
    return rows;
}

Matrix stack_for(const DecodingMatrix& dm,
                 const std::vector<const Matrix*>& u_rows_by_worker,
                 const std::vector<const Matrix*>& v_rows_by_worker,
                 const Field& f, std::size_t L) {
    Matrix stacked(f, dm.S.rows(), L);
    for (std::size_t r = 0; r < dm.row_provenance.size(); ++r) {
        const RowProvenance& p = dm.row_provenance[r];
        const Matrix* src = (p.kind == 'u') ? u_rows_by_worker[p.worker - 1]
                                            : v_rows_by_worker[p.worker - 1];
        stacked.set_row(r, src->row(p.index));
    }
    return stacked;
}

RoundResult run_nullspace_round(const CyclicAssignment& assignment, const Matrix& F,
                                const Matrix& W, const std::vector<std::size_t>& A,
                                Rng& rng, bool strict) {
    const SystemParams& params = assignment.params();
    const Field& f = F.field();
    RoundResult result;
    const std::uint64_t round_seed = rng.seed();

    std::vector<WorkerEncoding> enc;
    enc.reserve(params.N);
    for (std::size_t n = 1; n <= params.N; ++n)
        enc.push_back(build_worker_encoding(F, assignment, n, rng));

    // Transmitted payloads (v rows) and locally computable u rows.
    std::vector<Matrix> v_rows, u_rows;
    for (std::size_t n = 1; n <= params.N; ++n) {
        v_rows.push_back(encode_signal(enc[n - 1], F, assignment, W).payload);
        u_rows.push_back(local_rows(enc[n - 1].u_basis.vectors, F, assignment, n, W));
    }
    std::vector<const Matrix*> u_ptr, v_ptr;
    for (std::size_t n = 0; n < params.N; ++n) {
        u_ptr.push_back(&u_rows[n]);
        v_ptr.push_back(&v_rows[n]);
    }

    const Matrix expected = mat_mul(F, W);
    result.decoded.assign(params.N, Matrix(f, 0, 0));
    result.cost_symbols = A.size() * params.per_node() * params.L;

    auto try_decode = [&](const DecodingMatrix& dm, std::size_t worker,
                          const char* kind) {
        try {
            Matrix out = decode(dm, stack_for(dm, u_ptr, v_ptr, f, params.L),
                                round_seed);
            if (out != expected) {
                result.failures.push_back({round_seed, A, worker, "mismatch"});
                return;
            }
            result.decoded[worker - 1] = std::move(out);
        } catch (const SingularMatrixError&) {
            result.failures.push_back({round_seed, A, worker, kind});
        }
    };

    for (std::size_t m = 1; m <= params.N; ++m) {
        auto it = std::find(A.begin(), A.end(), m);
        if (it != A.end()) {
            const std::size_t i = static_cast<std::size_t>(it - A.begin());
            try_decode(build_decoding_matrix_responder(enc, A, i), m, "responder");
        } else {
            // Nr-1 of the Nr received signals suffice.
            if (strict) {
                for (std::size_t skip = 0; skip < A.size(); ++skip) {
                    std::vector<std::size_t> responders;
                    for (std::size_t p = 0; p < A.size(); ++p)
                        if (p != skip) responders.push_back(A[p]);
                    try_decode(build_decoding_matrix_nonresponder(enc, responders, m),
                               m, "nonresponder");
                }
            } else {
                std::vector<std::size_t> responders(A.begin(), A.end() - 1);
                try_decode(build_decoding_matrix_nonresponder(enc, responders, m),
                           m, "nonresponder");
            }
        }
    }
    return result;
}

RoundResult run_recover_all_round(const CyclicAssignment& assignment, const Matrix& F,
                                  const Matrix& W, const std::vector<std::size_t>& A,
                                  Rng& rng) {
    const SystemParams& params = assignment.params();
    RoundResult result;
    const std::uint64_t round_seed = rng.seed();
    RecoverAllResult ra = recover_all_scheme(params, assignment, F, W, A, rng);
    result.cost_symbols = ra.cost_symbols;
    result.fallback_retries = ra.retries;
    if (!ra.ok) {
        result.failures.push_back({round_seed, A, 0, "fallback"});
        return result;
    }
    const Matrix expected = mat_mul(F, W);
    for (std::size_t m = 1; m <= params.N; ++m) {
        if (ra.decoded[m - 1] != expected)
            result.failures.push_back({round_seed, A, m, "mismatch"});
    }
    result.decoded = std::move(ra.decoded);
    return result;
}

}  // namespace

RoundResult run_round(const CyclicAssignment& assignment, const Matrix& F,
                      const Matrix& W, const std::vector<std::size_t>& A,
                      Rng& rng, const RoundOptions& opts) {
    const SystemParams& params = assignment.params();
    if (A.size() != params.Nr)
        throw std::invalid_argument("run_round: |A| != Nr");

    if (params.Nr == 1) {
        // Each worker holds every dataset and computes locally; nothing moves.
        RoundResult result;
        result.decoded.assign(params.N, mat_mul(F, W));
        result.cost_symbols = 0;
        return result;
    }

    const SchemeKind kind = dispatch_scheme(params, opts.kind);
    if (kind == SchemeKind::NullSpace)
        return run_nullspace_round(assignment, F, W, A, rng, opts.strict);
    return run_recover_all_round(assignment, F, W, A, rng);
}

SimulationReport exhaustive_stragglers(const SystemParams& params, std::size_t trials,
                                       std::uint64_t master_seed,
                                       const SimulateOptions& opts) {
    params.validate();
    const SchemeKind kind = dispatch_scheme(params, opts.kind);

    const std::size_t scenario_count = binomial(params.N, params.Nr);
    if (scenario_count > 1000000 && !opts.force)
        throw ScenarioGuardError("C(N, Nr) = " + std::to_string(scenario_count) +
                                 " scenarios; pass --force to run anyway");

    const CyclicAssignment assignment = CyclicAssignment::build(params);
    const std::vector<std::vector<std::size_t>> scenarios =
        all_scenarios(params.N, params.Nr);

    SimulationReport report;
    report.params = params;
    report.scheme = kind == SchemeKind::NullSpace ? "nullspace" : "recover-all";
    report.master_seed = master_seed;
    report.trials = trials;
    report.scenarios_checked = scenarios.size();
    report.scenario_cost_symbols.assign(scenarios.size(), 0);

    // failure counts per (scenario, worker); worst case taken over scenarios
    std::vector<std::vector<std::size_t>> fail_count(
        scenarios.size(), std::vector<std::size_t>(params.N, 0));

    const Rng master(master_seed);
    RoundOptions ropts{kind, opts.strict};

    for (std::size_t t = 0; t < trials; ++t) {
        Rng trial_rng = master.derive(1, t);
        const Matrix F = random_demand(params, assignment, trial_rng);
        const Matrix W = random_messages(params, trial_rng);
        for (std::size_t s = 0; s < scenarios.size(); ++s) {
            Rng round_rng = master.derive(2 + t, s);
            RoundResult rr = run_round(assignment, F, W, scenarios[s], round_rng, ropts);
            report.scenario_cost_symbols[s] = rr.cost_symbols;
            report.fallback_retries += rr.fallback_retries;
            for (const DecodeFailureRecord& fr : rr.failures) {
                if (fr.worker >= 1) fail_count[s][fr.worker - 1] += 1;
                report.decode_failures.push_back(fr);
            }
            if (opts.transcript && kind == SchemeKind::NullSpace) {
                // Replay the round's encodings from the same derived seed;
                // they are drawn in worker order inside the round.
                Rng replay = master.derive(2 + t, s);
                std::vector<WorkerEncoding> enc;
                for (std::size_t w = 1; w <= params.N; ++w)
                    enc.push_back(build_worker_encoding(F, assignment, w, replay));
                *opts.transcript << "{\"trial\":" << t << ",\"A\":[";
                for (std::size_t i = 0; i < scenarios[s].size(); ++i) {
                    if (i) *opts.transcript << ",";
                    *opts.transcript << scenarios[s][i];
                }
                *opts.transcript << "],\"signals\":[";
                bool first = true;
                for (std::size_t n : scenarios[s]) {
                    if (!first) *opts.transcript << ",";
                    first = false;
                    *opts.transcript << signal_to_json(
                        encode_signal(enc[n - 1], F, assignment, W));
                }
                *opts.transcript << "]}\n";
            }
        }
    }

    std::size_t max_cost = 0;
    for (std::size_t c : report.scenario_cost_symbols) max_cost = std::max(max_cost, c);
    report.worst_case_cost_R =
        static_cast<double>(max_cost) / static_cast<double>(params.L);

    report.per_worker_error_rate.assign(params.N, 0.0);
    for (std::size_t n = 0; n < params.N; ++n) {
        double worst = 0;
        for (std::size_t s = 0; s < scenarios.size(); ++s)
            worst = std::max(worst, trials == 0
                                        ? 0.0
                                        : static_cast<double>(fail_count[s][n]) /
                                              static_cast<double>(trials));
        report.per_worker_error_rate[n] = worst;
        report.empirical_error_rate = std::max(report.empirical_error_rate, worst);
    }
    return report;
}

std::string SimulationReport::to_json() const {
    std::ostringstream os;
    os << "{\"params\":{\"K\":" << params.K << ",\"N\":" << params.N
       << ",\"Nr\":" << params.Nr << ",\"Kc\":" << params.Kc << ",\"q\":" << params.q
       << ",\"L\":" << params.L << "},\"scheme\":\"" << scheme << "\""
       << ",\"master_seed\":" << master_seed << ",\"trials\":" << trials
       << ",\"scenarios_checked\":" << scenarios_checked << ",\"decode_failures\":[";
    for (std::size_t i = 0; i < decode_failures.size(); ++i) {
        const DecodeFailureRecord& fr = decode_failures[i];
        if (i) os << ",";
        os << "{\"seed\":" << fr.seed << ",\"A\":[";
        for (std::size_t j = 0; j < fr.A.size(); ++j) {
            if (j) os << ",";
            os << fr.A[j];
        }
        os << "],\"worker\":" << fr.worker << ",\"kind\":\"" << fr.kind << "\"}";
    }
    os << "],\"measured_cost_symbols\":[";
    for (std::size_t i = 0; i < scenario_cost_symbols.size(); ++i) {
        if (i) os << ",";
        os << scenario_cost_symbols[i];
    }
    os << "],\"worst_case_cost_R\":" << worst_case_cost_R
       << ",\"per_worker_error_rate\":[";
    for (std::size_t i = 0; i < per_worker_error_rate.size(); ++i) {
        if (i) os << ",";
        os << per_worker_error_rate[i];
    }
    os << "],\"empirical_error_rate\":" << empirical_error_rate
       << ",\"fallback_retries\":" << fallback_retries << "}";
    return os.str();
}

}  // namespace dlsc
