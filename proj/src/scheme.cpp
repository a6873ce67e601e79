#include "dlsc/scheme.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dlsc/errors.hpp"

namespace dlsc {

Regime classify_regime(const SystemParams& params) {
    if (params.Nr == 1) return Regime::RecoverAll;  // degenerate: cost 0
    const std::size_t kn = params.per_node();
    if (params.Kc > kn * params.Nr) return Regime::NullSpace;
    if (params.Kc >= kn) return Regime::RecoverAll;
    return Regime::CostOnly;
}

SchemeKind dispatch_scheme(const SystemParams& params, SchemeKind requested) {
    const Regime regime = classify_regime(params);
    if (requested == SchemeKind::Auto) {
        if (regime == Regime::CostOnly)
            throw RegimeError(
                "Kc < K/N requires the message-splitting construction, which is "
                "not implemented; only the cost formulas apply");
        return regime == Regime::NullSpace ? SchemeKind::NullSpace
                                           : SchemeKind::RecoverAll;
    }
    if (requested == SchemeKind::NullSpace && regime != Regime::NullSpace)
        throw RegimeError("null-space scheme requires Kc > (K/N) Nr");
    if (requested == SchemeKind::RecoverAll &&
        params.Nr > 1 && params.Kc < params.per_node())
        throw RegimeError("recover-all scheme requires Kc >= K/N");
    return requested;
}

namespace {

bool demand_is_valid(const Matrix& F, const SystemParams& params,
                     const CyclicAssignment& assignment) {
    if (rank(F) != std::min(params.Kc, params.K)) return false;
    const std::size_t cs = params.complement_size();
    if (cs == 0) return true;
    for (std::size_t n = 1; n <= params.N; ++n) {
        std::vector<std::size_t> cols0;
        for (std::size_t k : assignment.complement(n)) cols0.push_back(k - 1);
        Matrix fbar = F.select_cols(cols0);
        if (rank(fbar) != std::min(params.Kc, cs)) return false;
    }
    return true;
}

}  // namespace

Matrix random_demand(const SystemParams& params, const CyclicAssignment& assignment,
                     Rng& rng) {
    const Field f(params.q);
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        Matrix F = Matrix::random(f, params.Kc, params.K, rng);
        if (demand_is_valid(F, params, assignment)) return F;
    }
    throw DegenerateDemandError(
        "no full-rank demand matrix within the retry budget (seed " +
        std::to_string(rng.seed()) + ")");
}

Matrix random_messages(const SystemParams& params, Rng& rng) {
    return Matrix::random(Field(params.q), params.K, params.L, rng);
}

SubspaceBasis build_local_nullspace(const Matrix& F, const CyclicAssignment& assignment,
                                    std::size_t n) {
    const SystemParams& params = assignment.params();
    const std::size_t cs = params.complement_size();
    if (params.Kc <= cs)
        throw RegimeError("local null space is empty: Kc <= (K/N)(Nr-1)");

    std::vector<std::size_t> cols0;
    for (std::size_t k : assignment.complement(n)) cols0.push_back(k - 1);
    Matrix fbar = F.select_cols(cols0);
    if (rank(fbar) != cs)
        throw DegenerateDemandError("F_bar_" + std::to_string(n) +
                                    " is rank-deficient");
    SubspaceBasis basis = null_space_basis(transpose(fbar));
    if (basis.dim() != params.Kc - cs)
        throw std::logic_error("null space dimension violates rank-nullity");
    return basis;
}

std::vector<Vec> draw_v_vectors(const Field& f, const SubspaceBasis& u_basis,
                                std::size_t count, Rng& rng) {
    if (u_basis.dim() == 0)
        throw DegenerateDrawError("cannot draw from an empty basis");
    std::vector<Vec> out;
    const bool want_independent = count <= u_basis.dim();
    for (std::size_t i = 0; i < count; ++i) {
        bool done = false;
        for (int attempt = 0; attempt < kRetryBudget && !done; ++attempt) {
            Vec v(u_basis.ambient_dim, 0);
            for (const Vec& u : u_basis.vectors)
                axpy(f, f.rand_uniform(rng), u, v);
            if (std::all_of(v.begin(), v.end(),
                            [](std::uint64_t x) { return x == 0; }))
                continue;
            if (want_independent) {
                std::vector<Vec> probe = out;
                probe.push_back(v);
                if (span_dim(f, probe) != out.size() + 1) continue;
            }
            out.push_back(std::move(v));
            done = true;
        }
        if (!done)
            throw DegenerateDrawError(
                "v-vector redraw budget exhausted (seed " +
                std::to_string(rng.seed()) + ")");
    }
    return out;
}

WorkerEncoding build_worker_encoding(const Matrix& F, const CyclicAssignment& assignment,
                                     std::size_t n, Rng& rng) {
    WorkerEncoding enc;
    enc.worker = n;
    enc.field = F.field();
    enc.u_basis = build_local_nullspace(F, assignment, n);
    enc.v_vectors = draw_v_vectors(F.field(), enc.u_basis,
                                   assignment.params().per_node(), rng);
    return enc;
}

Vec coded_row_from_local(const Vec& coeffs, const Matrix& F,
                         const CyclicAssignment& assignment, std::size_t n,
                         const Matrix& W) {
    const Field& f = F.field();
    Vec w = vec_mat(coeffs, F);  // support must lie in Z_n
    Vec payload(W.cols(), 0);
    for (std::size_t k = 1; k <= assignment.params().K; ++k) {
        const std::uint64_t c = w[k - 1];
        if (c == 0) continue;
        if (!assignment.holds(n, k))
            throw std::logic_error("encoding support leak: worker " +
                                   std::to_string(n) + " needs W_" +
                                   std::to_string(k));
        Vec row = W.row(k - 1);
        axpy(f, c, row, payload);
    }
    return payload;
}

Signal encode_signal(const WorkerEncoding& enc, const Matrix& F,
                     const CyclicAssignment& assignment, const Matrix& W) {
    Matrix payload(F.field(), enc.v_vectors.size(), W.cols());
    for (std::size_t i = 0; i < enc.v_vectors.size(); ++i)
        payload.set_row(i, coded_row_from_local(enc.v_vectors[i], F, assignment,
                                                enc.worker, W));
    return Signal(enc.worker, std::move(payload));
}

namespace {

DecodingMatrix assemble(const Field& f, std::size_t kc,
                        const std::vector<std::pair<RowProvenance, const Vec*>>& rows) {
    if (rows.size() != kc)
        throw std::logic_error("decoding matrix row count != Kc");
    DecodingMatrix dm(f, kc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        dm.S.set_row(r, *rows[r].second);
        dm.row_provenance.push_back(rows[r].first);
    }
    return dm;
}

}  // namespace

DecodingMatrix build_decoding_matrix_responder(
    const std::vector<WorkerEncoding>& encodings_by_worker,
    const std::vector<std::size_t>& A, std::size_t i) {
    const WorkerEncoding& self = encodings_by_worker.at(A.at(i) - 1);
    const std::size_t kc = self.u_basis.ambient_dim;
    std::vector<std::pair<RowProvenance, const Vec*>> rows;
    for (std::size_t p = 0; p < A.size(); ++p) {
        const WorkerEncoding& enc = encodings_by_worker.at(A[p] - 1);
        if (p == i) {
            for (std::size_t t = 0; t < enc.u_basis.dim(); ++t)
                rows.push_back({{enc.worker, 'u', t}, &enc.u_basis.vectors[t]});
        } else {
            for (std::size_t t = 0; t < enc.v_vectors.size(); ++t)
                rows.push_back({{enc.worker, 'v', t}, &enc.v_vectors[t]});
        }
    }
    return assemble(self.field, kc, rows);
}

DecodingMatrix build_decoding_matrix_nonresponder(
    const std::vector<WorkerEncoding>& encodings_by_worker,
    const std::vector<std::size_t>& responders, std::size_t j) {
    const WorkerEncoding& self = encodings_by_worker.at(j - 1);
    const std::size_t kc = self.u_basis.ambient_dim;
    std::vector<std::pair<RowProvenance, const Vec*>> rows;
    for (std::size_t r : responders) {
        if (r == j) throw std::invalid_argument("non-responder listed as responder");
        const WorkerEncoding& enc = encodings_by_worker.at(r - 1);
        for (std::size_t t = 0; t < enc.v_vectors.size(); ++t)
            rows.push_back({{enc.worker, 'v', t}, &enc.v_vectors[t]});
    }
    for (std::size_t t = 0; t < self.u_basis.dim(); ++t)
        rows.push_back({{self.worker, 'u', t}, &self.u_basis.vectors[t]});
    return assemble(self.field, kc, rows);
}

Matrix decode(const DecodingMatrix& dm, const Matrix& stacked,
              std::uint64_t trial_seed) {
    if (stacked.rows() != dm.S.rows())
        throw std::invalid_argument("decode: stacked row count mismatch");
    return solve(dm.S, stacked, trial_seed);
}

RecoverAllResult recover_all_scheme(const SystemParams& params,
                                    const CyclicAssignment& assignment,
                                    const Matrix& F, const Matrix& W,
                                    const std::vector<std::size_t>& A, Rng& rng) {
    const Field& f = F.field();
    const std::size_t kn = params.per_node();
    RecoverAllResult result;

    if (params.Nr == 1) {
        // Every worker holds all datasets; nothing is transmitted.
        Matrix fw = mat_mul(F, W);
        result.decoded.assign(params.N, fw);
        result.cost_symbols = 0;
        result.ok = true;
        return result;
    }
    if (params.Kc < kn)
        throw RegimeError("recover-all scheme requires Kc >= K/N");

    const std::size_t unknowns = kn * (params.Nr - 1);
    result.cost_symbols = kn * params.Nr * params.L;

    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        // Each responder draws K/N random combining rows over its M local
        // messages and transmits the combined rows.
        struct Sent {
            std::vector<Vec> coeffs;  // over [1..K], support in Z_n
            Matrix payload;
        };
        std::vector<Sent> sent;
        for (std::size_t n : A) {
            Sent s{{}, Matrix(f, kn, params.L)};
            for (std::size_t i = 0; i < kn; ++i) {
                Vec c(params.K, 0);
                Vec row(params.L, 0);
                for (std::size_t k : assignment.Z(n)) {
                    c[k - 1] = f.rand_uniform(rng);
                    Vec wk = W.row(k - 1);
                    axpy(f, c[k - 1], wk, row);
                }
                s.coeffs.push_back(std::move(c));
                s.payload.set_row(i, row);
            }
            sent.push_back(std::move(s));
        }

        bool all_ok = true;
        std::vector<Matrix> decoded;
        for (std::size_t m = 1; m <= params.N && all_ok; ++m) {
            // Providers: the other responders for a responder, the first
            // Nr-1 responders for a non-responder (square system either way).
            std::vector<std::size_t> providers;  // indices into A/sent
            for (std::size_t p = 0; p < A.size() && providers.size() < params.Nr - 1;
                 ++p) {
                if (A[p] != m) providers.push_back(p);
            }
            std::vector<std::size_t> missing = assignment.complement(m);
            Matrix sys(f, unknowns, unknowns);
            Matrix rhs(f, unknowns, params.L);
            std::size_t eq = 0;
            for (std::size_t p : providers) {
                for (std::size_t i = 0; i < kn; ++i, ++eq) {
                    const Vec& c = sent[p].coeffs[i];
                    Vec row = sent[p].payload.row(i);
                    for (std::size_t k = 1; k <= params.K; ++k) {
                        if (c[k - 1] == 0) continue;
                        if (assignment.holds(m, k)) {
                            // subtract the known-message contribution
                            Vec wk = W.row(k - 1);
                            axpy(f, f.neg(c[k - 1]), wk, row);
                        } else {
                            auto it = std::lower_bound(missing.begin(), missing.end(), k);
                            sys.at(eq, static_cast<std::size_t>(it - missing.begin())) =
                                c[k - 1];
                        }
                    }
                    rhs.set_row(eq, row);
                }
            }
            try {
                Matrix sol = solve(sys, rhs, rng.seed());
                Matrix w_hat = W;  // local rows are already correct
                for (std::size_t idx = 0; idx < missing.size(); ++idx)
                    w_hat.set_row(missing[idx] - 1, sol.row(idx));
                decoded.push_back(mat_mul(F, w_hat));
            } catch (const SingularMatrixError&) {
                all_ok = false;
            }
        }
        if (all_ok) {
            result.decoded = std::move(decoded);
            result.ok = true;
            return result;
        }
        ++result.retries;
    }
    result.ok = false;
    result.fail_seed = rng.seed();
    return result;
}

std::string signal_to_json(const Signal& s) {
    std::ostringstream os;
    os << "{\"sender\":" << s.sender << ",\"rows\":[";
    for (std::size_t r = 0; r < s.payload.rows(); ++r) {
        if (r > 0) os << ",";
        os << "[";
        for (std::size_t c = 0; c < s.payload.cols(); ++c) {
            if (c > 0) os << ",";
            os << s.payload.at(r, c);
        }
        os << "]";
    }
    os << "]}";
    return os.str();
}

}  // namespace dlsc
