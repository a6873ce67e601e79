#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dlsc/assignment.hpp"
#include "dlsc/matrix.hpp"

namespace dlsc {

// Retry budget for redrawing zero/dependent random vectors and degenerate
// demand matrices; exhaustion is an error, never a silent loop.
inline constexpr int kRetryBudget = 64;

enum class SchemeKind { Auto, NullSpace, RecoverAll };

// Which protocol a parameter point supports. The null-space scheme covers
// Kc > (K/N) Nr; the recover-all stand-in covers K/N <= Kc; below K/N only
// the cost formulas apply (the message-splitting construction is out of
// scope here).
enum class Regime { NullSpace, RecoverAll, CostOnly };
Regime classify_regime(const SystemParams& params);
SchemeKind dispatch_scheme(const SystemParams& params, SchemeKind requested);

// Uniform random Kc x K demand matrix, redrawn (bounded retries) until every
// column submatrix F_bar_n is full rank. Throws DegenerateDemandError when
// the budget runs out (plausible only for tiny q).
Matrix random_demand(const SystemParams& params, const CyclicAssignment& assignment,
                     Rng& rng);

// Uniform random messages W, one length-L row per dataset.
Matrix random_messages(const SystemParams& params, Rng& rng);

// Basis of N((F_bar_n)^T): the coefficient vectors on [F_1; ...; F_Kc] a
// worker can evaluate from its local messages alone. Exactly
// Kc - (K/N)(Nr-1) vectors.
SubspaceBasis build_local_nullspace(const Matrix& F, const CyclicAssignment& assignment,
                                    std::size_t n);

// `count` uniform random combinations of the basis, redrawn while zero and,
// when count <= dim, while mutually dependent.
std::vector<Vec> draw_v_vectors(const Field& f, const SubspaceBasis& u_basis,
                                std::size_t count, Rng& rng);

struct WorkerEncoding {
    std::size_t worker = 0;       // 1-based
    Field field = Field(2);
    SubspaceBasis u_basis;        // ambient dim Kc
    std::vector<Vec> v_vectors;   // K/N vectors in span(u_basis)
};

WorkerEncoding build_worker_encoding(const Matrix& F, const CyclicAssignment& assignment,
                                     std::size_t n, Rng& rng);

struct Signal {
    std::size_t sender = 0;
    Matrix payload;  // K/N rows of length L, row i = v_{n,i}^T [F_1;...;F_Kc]
    Signal() : payload(Field(2), 0, 0) {}
    Signal(std::size_t s, Matrix p) : sender(s), payload(std::move(p)) {}
};

// Evaluates coeffs^T * F * W using only rows of W in Z_n. The expanded
// support of coeffs^T * F must lie inside Z_n (that is what the null-space
// construction guarantees); a nonzero coefficient outside it throws.
Vec coded_row_from_local(const Vec& coeffs, const Matrix& F,
                         const CyclicAssignment& assignment, std::size_t n,
                         const Matrix& W);

Signal encode_signal(const WorkerEncoding& enc, const Matrix& F,
                     const CyclicAssignment& assignment, const Matrix& W);

struct RowProvenance {
    std::size_t worker;  // 1-based
    char kind;           // 'u' or 'v'
    std::size_t index;   // 0-based within the worker's u basis / v list
};

struct DecodingMatrix {
    Matrix S;  // Kc x Kc
    std::vector<RowProvenance> row_provenance;
    explicit DecodingMatrix(const Field& f, std::size_t kc)
        : S(f, kc, kc) {}
};

// Decoding matrix for responding worker A[i] (0-based position in sorted A):
// v-rows of earlier responders, its own u-rows, v-rows of later responders.
DecodingMatrix build_decoding_matrix_responder(
    const std::vector<WorkerEncoding>& encodings_by_worker,  // size N, index n-1
    const std::vector<std::size_t>& A, std::size_t i);

// Decoding matrix for non-responder j: v-rows of the chosen Nr-1 responders
// (in the given order), then all u-rows of j.
DecodingMatrix build_decoding_matrix_nonresponder(
    const std::vector<WorkerEncoding>& encodings_by_worker,
    const std::vector<std::size_t>& responders, std::size_t j);

// Recovers [F_1; ...; F_Kc] W = S^{-1} * stacked. `stacked` row order must
// match the provenance. Throws SingularMatrixError carrying `trial_seed`.
Matrix decode(const DecodingMatrix& dm, const Matrix& stacked,
              std::uint64_t trial_seed = 0);

// Recover-all fallback for K/N <= Kc: each responder sends K/N random
// combinations of its local messages; every worker solves for its missing
// messages and computes F W locally. Realizes cost (K/N) Nr L by
// construction; decode failures are redraw-and-retried within the budget.
struct RecoverAllResult {
    std::vector<Matrix> decoded;   // per worker (1-based offset), Kc x L
    std::size_t cost_symbols = 0;  // (K/N) * Nr * L
    std::size_t retries = 0;       // coefficient redraws consumed
    bool ok = false;               // false iff the retry budget ran out
    std::uint64_t fail_seed = 0;
};

RecoverAllResult recover_all_scheme(const SystemParams& params,
                                    const CyclicAssignment& assignment,
                                    const Matrix& F, const Matrix& W,
                                    const std::vector<std::size_t>& A, Rng& rng);

std::string signal_to_json(const Signal& s);

}  // namespace dlsc
