#include "dlsc/example1.hpp"

#include <algorithm>

#include "dlsc/costs.hpp"
#include "dlsc/scheme.hpp"
#include "dlsc/simulator.hpp"

namespace dlsc {

namespace {

Vec vec_from_signed(const Field& f, std::initializer_list<std::int64_t> entries) {
    Vec v;
    for (std::int64_t z : entries) v.push_back(f.from_signed(z));
    return v;
}

}  // namespace

std::vector<GoldenCheck> run_example1_checks(std::uint64_t q) {
    std::vector<GoldenCheck> checks;
    auto record = [&](const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back({name, pass, pass ? "" : detail});
    };

    SystemParams params{4, 4, 3, 4, q, 4};
    const Field f(q);
    const CyclicAssignment assignment = CyclicAssignment::build(params);

    record("assignment Z_n matches the worked table",
           assignment.Z(1) == std::vector<std::size_t>{1, 2} &&
               assignment.Z(2) == std::vector<std::size_t>{2, 3} &&
               assignment.Z(3) == std::vector<std::size_t>{3, 4} &&
               assignment.Z(4) == std::vector<std::size_t>{1, 4} &&
               assignment.M() == 2,
           "cyclic assignment disagrees");

    const Matrix F = Matrix::from_signed(f, 4, 4,
                                         {1, 1, 1, 1,
                                          1, 2, 3, 4,
                                          1, 0, 2, 3,
                                          1, 2, 1, 4});
    record("demand matrix has rank 4", rank(F) == 4, "rank != 4");

    // Hand-picked null-space bases and random-combination choices.
    const std::vector<std::vector<Vec>> golden_u = {
        {vec_from_signed(f, {0, -5, 8, -1}), vec_from_signed(f, {5, 0, -3, 1})},
        {vec_from_signed(f, {0, -1, 0, 1}), vec_from_signed(f, {-1, -2, 3, 0})},
        {vec_from_signed(f, {2, 3, -1, -4}), vec_from_signed(f, {-6, -2, 3, 5})},
        {vec_from_signed(f, {0, -1, 1, 1}), vec_from_signed(f, {4, -4, 3, 2})},
    };
    const std::vector<Vec> golden_v = {
        vec_from_signed(f, {0, -5, 8, -1}),     // u_{1,1}
        vec_from_signed(f, {-1, -2, 3, 0}),     // u_{2,2}
        vec_from_signed(f, {-4, 1, 2, 1}),      // u_{3,1} + u_{3,2}
        vec_from_signed(f, {12, -14, 11, 8}),   // 2 u_{4,1} + 3 u_{4,2}
    };

    std::vector<WorkerEncoding> enc(4);
    bool span_ok = true, dim_ok = true;
    for (std::size_t n = 1; n <= 4; ++n) {
        SubspaceBasis computed = build_local_nullspace(F, assignment, n);
        dim_ok = dim_ok && computed.dim() == 2;
        for (const Vec& u : golden_u[n - 1])
            span_ok = span_ok && is_in_span(f, u, computed);
        enc[n - 1].worker = n;
        enc[n - 1].field = f;
        enc[n - 1].u_basis = SubspaceBasis{4, golden_u[n - 1]};
        enc[n - 1].v_vectors = {golden_v[n - 1]};
    }
    record("computed null bases have dimension 2", dim_ok, "wrong basis size");
    record("listed u vectors lie in the computed null spaces", span_ok,
           "membership failed");

    // Combination coefficients replayed through draw machinery would need a
    // stacked RNG; applying them directly checks the same algebra.
    bool v_ok = true;
    {
        Vec v3(4, 0);
        axpy(f, 1, golden_u[2][0], v3);
        axpy(f, 1, golden_u[2][1], v3);
        v_ok = v_ok && v3 == golden_v[2];
        Vec v4(4, 0);
        axpy(f, 2, golden_u[3][0], v4);
        axpy(f, 3, golden_u[3][1], v4);
        v_ok = v_ok && v4 == golden_v[3];
        v_ok = v_ok && golden_v[0] == golden_u[0][0] && golden_v[1] == golden_u[1][1];
    }
    record("v vectors equal the stated basis combinations", v_ok, "combination mismatch");

    // Transmitted coefficient vectors on [W_1..W_4]: v^T F.
    const std::vector<Vec> expected_coeffs = {
        vec_from_signed(f, {2, -12, 0, 0}),
        vec_from_signed(f, {0, -5, -1, 0}),
        vec_from_signed(f, {0, 0, 4, 10}),
        vec_from_signed(f, {17, 0, 0, 21}),
    };
    bool coeff_ok = true;
    for (std::size_t n = 0; n < 4; ++n)
        coeff_ok = coeff_ok && vec_mat(golden_v[n], F) == expected_coeffs[n];
    record("transmitted coefficient vectors match (2W1-12W2; -5W2-W3; 4W3+10W4; 17W1+21W4)",
           coeff_ok, "v^T F mismatch");

    // End-to-end with random messages.
    Rng rng(20240404);
    const Matrix W = Matrix::random(f, 4, params.L, rng);
    const Matrix expected = mat_mul(F, W);

    bool encode_ok = true;
    std::vector<Matrix> v_rows, u_rows;
    for (std::size_t n = 1; n <= 4; ++n) {
        Signal sig = encode_signal(enc[n - 1], F, assignment, W);
        // cross-check against the full-knowledge product
        Vec full = vec_mat(vec_mat(golden_v[n - 1], F), W);
        encode_ok = encode_ok && sig.payload.row(0) == full;
        v_rows.push_back(sig.payload);
        Matrix ur(f, 2, params.L);
        for (std::size_t t = 0; t < 2; ++t)
            ur.set_row(t, coded_row_from_local(golden_u[n - 1][t], F, assignment, n, W));
        u_rows.push_back(ur);
    }
    record("signals computed from local messages equal the global products",
           encode_ok, "local/global encode mismatch");

    const std::vector<std::size_t> A = {1, 2, 3};
    auto stack = [&](const DecodingMatrix& dm) {
        Matrix stacked(f, 4, params.L);
        for (std::size_t r = 0; r < dm.row_provenance.size(); ++r) {
            const RowProvenance& p = dm.row_provenance[r];
            const Matrix& src = p.kind == 'u' ? u_rows[p.worker - 1] : v_rows[p.worker - 1];
            stacked.set_row(r, src.row(p.index));
        }
        return stacked;
    };

    bool responder_rank_ok = true, responder_decode_ok = true;
    for (std::size_t i = 0; i < 3; ++i) {
        DecodingMatrix dm = build_decoding_matrix_responder(enc, A, i);
        if (rank(dm.S) != 4) {
            responder_rank_ok = false;
            continue;
        }
        responder_decode_ok =
            responder_decode_ok && decode(dm, stack(dm)) == expected;
    }
    record("S_[3]^(i) full rank for every responder", responder_rank_ok, "singular S");
    record("every responder decodes F W exactly", responder_decode_ok, "decode mismatch");

    bool nonresp_rank_ok = true, nonresp_decode_ok = true;
    const std::vector<std::vector<std::size_t>> pairs = {{1, 2}, {1, 3}, {2, 3}};
    for (const std::vector<std::size_t>& pr : pairs) {
        DecodingMatrix dm = build_decoding_matrix_nonresponder(enc, pr, 4);
        if (rank(dm.S) != 4) {
            nonresp_rank_ok = false;
            continue;
        }
        nonresp_decode_ok = nonresp_decode_ok && decode(dm, stack(dm)) == expected;
    }
    record("S full rank for worker 4 with every responder pair", nonresp_rank_ok,
           "singular S");
    record("worker 4 decodes F W from any 2 responders", nonresp_decode_ok,
           "decode mismatch");

    const std::size_t cost_symbols = A.size() * params.per_node() * params.L;
    record("communication cost R = 3",
           cost_symbols == 3 * params.L && r_dec(4, 4, 3, 4) == 3, "cost mismatch");
    record("benchmark cost is 4", r_cec(4, 4, 3, 4) == 4, "benchmark mismatch");

    return checks;
}

bool all_pass(const std::vector<GoldenCheck>& checks) {
    return std::all_of(checks.begin(), checks.end(),
                       [](const GoldenCheck& c) { return c.pass; });
}

}  // namespace dlsc
