#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dlsc/example1.hpp"
#include "dlsc/scheme.hpp"

using namespace dlsc;

namespace {

Matrix example_f(const Field& f) {
    return Matrix::from_signed(f, 4, 4,
                               {1, 1, 1, 1,
                                1, 2, 3, 4,
                                1, 0, 2, 3,
                                1, 2, 1, 4});
}

}  // namespace

TEST_CASE("regime classification") {
    CHECK(classify_regime({4, 4, 3, 4}) == Regime::NullSpace);   // Kc=4 > 3
    CHECK(classify_regime({12, 6, 3, 8}) == Regime::NullSpace);  // 8 > 6
    CHECK(classify_regime({12, 6, 3, 6}) == Regime::RecoverAll); // 2 <= 6 <= 6
    CHECK(classify_regime({12, 12, 5, 8}) == Regime::NullSpace); // 8 > 5
    CHECK(classify_regime({12, 6, 3, 1}) == Regime::CostOnly);   // Kc < K/N
    CHECK(classify_regime({12, 12, 1, 8}) == Regime::RecoverAll);  // Nr=1, local
}

TEST_CASE("dispatch rejects unsupported combinations") {
    CHECK(dispatch_scheme({4, 4, 3, 4}, SchemeKind::Auto) == SchemeKind::NullSpace);
    CHECK(dispatch_scheme({12, 6, 3, 6}, SchemeKind::Auto) == SchemeKind::RecoverAll);
    // recover-all is forceable whenever Kc >= K/N, even above the boundary
    CHECK(dispatch_scheme({12, 12, 5, 8}, SchemeKind::RecoverAll) ==
          SchemeKind::RecoverAll);
    CHECK_THROWS_AS(dispatch_scheme({12, 6, 3, 1}, SchemeKind::Auto), RegimeError);
    // null-space needs Kc > (K/N) Nr strictly; boundary Kc = (K/N)(Nr-1)
    // leaves no local null space at all
    CHECK_THROWS_AS(dispatch_scheme({12, 6, 3, 4}, SchemeKind::NullSpace), RegimeError);
}

TEST_CASE("local null space: dimension and annihilation") {
    SystemParams p{12, 6, 3, 8};
    CyclicAssignment a = CyclicAssignment::build(p);
    Rng rng(21);
    Matrix F = random_demand(p, a, rng);
    Field f = F.field();
    for (std::size_t n = 1; n <= p.N; ++n) {
        SubspaceBasis u = build_local_nullspace(F, a, n);
        CHECK(u.dim() == p.u_dim());  // 8 - 2*2 = 4
        // u^T F is zero on every column outside Z(n)
        for (const Vec& v : u.vectors) {
            Vec row = vec_mat(v, F);
            for (std::size_t k : a.complement(n)) REQUIRE(row[k - 1] == 0);
        }
    }
}

TEST_CASE("draw_v_vectors: in span, nonzero, independent") {
    SystemParams p{12, 6, 3, 8};
    CyclicAssignment a = CyclicAssignment::build(p);
    Rng rng(22);
    Matrix F = random_demand(p, a, rng);
    Field f = F.field();
    SubspaceBasis u = build_local_nullspace(F, a, 1);
    std::vector<Vec> vs = draw_v_vectors(f, u, p.per_node(), rng);
    REQUIRE(vs.size() == 2);
    for (const Vec& v : vs) {
        CHECK(is_in_span(f, v, u));
        bool zero = true;
        for (std::uint64_t e : v) zero = zero && e == 0;
        CHECK_FALSE(zero);
    }
    CHECK(span_dim(f, vs) == 2);
}

TEST_CASE("encode_signal matches global evaluation and stays local") {
    SystemParams p{4, 4, 3, 4, 101, 4};
    CyclicAssignment a = CyclicAssignment::build(p);
    Rng rng(23);
    Matrix F = random_demand(p, a, rng);
    Matrix W = random_messages(p, rng);
    for (std::size_t n = 1; n <= p.N; ++n) {
        WorkerEncoding enc = build_worker_encoding(F, a, n, rng);
        Signal s = encode_signal(enc, F, a, W);
        CHECK(s.sender == n);
        REQUIRE(s.payload.rows() == p.per_node());
        // oracle: v^T (F W) computed globally
        Matrix FW = mat_mul(F, W);
        for (std::size_t i = 0; i < enc.v_vectors.size(); ++i)
            REQUIRE(s.payload.row(i) == vec_mat(enc.v_vectors[i], FW));
    }
}

TEST_CASE("coded_row_from_local rejects nonlocal support") {
    SystemParams p{4, 4, 3, 4, 101, 4};
    CyclicAssignment a = CyclicAssignment::build(p);
    Field f(101);
    Matrix F = example_f(f);
    Rng rng(24);
    Matrix W = random_messages(p, rng);
    // e1^T F has support {1,2,3,4}, not within Z(1) = {1,2}
    Vec e1{1, 0, 0, 0};
    CHECK_THROWS_AS(coded_row_from_local(e1, F, a, 1, W), std::logic_error);
}

TEST_CASE("responder and non-responder decoding round-trip") {
    SystemParams p{4, 4, 3, 4, 2147483647ULL, 4};
    CyclicAssignment a = CyclicAssignment::build(p);
    Rng rng(25);
    Matrix F = random_demand(p, a, rng);
    Matrix W = random_messages(p, rng);
    Matrix FW = mat_mul(F, W);
    std::vector<WorkerEncoding> encs;
    std::vector<Signal> signals;
    for (std::size_t n = 1; n <= p.N; ++n) {
        encs.push_back(build_worker_encoding(F, a, n, rng));
        signals.push_back(encode_signal(encs.back(), F, a, W));
    }
    std::vector<std::size_t> A{1, 2, 3};
    Field f = F.field();
    for (std::size_t i = 0; i < A.size(); ++i) {
        DecodingMatrix dm = build_decoding_matrix_responder(encs, A, i);
        // stack rows per provenance: received v-rows and locally computed u-rows
        std::vector<Vec> rows;
        for (const RowProvenance& pr : dm.row_provenance) {
            if (pr.kind == 'v')
                rows.push_back(signals[pr.worker - 1].payload.row(pr.index));
            else
                rows.push_back(
                    coded_row_from_local(encs[pr.worker - 1].u_basis.vectors[pr.index],
                                         F, a, pr.worker, W));
        }
        CHECK(decode(dm, stack_rows(f, rows)) == FW);
    }
    DecodingMatrix dm = build_decoding_matrix_nonresponder(encs, {1, 2}, 4);
    std::vector<Vec> rows;
    for (const RowProvenance& pr : dm.row_provenance) {
        if (pr.kind == 'v')
            rows.push_back(signals[pr.worker - 1].payload.row(pr.index));
        else
            rows.push_back(coded_row_from_local(encs[3].u_basis.vectors[pr.index], F,
                                                a, 4, W));
    }
    CHECK(decode(dm, stack_rows(f, rows)) == FW);
}

TEST_CASE("deliberately dependent rows make decode fail, not crash") {
    Field f(101);
    DecodingMatrix dm(f, 2);
    dm.S.at(0, 0) = 1;
    dm.S.at(0, 1) = 2;
    dm.S.at(1, 0) = 2;
    dm.S.at(1, 1) = 4;
    Matrix stacked(f, 2, 1);
    CHECK_THROWS_AS(decode(dm, stacked, 31), SingularMatrixError);
}

TEST_CASE("recover-all fallback decodes everywhere at the stated cost") {
    for (SystemParams p : {SystemParams{12, 12, 5, 8, 2147483647ULL, 4},
                           SystemParams{12, 6, 2, 3, 2147483647ULL, 4}}) {
        CyclicAssignment a = CyclicAssignment::build(p);
        Rng rng(26);
        Matrix F = random_demand(p, a, rng);
        Matrix W = random_messages(p, rng);
        Matrix FW = mat_mul(F, W);
        std::vector<std::size_t> A;
        for (std::size_t n = 1; n <= p.Nr; ++n) A.push_back(n);
        RecoverAllResult r = recover_all_scheme(p, a, F, W, A, rng);
        REQUIRE(r.ok);
        CHECK(r.cost_symbols == p.per_node() * p.Nr * p.L);
        for (std::size_t n = 1; n <= p.N; ++n) CHECK(r.decoded[n - 1] == FW);
    }
}

TEST_CASE("random_demand produces full-rank column blocks") {
    SystemParams p{4, 4, 3, 4, 101, 4};
    CyclicAssignment a = CyclicAssignment::build(p);
    Rng rng(27);
    for (int t = 0; t < 20; ++t) {
        Matrix F = random_demand(p, a, rng);
        CHECK(rank(F) == std::min(p.Kc, p.K));
        for (std::size_t n = 1; n <= p.N; ++n) {
            std::vector<std::size_t> cols;
            for (std::size_t k : a.complement(n)) cols.push_back(k - 1);
            CHECK(rank(F.select_cols(cols)) == cols.size());
        }
    }
}
