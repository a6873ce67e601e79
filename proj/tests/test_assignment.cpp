#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "dlsc/assignment.hpp"

using namespace dlsc;

TEST_CASE("mod1 one-based wrap") {
    CHECK(mod1(1, 4) == 1);
    CHECK(mod1(4, 4) == 4);
    CHECK(mod1(5, 4) == 1);
    CHECK(mod1(8, 4) == 4);
    CHECK(mod1(0, 4) == 4);
    CHECK(mod1(-1, 4) == 3);
    CHECK(mod1(-4, 4) == 4);
    CHECK(mod1(7, 7) == 7);
}

TEST_CASE("params validation") {
    SystemParams ok{4, 4, 3, 4};
    CHECK_NOTHROW(ok.validate());
    CHECK(ok.M() == 2);
    CHECK(ok.per_node() == 1);
    CHECK(ok.complement_size() == 2);
    CHECK(ok.u_dim() == 2);

    SystemParams bad_div{10, 4, 3, 4};  // N does not divide K
    CHECK_THROWS_AS(bad_div.validate(), std::invalid_argument);
    SystemParams bad_nr{4, 4, 5, 4};  // Nr > N
    CHECK_THROWS_AS(bad_nr.validate(), std::invalid_argument);
    SystemParams bad_kc{4, 4, 3, 0};  // Kc < 1
    CHECK_THROWS_AS(bad_kc.validate(), std::invalid_argument);
    SystemParams bad_q{4, 4, 3, 4, 15};  // composite modulus
    CHECK_THROWS_AS(bad_q.validate(), std::invalid_argument);
}

TEST_CASE("worked-example assignment table (K=N=4, Nr=3)") {
    CyclicAssignment a = CyclicAssignment::build({4, 4, 3, 4});
    CHECK(a.M() == 2);
    CHECK(a.Z(1) == std::vector<std::size_t>{1, 2});
    CHECK(a.Z(2) == std::vector<std::size_t>{2, 3});
    CHECK(a.Z(3) == std::vector<std::size_t>{3, 4});
    CHECK(a.Z(4) == std::vector<std::size_t>{1, 4});
    CHECK(a.complement(1) == std::vector<std::size_t>{3, 4});
    CHECK(a.holders_of(1) == std::vector<std::size_t>{1, 4});
    CHECK(a.holds(2, 3));
    CHECK_FALSE(a.holds(2, 1));
}

TEST_CASE("assignment sizes and replication for K=12, N=6, Nr=3") {
    SystemParams p{12, 6, 3, 8};
    CyclicAssignment a = CyclicAssignment::build(p);
    for (std::size_t n = 1; n <= p.N; ++n) {
        CHECK(a.Z(n).size() == p.M());  // (K/N)(N-Nr+1) = 8
        CHECK(a.complement(n).size() == p.complement_size());
    }
    for (std::size_t k = 1; k <= p.K; ++k)
        CHECK(a.holders_of(k).size() == p.N - p.Nr + 1);  // replication 4
}

TEST_CASE("duality: n holds k iff k in Z(n)") {
    for (SystemParams p : {SystemParams{4, 4, 3, 4}, SystemParams{12, 6, 3, 8},
                           SystemParams{12, 12, 5, 8}}) {
        CyclicAssignment a = CyclicAssignment::build(p);
        for (std::size_t n = 1; n <= p.N; ++n)
            for (std::size_t k = 1; k <= p.K; ++k) {
                bool in_z = std::binary_search(a.Z(n).begin(), a.Z(n).end(), k);
                std::vector<std::size_t> h = a.holders_of(k);
                bool in_h = std::binary_search(h.begin(), h.end(), n);
                REQUIRE(a.holds(n, k) == in_z);
                REQUIRE(in_z == in_h);
            }
    }
}

TEST_CASE("any Nr-1 workers beside n cover n's missing datasets") {
    // every dataset outside Z(n) is held by all of [N] \ (its non-holders),
    // and the Nr-1 non-holders other than n cannot exclude everyone
    SystemParams p{12, 6, 4, 8};
    CyclicAssignment a = CyclicAssignment::build(p);
    for (std::size_t n = 1; n <= p.N; ++n)
        for (std::size_t k : a.complement(n)) {
            std::size_t holders_beside_n = 0;
            for (std::size_t m : a.holders_of(k))
                if (m != n) ++holders_beside_n;
            REQUIRE(holders_beside_n >= p.N - p.Nr + 1 - 0);  // n never holds k
        }
}

TEST_CASE("to_json is nonempty and mentions every worker") {
    CyclicAssignment a = CyclicAssignment::build({4, 4, 3, 4});
    std::string j = a.to_json();
    CHECK(j.find("\"Z\"") != std::string::npos);
    CHECK(j.find("[1,2]") != std::string::npos);
}
