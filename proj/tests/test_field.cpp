#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "dlsc/field.hpp"

using dlsc::Field;
using dlsc::Rng;

namespace {
const std::uint64_t kPrimes[] = {2, 7, 101, 2147483647ULL};
}

TEST_CASE("primality gate") {
    CHECK(dlsc::is_prime_u64(2));
    CHECK(dlsc::is_prime_u64(7));
    CHECK(dlsc::is_prime_u64(101));
    CHECK(dlsc::is_prime_u64(2147483647ULL));
    CHECK_FALSE(dlsc::is_prime_u64(1));
    CHECK_FALSE(dlsc::is_prime_u64(2147483649ULL));  // 3 * 715827883
    CHECK_THROWS_AS(Field(15), std::invalid_argument);
    CHECK_THROWS_AS(Field(0), std::invalid_argument);
}

TEST_CASE("field axioms on random triples") {
    // 10^4 triples per modulus: associativity, commutativity, identities,
    // distributivity, inverses.
    for (std::uint64_t q : kPrimes) {
        Field f(q);
        Rng rng(0x5eedULL + q);
        for (int t = 0; t < 10000; ++t) {
            std::uint64_t a = f.rand_uniform(rng);
            std::uint64_t b = f.rand_uniform(rng);
            std::uint64_t c = f.rand_uniform(rng);
            REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            REQUIRE(f.add(a, b) == f.add(b, a));
            REQUIRE(f.mul(a, b) == f.mul(b, a));
            REQUIRE(f.add(a, 0) == a);
            REQUIRE(f.mul(a, 1) == a);
            REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            REQUIRE(f.add(a, f.neg(a)) == 0);
            REQUIRE(f.sub(a, b) == f.add(a, f.neg(b)));
            if (a != 0) REQUIRE(f.mul(a, f.inv(a)) == 1);
        }
    }
}

TEST_CASE("inverse exhaustive for small moduli") {
    for (std::uint64_t q : {2ULL, 7ULL, 101ULL}) {
        Field f(q);
        for (std::uint64_t a = 1; a < q; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
    }
    CHECK_THROWS_AS(Field(101).inv(0), dlsc::DivisionByZeroError);
}

TEST_CASE("pow matches repeated multiplication") {
    Field f(101);
    for (std::uint64_t a = 0; a < 101; a += 7) {
        std::uint64_t acc = 1;
        for (std::uint64_t e = 0; e < 10; ++e) {
            CHECK(f.pow(a, e) == acc);
            acc = f.mul(acc, a);
        }
    }
    // Fermat: a^(q-1) = 1
    for (std::uint64_t a = 1; a < 101; ++a) CHECK(f.pow(a, 100) == 1);
}

TEST_CASE("from_signed canonicalizes negatives") {
    Field f(101);
    CHECK(f.from_signed(-1) == 100);
    CHECK(f.from_signed(-101) == 0);
    CHECK(f.from_signed(-102) == 100);
    CHECK(f.from_signed(205) == 3);
    CHECK(f.from_signed(0) == 0);
    Field big(2147483647ULL);
    CHECK(big.from_signed(-12) == 2147483635ULL);
}

TEST_CASE("rand_uniform determinism and range") {
    Field f(2147483647ULL);
    Rng a(42), b(42);
    for (int t = 0; t < 1000; ++t) {
        std::uint64_t x = f.rand_uniform(a);
        CHECK(x == f.rand_uniform(b));
        CHECK(x < f.modulus());
    }
}

TEST_CASE("rand_uniform mean near q/2") {
    // crude unbiasedness oracle: sample mean within 2% of (q-1)/2
    Field f(2147483647ULL);
    Rng rng(7);
    const int n = 200000;
    long double sum = 0;
    for (int t = 0; t < n; ++t) sum += f.rand_uniform(rng);
    long double mean = sum / n;
    long double expect = (f.modulus() - 1) / 2.0L;
    CHECK(std::abs(static_cast<double>(mean / expect) - 1.0) < 0.02);
}

TEST_CASE("rand_nonzero never returns zero") {
    Field f(2);
    Rng rng(3);
    for (int t = 0; t < 100; ++t) CHECK(f.rand_nonzero(rng) == 1);
}

TEST_CASE("derived rng streams differ") {
    Rng master(99);
    Rng a = master.derive(1, 0);
    Rng b = master.derive(1, 1);
    Rng c = master.derive(2, 0);
    CHECK(a.next() != b.next());
    CHECK(a.next() != c.next());
    // same derivation replays identically
    Rng a2 = Rng(99).derive(1, 0);
    Rng a3 = Rng(99).derive(1, 0);
    for (int t = 0; t < 10; ++t) CHECK(a2.next() == a3.next());
}
