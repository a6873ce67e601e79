#pragma once

#include <cstdint>
#include <limits>

#include "dlsc/errors.hpp"
#include "dlsc/rng.hpp"

namespace dlsc {

// Deterministic Miller-Rabin, exact for all n < 2^63.
bool is_prime_u64(std::uint64_t n);

// Arithmetic context for the prime field F_q. Elements are plain uint64_t
// values kept canonical in [0, q); the context (not the element) carries the
// modulus so matrices stay compact. All operations are pure and the context
// is freely shareable across threads.
class Field {
public:
    explicit Field(std::uint64_t q);

    std::uint64_t modulus() const { return q_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;  // q < 2^63, no overflow
        return s >= q_ ? s - q_ : s;
    }

    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + q_ - b;
    }

    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : q_ - a; }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(a) * b % q_);
    }

    std::uint64_t inv(std::uint64_t a) const;

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

    // Canonical representative of a signed integer; lets golden data carry
    // the negative entries used in hand-written bases.
    std::uint64_t from_signed(std::int64_t z) const {
        std::int64_t q = static_cast<std::int64_t>(q_);
        std::int64_t r = z % q;
        if (r < 0) r += q;
        return static_cast<std::uint64_t>(r);
    }

    // Uniform over [0, q) by rejection sampling so there is no modulo bias.
    std::uint64_t rand_uniform(Rng& rng) const {
        const std::uint64_t t = (0 - q_) % q_;  // 2^64 mod q
        std::uint64_t x;
        do {
            x = rng.next();
        } while (x > std::numeric_limits<std::uint64_t>::max() - t);
        return x % q_;
    }

    std::uint64_t rand_nonzero(Rng& rng) const {
        std::uint64_t x;
        do {
            x = rand_uniform(rng);
        } while (x == 0);
        return x;
    }

    bool operator==(const Field& other) const { return q_ == other.q_; }
    bool operator!=(const Field& other) const { return q_ != other.q_; }

private:
    std::uint64_t q_;
};

inline void require_same_field(const Field& a, const Field& b) {
    if (a != b) throw FieldMismatchError("mixed field moduli");
}

}  // namespace dlsc
