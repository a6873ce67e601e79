#pragma once

#include <cstdint>
#include <random>

namespace dlsc {

// splitmix64 finalizer; good enough to decorrelate derived seeds.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic RNG that remembers its seed so failures can be replayed.
// All randomness in the project flows from one master seed through
// derive(suite, trial) so sub-runs are independently reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), gen_(seed) {}

    std::uint64_t next() { return gen_(); }
    std::uint64_t seed() const { return seed_; }

    Rng derive(std::uint64_t stream, std::uint64_t index = 0) const {
        return Rng(mix64(seed_ ^ mix64(stream ^ 0x51d342f0a4e1c9b5ULL) ^
                         mix64(index ^ 0xc2b2ae3d27d4eb4fULL)));
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 gen_;
};

}  // namespace dlsc
