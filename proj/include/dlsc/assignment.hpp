#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dlsc/field.hpp"

namespace dlsc {

// Problem instance (K, N, Nr, Kc, q, L). M is derived:
// M = (K/N)(N - Nr + 1), the minimum computation cost.
struct SystemParams {
    std::size_t K = 0;   // dataset count
    std::size_t N = 0;   // worker count
    std::size_t Nr = 0;  // responding workers per round
    std::size_t Kc = 0;  // demanded linear combinations
    std::uint64_t q = 2147483647;  // field modulus, prime
    std::size_t L = 4;   // message length in field symbols

    void validate() const;  // throws std::invalid_argument

    std::size_t per_node() const { return K / N; }  // K/N
    std::size_t M() const { return per_node() * (N - Nr + 1); }
    std::size_t complement_size() const { return per_node() * (Nr - 1); }
    // Size of each worker's local null-space basis in the null-space scheme.
    std::size_t u_dim() const { return Kc - complement_size(); }
};

// 1-based Mod with Mod(x, y) = y when y | x; extended to negative x so the
// cyclic assignment formula can wrap below 1.
long mod1(long x, long y);

// The cyclic dataset-to-worker map. All indices 1-based at this interface.
class CyclicAssignment {
public:
    static CyclicAssignment build(const SystemParams& params);

    const SystemParams& params() const { return params_; }
    std::size_t M() const { return params_.M(); }

    // Dataset indices assigned to worker n (sorted).
    const std::vector<std::size_t>& Z(std::size_t n) const { return z_.at(n - 1); }

    // [1..K] \ Z(n), size (K/N)(Nr-1).
    std::vector<std::size_t> complement(std::size_t n) const;

    // The N - Nr + 1 workers holding dataset k (sorted).
    std::vector<std::size_t> holders_of(std::size_t k) const;

    bool holds(std::size_t n, std::size_t k) const;

    std::string to_json() const;

private:
    explicit CyclicAssignment(const SystemParams& params) : params_(params) {}

    SystemParams params_;
    std::vector<std::vector<std::size_t>> z_;
};

}  // namespace dlsc
