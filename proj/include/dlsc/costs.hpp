#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dlsc {

// Closed-form communication costs. K/N is integral by the divisibility
// precondition, so plain integers are exact here.
struct CostPoint {
    std::size_t K, N, Nr, Kc;
    std::uint64_t r_dec;       // proposed decentralized scheme
    std::uint64_t r_cec;       // centralized benchmark reused decentrally
    std::uint64_t r_cyc_star;  // converse bound under cyclic assignment
};

// Achieved cost of the proposed scheme. Nr = 1 is the zero-cost
// short-circuit; the two-branch formula covers Nr >= 2.
std::uint64_t r_dec(std::size_t K, std::size_t N, std::size_t Nr, std::size_t Kc);

// Benchmark cost (three branches in Kc).
std::uint64_t r_cec(std::size_t K, std::size_t N, std::size_t Nr, std::size_t Kc);

// Optimal cost under cyclic assignment; equals r_dec.
std::uint64_t r_cyc_star(std::size_t K, std::size_t N, std::size_t Nr, std::size_t Kc);

CostPoint cost_point(std::size_t K, std::size_t N, std::size_t Nr, std::size_t Kc);

enum class SweepAxis { Kc, Nr };

// One CostPoint per grid value over [lo, hi] on the chosen axis.
std::vector<CostPoint> cost_table(std::size_t K, std::size_t N, std::size_t Nr,
                                  std::size_t Kc, SweepAxis axis, std::size_t lo,
                                  std::size_t hi);

// CSV with header "K,N,Nr,Kc,R_dec,R_cec,R_cyc_star".
std::string cost_table_csv(const std::vector<CostPoint>& table);

}  // namespace dlsc
