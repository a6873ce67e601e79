#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dlsc {

struct GoldenCheck {
    std::string name;
    bool pass = false;
    std::string detail;  // filled on failure
};

// Replays the worked (K=4, N=4, Nr=3, Kc=4) instance with its fixed demand
// matrix, hand-picked null-space bases and combination coefficients:
// transmitted coefficient vectors, full rank of every decoding matrix for
// A = {1,2,3}, exact recovery at all four workers, and the cost figures.
std::vector<GoldenCheck> run_example1_checks(std::uint64_t q);

bool all_pass(const std::vector<GoldenCheck>& checks);

}  // namespace dlsc
