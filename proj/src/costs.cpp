#include "dlsc/costs.hpp"

#include <sstream>
#include <stdexcept>

namespace dlsc {

namespace {

void check(std::size_t K, std::size_t N, std::size_t Nr, std::size_t Kc) {
    if (N == 0 || K % N != 0) throw std::invalid_argument("costs: N must divide K");
    if (Nr < 1 || Nr > N) throw std::invalid_argument("costs: Nr out of range");
    if (Kc < 1 || Kc > K) throw std::invalid_argument("costs: Kc out of range");
}

}  // namespace

std::uint64_t r_dec(std::size_t K, std::size_t N, std::size_t Nr, std::size_t Kc) {
    check(K, N, Nr, Kc);
    if (Nr == 1) return 0;
    const std::size_t kn = K / N;
    if (Kc < kn) return static_cast<std::uint64_t>(Nr) * Kc;
    return static_cast<std::uint64_t>(kn) * Nr;
}

std::uint64_t r_cec(std::size_t K, std::size_t N, std::size_t Nr, std::size_t Kc) {
    check(K, N, Nr, Kc);
    if (Nr == 1) return 0;
    const std::size_t kn = K / N;
    if (Kc < kn) return static_cast<std::uint64_t>(Nr) * Kc;
    if (Kc <= kn * Nr) return static_cast<std::uint64_t>(kn) * Nr;
    return Kc;
}

std::uint64_t r_cyc_star(std::size_t K, std::size_t N, std::size_t Nr, std::size_t Kc) {
    return r_dec(K, N, Nr, Kc);
}

CostPoint cost_point(std::size_t K, std::size_t N, std::size_t Nr, std::size_t Kc) {
    return {K, N, Nr, Kc, r_dec(K, N, Nr, Kc), r_cec(K, N, Nr, Kc),
            r_cyc_star(K, N, Nr, Kc)};
}

std::vector<CostPoint> cost_table(std::size_t K, std::size_t N, std::size_t Nr,
                                  std::size_t Kc, SweepAxis axis, std::size_t lo,
                                  std::size_t hi) {
    if (lo > hi) return {};
    std::vector<CostPoint> out;
    out.reserve(hi - lo + 1);
    for (std::size_t v = lo; v <= hi; ++v) {
        if (axis == SweepAxis::Kc)
            out.push_back(cost_point(K, N, Nr, v));
        else
            out.push_back(cost_point(K, N, v, Kc));
    }
    return out;
}

std::string cost_table_csv(const std::vector<CostPoint>& table) {
    std::ostringstream os;
    os << "K,N,Nr,Kc,R_dec,R_cec,R_cyc_star\n";
    for (const CostPoint& p : table) {
        os << p.K << "," << p.N << "," << p.Nr << "," << p.Kc << "," << p.r_dec
           << "," << p.r_cec << "," << p.r_cyc_star << "\n";
    }
    return os.str();
}

}  // namespace dlsc
