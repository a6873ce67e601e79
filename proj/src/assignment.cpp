#include "dlsc/assignment.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dlsc {

void SystemParams::validate() const {
    if (N == 0 || K == 0) throw std::invalid_argument("K and N must be positive");
    if (K % N != 0)
        throw std::invalid_argument("N must divide K (pad with empty datasets otherwise)");
    if (Nr < 1 || Nr > N) throw std::invalid_argument("Nr must be in [1, N]");
    if (Kc < 1 || Kc > K) throw std::invalid_argument("Kc must be in [1, K]");
    if (L < 1) throw std::invalid_argument("L must be >= 1");
    Field check(q);  // validates primality and range
    (void)check;
}

long mod1(long x, long y) {
    long r = x % y;
    if (r < 0) r += y;
    return r == 0 ? y : r;
}

CyclicAssignment CyclicAssignment::build(const SystemParams& params) {
    params.validate();
    CyclicAssignment a(params);
    const long N = static_cast<long>(params.N);
    a.z_.resize(params.N);
    for (std::size_t n = 1; n <= params.N; ++n) {
        std::vector<std::size_t>& zn = a.z_[n - 1];
        for (std::size_t p = 0; p < params.per_node(); ++p) {
            for (std::size_t t = 0; t <= params.N - params.Nr; ++t) {
                long idx = mod1(static_cast<long>(n + t), N) +
                           static_cast<long>(p) * N;
                zn.push_back(static_cast<std::size_t>(idx));
            }
        }
        std::sort(zn.begin(), zn.end());
        if (zn.size() != params.M())
            throw std::logic_error("cyclic assignment produced wrong |Z_n|");
    }
    return a;
}

std::vector<std::size_t> CyclicAssignment::complement(std::size_t n) const {
    const std::vector<std::size_t>& zn = Z(n);
    std::vector<std::size_t> out;
    out.reserve(params_.K - zn.size());
    std::size_t j = 0;
    for (std::size_t k = 1; k <= params_.K; ++k) {
        if (j < zn.size() && zn[j] == k) {
            ++j;
        } else {
            out.push_back(k);
        }
    }
    return out;
}

std::vector<std::size_t> CyclicAssignment::holders_of(std::size_t k) const {
    const long N = static_cast<long>(params_.N);
    std::vector<std::size_t> workers;
    for (std::size_t t = 0; t <= params_.N - params_.Nr; ++t) {
        workers.push_back(static_cast<std::size_t>(
            mod1(static_cast<long>(k) - static_cast<long>(t), N)));
    }
    std::sort(workers.begin(), workers.end());
    return workers;
}

bool CyclicAssignment::holds(std::size_t n, std::size_t k) const {
    const std::vector<std::size_t>& zn = Z(n);
    return std::binary_search(zn.begin(), zn.end(), k);
}

std::string CyclicAssignment::to_json() const {
    std::ostringstream os;
    os << "{\"K\":" << params_.K << ",\"N\":" << params_.N
       << ",\"Nr\":" << params_.Nr << ",\"Z\":[";
    for (std::size_t n = 1; n <= params_.N; ++n) {
        if (n > 1) os << ",";
        os << "[";
        const std::vector<std::size_t>& zn = Z(n);
        for (std::size_t i = 0; i < zn.size(); ++i) {
            if (i > 0) os << ",";
            os << zn[i];
        }
        os << "]";
    }
    os << "]}";
    return os.str();
}

}  // namespace dlsc
