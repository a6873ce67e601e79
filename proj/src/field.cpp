#include "dlsc/field.hpp"

#include <stdexcept>
#include <string>

namespace dlsc {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These witnesses make Miller-Rabin deterministic for n < 3.3 * 10^24.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field::Field(std::uint64_t q) : q_(q) {
    if (q < 2 || q >= (1ULL << 63))
        throw std::invalid_argument("field modulus out of supported range: " +
                                    std::to_string(q));
    if (!is_prime_u64(q))
        throw std::invalid_argument("field modulus is not prime: " +
                                    std::to_string(q));
}

std::uint64_t Field::inv(std::uint64_t a) const {
    if (a == 0) throw DivisionByZeroError();
    // extended Euclid on (a, q)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(q_);
    std::int64_t new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        std::int64_t tmp = t - quot * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - quot * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(q_);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const {
    return powmod(a, e, q_);
}

}  // namespace dlsc
