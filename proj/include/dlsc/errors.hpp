#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dlsc {

// Mixing elements/matrices from different prime fields is a programming
// error, not a data condition.
class FieldMismatchError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class DivisionByZeroError : public std::domain_error {
public:
    DivisionByZeroError() : std::domain_error("inverse of zero field element") {}
};

// A matrix that was expected to be invertible is not. This is a measurable
// event (a full-rank lemma can fail at small q), so the error carries enough
// context to replay the enclosing trial.
class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(std::size_t rows, std::size_t cols, std::uint64_t seed = 0)
        : std::runtime_error("singular matrix (" + std::to_string(rows) + "x" +
                             std::to_string(cols) + ", trial seed " +
                             std::to_string(seed) + ")"),
          rows_(rows), cols_(cols), seed_(seed) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t seed() const { return seed_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::uint64_t seed_;
};

// The requested (K, N, Nr, Kc) combination is outside the regime a scheme
// supports.
class RegimeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Random demand matrix kept failing its full-rank validity check within the
// retry budget (plausible only for tiny q).
class DegenerateDemandError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Random vector draws kept coming back zero or dependent within the budget.
class DegenerateDrawError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Refusal to enumerate an unreasonably large straggler-scenario grid
// without an explicit override.
class ScenarioGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace dlsc
