#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "dlsc/field.hpp"

namespace dlsc {

using Vec = std::vector<std::uint64_t>;

// Dense row-major matrix over F_q. Desk-scale dimensions (<= ~64) make
// dense O(n^3) elimination the right tool; there is no floating point
// anywhere, every result is exact.
class Matrix {
public:
    Matrix(const Field& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

    static Matrix identity(const Field& f, std::size_t n);
    static Matrix random(const Field& f, std::size_t rows, std::size_t cols, Rng& rng);
    static Matrix from_signed(const Field& f, std::size_t rows, std::size_t cols,
                              std::initializer_list<std::int64_t> entries);
    static Matrix row_from_signed(const Field& f, std::initializer_list<std::int64_t> entries);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint64_t& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    std::uint64_t at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;
    void set_row(std::size_t r, const Vec& v);

    // Column submatrix, columns picked in the given order (0-based).
    Matrix select_cols(const std::vector<std::size_t>& cols) const;

    bool operator==(const Matrix& other) const {
        return field_ == other.field_ && rows_ == other.rows_ &&
               cols_ == other.cols_ && e_ == other.e_;
    }
    bool operator!=(const Matrix& other) const { return !(*this == other); }

    bool is_zero() const;

private:
    Field field_;
    std::size_t rows_, cols_;
    Vec e_;
};

// Linearly independent column vectors spanning a subspace of F_q^ambient.
struct SubspaceBasis {
    std::size_t ambient_dim = 0;
    std::vector<Vec> vectors;

    std::size_t dim() const { return vectors.size(); }
};

struct RrefResult {
    Matrix rref;
    std::vector<std::size_t> pivots;  // pivot column indices, strictly increasing
};

// Gauss-Jordan with exact field inverses; first nonzero pivot in column
// order (magnitude pivoting is meaningless in exact arithmetic).
RrefResult rref(const Matrix& a);

std::size_t rank(const Matrix& a);

Matrix transpose(const Matrix& a);

Matrix mat_mul(const Matrix& a, const Matrix& b);

// Throws SingularMatrixError with the given replay seed when a is not
// square full rank.
Matrix inverse(const Matrix& a, std::uint64_t trial_seed = 0);

// Solves A X = B exactly for square full-rank A.
Matrix solve(const Matrix& a, const Matrix& b, std::uint64_t trial_seed = 0);

// Basis of the right null space {x : A x = 0} in the standard free-variable
// parameterization from RREF; deterministic given A.
SubspaceBasis null_space_basis(const Matrix& a);

// Stacks the given vectors as rows (all of equal length).
Matrix stack_rows(const Field& f, const std::vector<Vec>& vectors);

std::size_t span_dim(const Field& f, const std::vector<Vec>& vectors);

bool is_in_span(const Field& f, const Vec& v, const SubspaceBasis& basis);

// Exact dimension of the intersection of the column spaces, via iterated
// pairwise kernel-stacking: ker [A | -B] projected through A.
std::size_t intersect_column_spaces(const std::vector<Matrix>& mats);

// y += c * x over the field, elementwise.
void axpy(const Field& f, std::uint64_t c, const Vec& x, Vec& y);

Vec mat_vec(const Matrix& a, const Vec& x);

// row vector times matrix: (1 x rows(a)) * a
Vec vec_mat(const Vec& v, const Matrix& a);

}  // namespace dlsc
