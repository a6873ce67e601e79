#include "dlsc/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace dlsc {

Matrix Matrix::identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::random(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = f.rand_uniform(rng);
    return m;
}

Matrix Matrix::from_signed(const Field& f, std::size_t rows, std::size_t cols,
                           std::initializer_list<std::int64_t> entries) {
    if (entries.size() != rows * cols)
        throw std::invalid_argument("from_signed: entry count mismatch");
    Matrix m(f, rows, cols);
    std::size_t i = 0;
    for (std::int64_t z : entries) {
        m.e_[i++] = f.from_signed(z);
    }
    return m;
}

Matrix Matrix::row_from_signed(const Field& f, std::initializer_list<std::int64_t> entries) {
    return from_signed(f, 1, entries.size(), entries);
}

Vec Matrix::row(std::size_t r) const {
    return Vec(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
}

Vec Matrix::col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

void Matrix::set_row(std::size_t r, const Vec& v) {
    if (v.size() != cols_) throw std::invalid_argument("set_row: length mismatch");
    std::copy(v.begin(), v.end(), e_.begin() + r * cols_);
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& cols) const {
    Matrix m(field_, rows_, cols.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t j = 0; j < cols.size(); ++j) m.at(r, j) = at(r, cols[j]);
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](std::uint64_t x) { return x == 0; });
}

RrefResult rref(const Matrix& a) {
    const Field& f = a.field();
    Matrix m = a;
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;  // next pivot row
    for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        std::size_t sel = pr;
        while (sel < m.rows() && m.at(sel, c) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != pr)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(sel, j), m.at(pr, j));
        std::uint64_t pinv = f.inv(m.at(pr, c));
        for (std::size_t j = c; j < m.cols(); ++j)
            m.at(pr, j) = f.mul(m.at(pr, j), pinv);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pr || m.at(r, c) == 0) continue;
            std::uint64_t factor = m.at(r, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(r, j) = f.sub(m.at(r, j), f.mul(factor, m.at(pr, j)));
        }
        pivots.push_back(c);
        ++pr;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

Matrix transpose(const Matrix& a) {
    Matrix t(a.field(), a.cols(), a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) t.at(c, r) = a.at(r, c);
    return t;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field());
    if (a.cols() != b.rows())
        throw std::invalid_argument("mat_mul: inner dimension mismatch");
    const Field& f = a.field();
    Matrix c(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            std::uint64_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) = f.add(c.at(i, j), f.mul(aik, b.at(k, j)));
        }
    return c;
}

Matrix solve(const Matrix& a, const Matrix& b, std::uint64_t trial_seed) {
    require_same_field(a.field(), b.field());
    if (a.rows() != a.cols() || a.rows() != b.rows())
        throw std::invalid_argument("solve: dimension mismatch");
    const Field& f = a.field();
    const std::size_t n = a.rows();
    // eliminate on the augmented matrix [A | B]
    Matrix m(f, n, n + b.cols());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = a.at(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c) m.at(r, n + c) = b.at(r, c);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && m.at(sel, c) == 0) ++sel;
        if (sel == n) throw SingularMatrixError(n, n, trial_seed);
        if (sel != c)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(sel, j), m.at(c, j));
        std::uint64_t pinv = f.inv(m.at(c, c));
        for (std::size_t j = c; j < m.cols(); ++j)
            m.at(c, j) = f.mul(m.at(c, j), pinv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m.at(r, c) == 0) continue;
            std::uint64_t factor = m.at(r, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(r, j) = f.sub(m.at(r, j), f.mul(factor, m.at(c, j)));
        }
    }
    Matrix x(f, n, b.cols());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) x.at(r, c) = m.at(r, n + c);
    return x;
}

Matrix inverse(const Matrix& a, std::uint64_t trial_seed) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("inverse: matrix not square");
    return solve(a, Matrix::identity(a.field(), a.rows()), trial_seed);
}

SubspaceBasis null_space_basis(const Matrix& a) {
    const Field& f = a.field();
    RrefResult r = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;

    SubspaceBasis basis;
    basis.ambient_dim = a.cols();
    for (std::size_t free_c = 0; free_c < a.cols(); ++free_c) {
        if (is_pivot[free_c]) continue;
        Vec x(a.cols(), 0);
        x[free_c] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            x[r.pivots[i]] = f.neg(r.rref.at(i, free_c));
        basis.vectors.push_back(std::move(x));
    }
    return basis;
}

Matrix stack_rows(const Field& f, const std::vector<Vec>& vectors) {
    if (vectors.empty()) return Matrix(f, 0, 0);
    const std::size_t n = vectors.front().size();
    Matrix m(f, vectors.size(), n);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (vectors[r].size() != n)
            throw std::invalid_argument("stack_rows: ragged vector lengths");
        m.set_row(r, vectors[r]);
    }
    return m;
}

std::size_t span_dim(const Field& f, const std::vector<Vec>& vectors) {
    if (vectors.empty()) return 0;
    return rank(stack_rows(f, vectors));
}

bool is_in_span(const Field& f, const Vec& v, const SubspaceBasis& basis) {
    if (v.size() != basis.ambient_dim && basis.dim() > 0)
        throw std::invalid_argument("is_in_span: ambient dimension mismatch");
    std::vector<Vec> all = basis.vectors;
    std::size_t base = span_dim(f, all);
    all.push_back(v);
    return span_dim(f, all) == base;
}

std::size_t intersect_column_spaces(const std::vector<Matrix>& mats) {
    if (mats.empty()) throw std::invalid_argument("intersect_column_spaces: empty input");
    const Field& f = mats.front().field();
    const std::size_t n = mats.front().rows();
    for (const Matrix& m : mats) {
        require_same_field(f, m.field());
        if (m.rows() != n)
            throw std::invalid_argument("intersect_column_spaces: row count mismatch");
    }

    // Running basis of the intersection, held as columns of `cur`.
    Matrix cur = mats.front();
    for (std::size_t mi = 1; mi < mats.size(); ++mi) {
        const Matrix& b = mats[mi];
        // ker [cur | -b]: any kernel vector [x; y] witnesses cur*x = b*y,
        // so cur*x lies in both column spaces.
        Matrix stacked(f, n, cur.cols() + b.cols());
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < cur.cols(); ++c) stacked.at(r, c) = cur.at(r, c);
            for (std::size_t c = 0; c < b.cols(); ++c)
                stacked.at(r, cur.cols() + c) = f.neg(b.at(r, c));
        }
        SubspaceBasis ker = null_space_basis(stacked);
        std::vector<Vec> inter_vecs;
        for (const Vec& z : ker.vectors) {
            Vec x(z.begin(), z.begin() + cur.cols());
            inter_vecs.push_back(mat_vec(cur, x));
        }
        // Reduce the witnesses to an independent generating set.
        if (inter_vecs.empty()) {
            cur = Matrix(f, n, 0);
            continue;
        }
        RrefResult rr = rref(stack_rows(f, inter_vecs));
        Matrix next(f, n, rr.pivots.size());
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            for (std::size_t r = 0; r < n; ++r) next.at(r, i) = rr.rref.at(i, r);
        cur = std::move(next);
    }
    return rank(cur);
}

void axpy(const Field& f, std::uint64_t c, const Vec& x, Vec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("axpy: length mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = f.add(y[i], f.mul(c, x[i]));
}

Vec mat_vec(const Matrix& a, const Vec& x) {
    if (x.size() != a.cols()) throw std::invalid_argument("mat_vec: length mismatch");
    const Field& f = a.field();
    Vec y(a.rows(), 0);
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            y[r] = f.add(y[r], f.mul(a.at(r, c), x[c]));
    return y;
}

Vec vec_mat(const Vec& v, const Matrix& a) {
    if (v.size() != a.rows()) throw std::invalid_argument("vec_mat: length mismatch");
    const Field& f = a.field();
    Vec y(a.cols(), 0);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        if (v[r] == 0) continue;
        for (std::size_t c = 0; c < a.cols(); ++c)
            y[c] = f.add(y[c], f.mul(v[r], a.at(r, c)));
    }
    return y;
}

}  // namespace dlsc
