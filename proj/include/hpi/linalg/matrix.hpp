#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hpi/error.hpp"
#include "hpi/field/scalar.hpp"

namespace hpi {

template <typename K>
using Vec = std::vector<K>;

template <typename K>
Vec<K> zero_vec(std::size_t n) {
    return Vec<K>(n, K(0));
}

template <typename K>
Vec<K> unit_vec(std::size_t n, std::size_t i) {
    auto v = zero_vec<K>(n);
    v[i] = K(1);
    return v;
}

template <typename K>
bool is_zero_vec(const Vec<K>& v) {
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

template <typename K>
Vec<K> add(const Vec<K>& a, const Vec<K>& b) {
    require(a.size() == b.size(), ErrorCode::dimension_mismatch, "vector sizes differ");
    Vec<K> r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

template <typename K>
Vec<K> sub(const Vec<K>& a, const Vec<K>& b) {
    require(a.size() == b.size(), ErrorCode::dimension_mismatch, "vector sizes differ");
    Vec<K> r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

template <typename K>
Vec<K> scale(const K& s, Vec<K> v) {
    for (auto& x : v) x *= s;
    return v;
}

/// r += s * v
template <typename K>
void axpy(Vec<K>& r, const K& s, const Vec<K>& v) {
    if (is_zero(s)) return;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (!is_zero(v[i])) r[i] += s * v[i];
}

/// Dense row-major matrix; operators act on column vectors.
template <typename K>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, K(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }
    static Matrix from_rows(const std::vector<Vec<K>>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            require(rows[i].size() == cols, ErrorCode::dimension_mismatch, "ragged matrix rows");
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    static Matrix from_columns(const std::vector<Vec<K>>& columns, std::size_t rows) {
        Matrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            require(columns[j].size() == rows, ErrorCode::dimension_mismatch, "ragged matrix columns");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec<K> row(std::size_t i) const { return Vec<K>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
    Vec<K> column(std::size_t j) const {
        Vec<K> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    std::vector<Vec<K>> row_vectors() const {
        std::vector<Vec<K>> r;
        for (std::size_t i = 0; i < rows_; ++i) r.push_back(row(i));
        return r;
    }
    /// Entries in row-major order (the flattening used for spans of operators).
    const Vec<K>& flat() const { return a_; }
    static Matrix from_flat(std::size_t rows, std::size_t cols, Vec<K> flat) {
        require(flat.size() == rows * cols, ErrorCode::dimension_mismatch, "flat matrix size");
        Matrix m;
        m.rows_ = rows;
        m.cols_ = cols;
        m.a_ = std::move(flat);
        return m;
    }

    bool is_zero_matrix() const { return is_zero_vec(a_); }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Vec<K> apply(const Vec<K>& v) const {
        require(v.size() == cols_, ErrorCode::dimension_mismatch, "matrix-vector size mismatch");
        Vec<K> r(rows_, K(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                const K& m = (*this)(i, j);
                if (!is_zero(m) && !is_zero(v[j])) r[i] += m * v[j];
            }
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        require(a.cols_ == b.rows_, ErrorCode::dimension_mismatch, "matrix product size mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& x = a(i, k);
                if (is_zero(x)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!is_zero(b(k, j))) r(i, j) += x * b(k, j);
            }
        return r;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorCode::dimension_mismatch, "matrix sum size mismatch");
        Matrix r = a;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += b.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require(a.rows_ == b.rows_ && a.cols_ == b.cols_, ErrorCode::dimension_mismatch, "matrix sum size mismatch");
        Matrix r = a;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= b.a_[i];
        return r;
    }
    friend Matrix operator*(const K& s, Matrix m) {
        for (auto& x : m.a_) x *= s;
        return m;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t rows_ = 0, cols_ = 0;
    Vec<K> a_;
};

template <typename K>
Matrix<K> matrix_power(const Matrix<K>& m, unsigned e) {
    auto r = Matrix<K>::identity(m.rows());
    for (unsigned i = 0; i < e; ++i) r = r * m;
    return r;
}

/// Reduced row-echelon form with the list of pivot columns.
/// Pivot choice: first nonzero entry scanning columns left to right, rows top to bottom.
template <typename K>
struct RowEchelon {
    Matrix<K> reduced;
    std::vector<std::size_t> pivots;
};

template <typename K>
RowEchelon<K> rref(Matrix<K> m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        K inv = K(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            K f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix<K> out(r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return {std::move(out), std::move(pivots)};
}

namespace detail {

/// Fraction-free (Bareiss) elimination on the integer-scaled rows of a rational matrix.
inline std::size_t bareiss_rank(const Matrix<Rational>& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < cols; ++j) l = lcm(l, m(i, j).denominator());
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j).numerator() * (l / m(i, j).denominator());
    }
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

} // namespace detail

template <typename K>
std::size_t rank(const Matrix<K>& m) {
    if constexpr (std::is_same_v<K, Rational>) return detail::bareiss_rank(m);
    else return rref(m).pivots.size();
}

/// Basis of { x : m x = 0 }, one vector per free column, in increasing free-column order.
template <typename K>
std::vector<Vec<K>> kernel(const Matrix<K>& m) {
    auto [red, piv] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<Vec<K>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        auto v = zero_vec<K>(m.cols());
        v[f] = K(1);
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -red(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Some x with m x = b, or nullopt when the system is inconsistent.
template <typename K>
std::optional<Vec<K>> solve(const Matrix<K>& m, const Vec<K>& b) {
    require(b.size() == m.rows(), ErrorCode::dimension_mismatch, "right-hand side size");
    Matrix<K> aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto [red, piv] = rref(std::move(aug));
    if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
    auto x = zero_vec<K>(m.cols());
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = red(i, m.cols());
    return x;
}

template <typename K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
    require(m.rows() == m.cols(), ErrorCode::dimension_mismatch, "inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix<K> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = K(1);
    }
    auto [red, piv] = rref(std::move(aug));
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    Matrix<K> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = red(i, n + j);
    return inv;
}

} // namespace hpi
