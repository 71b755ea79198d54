#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hpi/linalg/subspace.hpp"

namespace hpi {

/// Bilinear map K^l x K^r -> K^o given by its structure tensor:
/// B(e_i, e_j) = sum_k c[(i * r + j) * o + k] e_k.
template <typename K>
class BilinearMap {
public:
    BilinearMap() = default;
    BilinearMap(std::size_t left, std::size_t right, std::size_t out)
        : l_(left), r_(right), o_(out), c_(left * right * out, K(0)) {}

    std::size_t left_dim() const { return l_; }
    std::size_t right_dim() const { return r_; }
    std::size_t out_dim() const { return o_; }

    K& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * r_ + j) * o_ + k]; }
    const K& at(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * r_ + j) * o_ + k]; }

    /// B(e_i, e_j) as a vector.
    Vec<K> basis_product(std::size_t i, std::size_t j) const {
        auto first = c_.begin() + static_cast<std::ptrdiff_t>((i * r_ + j) * o_);
        return Vec<K>(first, first + static_cast<std::ptrdiff_t>(o_));
    }

    Vec<K> apply(const Vec<K>& a, const Vec<K>& b) const {
        require(a.size() == l_ && b.size() == r_, ErrorCode::dimension_mismatch, "bilinear map argument size");
        auto out = zero_vec<K>(o_);
        for (std::size_t i = 0; i < l_; ++i) {
            if (is_zero(a[i])) continue;
            for (std::size_t j = 0; j < r_; ++j) {
                if (is_zero(b[j])) continue;
                K ab = a[i] * b[j];
                const K* row = &c_[(i * r_ + j) * o_];
                for (std::size_t k = 0; k < o_; ++k)
                    if (!is_zero(row[k])) out[k] += ab * row[k];
            }
        }
        return out;
    }

    friend bool operator==(const BilinearMap& a, const BilinearMap& b) {
        return a.l_ == b.l_ && a.r_ == b.r_ && a.o_ == b.o_ && a.c_ == b.c_;
    }

private:
    std::size_t l_ = 0, r_ = 0, o_ = 0;
    Vec<K> c_;
};

/// span{ B(v, w) : v in basis(V), w in basis(W) }.
template <typename K>
Subspace<K> bilinear_image(const Subspace<K>& v, const Subspace<K>& w, const BilinearMap<K>& b) {
    require(v.ambient() == b.left_dim() && w.ambient() == b.right_dim(), ErrorCode::dimension_mismatch,
            "subspaces do not live in the bilinear map's argument spaces");
    std::vector<Vec<K>> out;
    for (const auto& x : v.basis())
        for (const auto& y : w.basis()) {
            auto p = b.apply(x, y);
            if (!is_zero_vec(p)) out.push_back(std::move(p));
        }
    return span(out, b.out_dim());
}

/// Largest U inside V with T(U) contained in U for every listed operator.
/// Fixpoint U <- { x in U : T x in U for all T }; dimension strictly drops until stable.
template <typename K>
Subspace<K> stable_closure_shrink(Subspace<K> v, const std::vector<Matrix<K>>& operators) {
    for (const auto& t : operators)
        require(t.rows() == v.ambient() && t.cols() == v.ambient(), ErrorCode::dimension_mismatch,
                "operator does not act on the ambient space");
    while (!v.is_zero_space()) {
        auto ann = v.annihilator();
        auto basis = v.basis();
        // Unknown coefficients c of x = sum c_i u_i; constraints alpha(T x) = 0.
        std::vector<Vec<K>> rows;
        for (const auto& t : operators) {
            std::vector<Vec<K>> images;
            for (const auto& u : basis) images.push_back(t.apply(u));
            for (const auto& alpha : ann) {
                Vec<K> row(basis.size(), K(0));
                bool nonzero = false;
                for (std::size_t i = 0; i < basis.size(); ++i) {
                    for (std::size_t k = 0; k < alpha.size(); ++k)
                        if (!is_zero(alpha[k]) && !is_zero(images[i][k])) row[i] += alpha[k] * images[i][k];
                    nonzero = nonzero || !is_zero(row[i]);
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
        if (rows.empty()) return v;
        std::vector<Vec<K>> next;
        for (const auto& c : kernel(Matrix<K>::from_rows(rows, basis.size()))) next.push_back(v.from_coordinates(c));
        auto shrunk = span(next, v.ambient());
        if (shrunk.dim() == v.dim()) return v;
        v = std::move(shrunk);
    }
    return v;
}

/// Projection P onto the invariant subspace S with P^2 = P and P T = T P for every operator T.
/// ker P is then an invariant complement of S. Throws not_completely_reducible when none exists.
template <typename K>
Matrix<K> equivariant_projection(std::size_t n, const std::vector<Matrix<K>>& operators, const Subspace<K>& s) {
    require(s.ambient() == n, ErrorCode::dimension_mismatch, "submodule ambient dimension");
    for (const auto& t : operators)
        require(t.rows() == n && t.cols() == n, ErrorCode::dimension_mismatch, "module operator size");
    if (s.is_full()) return Matrix<K>::identity(n);
    if (s.is_zero_space()) return Matrix<K>(n, n);
    const std::size_t unknowns = n * n;  // p_{ij} at index i * n + j
    std::vector<Vec<K>> rows;
    Vec<K> rhs;
    // P s = s on a basis of S
    for (const auto& b : s.basis())
        for (std::size_t i = 0; i < n; ++i) {
            Vec<K> row(unknowns, K(0));
            for (std::size_t j = 0; j < n; ++j) row[i * n + j] = b[j];
            rows.push_back(std::move(row));
            rhs.push_back(b[i]);
        }
    // image(P) inside S: alpha^T P = 0 for annihilators alpha
    for (const auto& alpha : s.annihilator())
        for (std::size_t j = 0; j < n; ++j) {
            Vec<K> row(unknowns, K(0));
            for (std::size_t i = 0; i < n; ++i) row[i * n + j] = alpha[i];
            rows.push_back(std::move(row));
            rhs.push_back(K(0));
        }
    // P T - T P = 0
    for (const auto& t : operators)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vec<K> row(unknowns, K(0));
                for (std::size_t k = 0; k < n; ++k) {
                    row[i * n + k] += t(k, j);
                    row[k * n + j] -= t(i, k);
                }
                if (is_zero_vec(row)) continue;
                rows.push_back(std::move(row));
                rhs.push_back(K(0));
            }
    auto sol = solve(Matrix<K>::from_rows(rows, unknowns), rhs);
    if (!sol) fail(ErrorCode::not_completely_reducible, "no equivariant projection onto the submodule exists");
    return Matrix<K>::from_flat(n, n, std::move(*sol));
}

} // namespace hpi
