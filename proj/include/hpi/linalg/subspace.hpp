#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hpi/linalg/matrix.hpp"

namespace hpi {

/// Subspace of K^n held as its canonical reduced row-echelon basis.
/// Two subspaces are equal iff their bases are identical.
template <typename K>
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : n_(ambient), basis_(0, ambient) {}

    static Subspace span(const std::vector<Vec<K>>& vectors, std::size_t ambient) {
        for (const auto& v : vectors)
            require(v.size() == ambient, ErrorCode::dimension_mismatch,
                    "vector of length " + std::to_string(v.size()) + " in ambient dimension " + std::to_string(ambient));
        Subspace s(ambient);
        if (vectors.empty()) return s;
        auto [red, piv] = rref(Matrix<K>::from_rows(vectors, ambient));
        s.basis_ = std::move(red);
        s.pivots_ = std::move(piv);
        return s;
    }
    static Subspace full(std::size_t ambient) {
        std::vector<Vec<K>> e;
        for (std::size_t i = 0; i < ambient; ++i) e.push_back(unit_vec<K>(ambient, i));
        return span(e, ambient);
    }

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return pivots_.size(); }
    bool is_zero_space() const { return pivots_.empty(); }
    bool is_full() const { return dim() == n_; }
    const Matrix<K>& basis_matrix() const { return basis_; }
    std::vector<Vec<K>> basis() const { return basis_.row_vectors(); }
    Vec<K> basis_vector(std::size_t i) const { return basis_.row(i); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Coordinates of v (assumed to lie in the subspace) with respect to basis().
    Vec<K> coordinates(const Vec<K>& v) const {
        Vec<K> c(dim());
        for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
        return c;
    }
    Vec<K> from_coordinates(const Vec<K>& c) const {
        auto v = zero_vec<K>(n_);
        for (std::size_t i = 0; i < dim(); ++i) axpy(v, c[i], basis_.row(i));
        return v;
    }

    /// v minus its reduction against the basis; zero iff v is a member.
    Vec<K> residue(Vec<K> v) const {
        require(v.size() == n_, ErrorCode::dimension_mismatch, "vector length differs from ambient dimension");
        for (std::size_t i = 0; i < dim(); ++i) {
            K f = v[pivots_[i]];
            if (is_zero(f)) continue;
            for (std::size_t j = pivots_[i]; j < n_; ++j)
                if (!is_zero(basis_(i, j))) v[j] -= f * basis_(i, j);
        }
        return v;
    }
    bool contains(const Vec<K>& v) const { return is_zero_vec(residue(v)); }
    bool contains(const Subspace& o) const {
        check_ambient(o);
        for (std::size_t i = 0; i < o.dim(); ++i)
            if (!contains(o.basis_.row(i))) return false;
        return true;
    }

    /// Coordinate indices not used as pivots; their unit vectors span a complement.
    std::vector<std::size_t> complement_indices() const {
        std::vector<bool> is_pivot(n_, false);
        for (auto p : pivots_) is_pivot[p] = true;
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < n_; ++i)
            if (!is_pivot[i]) out.push_back(i);
        return out;
    }

    /// Basis of the linear functionals vanishing on the subspace.
    std::vector<Vec<K>> annihilator() const {
        if (is_zero_space()) {
            std::vector<Vec<K>> e;
            for (std::size_t i = 0; i < n_; ++i) e.push_back(unit_vec<K>(n_, i));
            return e;
        }
        return kernel(basis_);
    }

    friend Subspace operator+(const Subspace& a, const Subspace& b) {
        a.check_ambient(b);
        auto v = a.basis();
        auto w = b.basis();
        v.insert(v.end(), w.begin(), w.end());
        return span(v, a.n_);
    }

    /// Intersection via the kernel of the stacked system [U^T | -W^T].
    friend Subspace intersect(const Subspace& a, const Subspace& b) {
        a.check_ambient(b);
        if (a.is_zero_space() || b.is_zero_space()) return Subspace(a.n_);
        Matrix<K> m(a.n_, a.dim() + b.dim());
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t r = 0; r < a.n_; ++r) m(r, i) = a.basis_(i, r);
        for (std::size_t j = 0; j < b.dim(); ++j)
            for (std::size_t r = 0; r < a.n_; ++r) m(r, a.dim() + j) = -b.basis_(j, r);
        std::vector<Vec<K>> out;
        for (const auto& k : kernel(m)) {
            Vec<K> c(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(a.dim()));
            out.push_back(a.from_coordinates(c));
        }
        return span(out, a.n_);
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.n_ == b.n_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    void check_ambient(const Subspace& o) const {
        require(n_ == o.n_, ErrorCode::dimension_mismatch,
                "ambient dimensions " + std::to_string(n_) + " and " + std::to_string(o.n_));
    }

    std::size_t n_ = 0;
    Matrix<K> basis_;
    std::vector<std::size_t> pivots_;
};

template <typename K>
Subspace<K> span(const std::vector<Vec<K>>& vectors, std::size_t ambient) {
    return Subspace<K>::span(vectors, ambient);
}

/// Image of a subspace under a linear operator.
template <typename K>
Subspace<K> image(const Matrix<K>& op, const Subspace<K>& v) {
    require(op.cols() == v.ambient(), ErrorCode::dimension_mismatch, "operator does not act on the ambient space");
    std::vector<Vec<K>> out;
    for (const auto& b : v.basis()) out.push_back(op.apply(b));
    return span(out, op.rows());
}

/// Matrix of an operator restricted to an invariant subspace, in the subspace's basis coordinates.
template <typename K>
Matrix<K> restrict_operator(const Matrix<K>& op, const Subspace<K>& v) {
    Matrix<K> r(v.dim(), v.dim());
    for (std::size_t j = 0; j < v.dim(); ++j) {
        auto img = op.apply(v.basis_vector(j));
        require(v.contains(img), ErrorCode::precondition, "operator does not preserve the subspace");
        auto c = v.coordinates(img);
        for (std::size_t i = 0; i < v.dim(); ++i) r(i, j) = c[i];
    }
    return r;
}

} // namespace hpi
