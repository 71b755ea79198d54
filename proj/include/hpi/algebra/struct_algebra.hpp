#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hpi/field/scalar.hpp"
#include "hpi/linalg/ops.hpp"

namespace hpi {

/// Finite-dimensional associative algebra given by structure constants
/// e_i e_j = sum_k c[i][j][k] e_k, with an optional unit vector.
template <typename K>
class StructAlgebra {
public:
    StructAlgebra() = default;
    StructAlgebra(FieldSpec field, BilinearMap<K> table, std::optional<Vec<K>> unit = std::nullopt)
        : field_(field), table_(std::move(table)), unit_(std::move(unit)) {
        require(table_.left_dim() == table_.right_dim() && table_.right_dim() == table_.out_dim(),
                ErrorCode::dimension_mismatch, "structure tensor must be n x n x n");
        if (unit_) {
            require(unit_->size() == dim(), ErrorCode::dimension_mismatch, "unit vector length");
            for (std::size_t i = 0; i < dim(); ++i) {
                auto e = unit_vec<K>(dim(), i);
                require(mul(*unit_, e) == e && mul(e, *unit_) == e, ErrorCode::validation,
                        "declared unit does not act as identity on basis vector " + std::to_string(i));
            }
        }
    }

    /// Builds the table from a callback returning e_i e_j as a vector.
    template <typename F>
    static StructAlgebra from_products(FieldSpec field, std::size_t n, F&& product,
                                       std::optional<Vec<K>> unit = std::nullopt) {
        BilinearMap<K> t(n, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vec<K> p = product(i, j);
                require(p.size() == n, ErrorCode::dimension_mismatch, "basis product length");
                for (std::size_t k = 0; k < n; ++k) t.at(i, j, k) = p[k];
            }
        return StructAlgebra(field, std::move(t), std::move(unit));
    }

    const FieldSpec& field() const { return field_; }
    std::size_t dim() const { return table_.left_dim(); }
    const BilinearMap<K>& table() const { return table_; }
    const std::optional<Vec<K>>& unit() const { return unit_; }
    bool has_unit() const { return unit_.has_value(); }

    Vec<K> mul(const Vec<K>& a, const Vec<K>& b) const { return table_.apply(a, b); }
    Vec<K> basis_product(std::size_t i, std::size_t j) const { return table_.basis_product(i, j); }

    /// Matrix of x -> a x.
    Matrix<K> left_mult(const Vec<K>& a) const {
        Matrix<K> m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) {
            auto col = mul(a, unit_vec<K>(dim(), j));
            for (std::size_t k = 0; k < dim(); ++k) m(k, j) = col[k];
        }
        return m;
    }
    /// Matrix of x -> x a.
    Matrix<K> right_mult(const Vec<K>& a) const {
        Matrix<K> m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) {
            auto col = mul(unit_vec<K>(dim(), j), a);
            for (std::size_t k = 0; k < dim(); ++k) m(k, j) = col[k];
        }
        return m;
    }
    std::vector<Matrix<K>> left_mults() const {
        std::vector<Matrix<K>> out;
        for (std::size_t i = 0; i < dim(); ++i) out.push_back(left_mult(unit_vec<K>(dim(), i)));
        return out;
    }
    std::vector<Matrix<K>> right_mults() const {
        std::vector<Matrix<K>> out;
        for (std::size_t i = 0; i < dim(); ++i) out.push_back(right_mult(unit_vec<K>(dim(), i)));
        return out;
    }

    StructAlgebra with_unit(std::optional<Vec<K>> unit) const { return StructAlgebra(field_, table_, std::move(unit)); }

    friend bool operator==(const StructAlgebra& a, const StructAlgebra& b) {
        return a.field_ == b.field_ && a.table_ == b.table_ && a.unit_ == b.unit_;
    }

private:
    FieldSpec field_;
    BilinearMap<K> table_;
    std::optional<Vec<K>> unit_;
};

/// Linear map between coordinate spaces, as a (target x source) matrix.
template <typename K>
struct LinearMap {
    Matrix<K> matrix;

    std::size_t source_dim() const { return matrix.cols(); }
    std::size_t target_dim() const { return matrix.rows(); }
    Vec<K> operator()(const Vec<K>& v) const { return matrix.apply(v); }
};

/// First basis triple (i, j, k) with (e_i e_j) e_k != e_i (e_j e_k), if any.
template <typename K>
std::optional<std::tuple<std::size_t, std::size_t, std::size_t>> associativity_violation(const StructAlgebra<K>& a) {
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto ij = a.basis_product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                auto lhs = a.mul(ij, unit_vec<K>(n, k));
                auto rhs = a.mul(unit_vec<K>(n, i), a.basis_product(j, k));
                if (lhs != rhs) return std::make_tuple(i, j, k);
            }
        }
    return std::nullopt;
}

template <typename K>
bool check_associativity(const StructAlgebra<K>& a) {
    return !associativity_violation(a).has_value();
}

/// A+ = A + F 1 with the formal unit as the last basis vector; A sits inside as the first n coordinates.
template <typename K>
StructAlgebra<K> adjoin_unit(const StructAlgebra<K>& a) {
    const std::size_t n = a.dim();
    return StructAlgebra<K>::from_products(
        a.field(), n + 1,
        [&](std::size_t i, std::size_t j) {
            if (i == n) return unit_vec<K>(n + 1, j);
            if (j == n) return unit_vec<K>(n + 1, i);
            auto p = a.basis_product(i, j);
            p.push_back(K(0));
            return p;
        },
        unit_vec<K>(n + 1, n));
}

/// The two-sided identity of A if one exists.
template <typename K>
std::optional<Vec<K>> find_unit(const StructAlgebra<K>& a) {
    const std::size_t n = a.dim();
    if (n == 0) return Vec<K>{};
    Matrix<K> m(2 * n * n, n);
    Vec<K> rhs(2 * n * n, K(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t r = i * n + k;
            for (std::size_t u = 0; u < n; ++u) {
                m(r, u) = a.table().at(u, i, k);
                m(n * n + r, u) = a.table().at(i, u, k);
            }
            rhs[r] = rhs[n * n + r] = i == k ? K(1) : K(0);
        }
    return solve(m, rhs);
}

/// A / I for a two-sided ideal I, with the coordinate bookkeeping needed to move between them.
/// The quotient basis is the image of the standard basis vectors at I's non-pivot coordinates.
template <typename K>
struct Quotient {
    StructAlgebra<K> algebra;
    Subspace<K> ideal;
    std::vector<std::size_t> lift_indices;

    /// pi: A -> A/I in quotient coordinates.
    Vec<K> project(const Vec<K>& x) const {
        auto r = ideal.residue(x);
        Vec<K> out(lift_indices.size());
        for (std::size_t i = 0; i < lift_indices.size(); ++i) out[i] = r[lift_indices[i]];
        return out;
    }
    LinearMap<K> projection() const {
        const std::size_t n = ideal.ambient();
        Matrix<K> m(lift_indices.size(), n);
        for (std::size_t j = 0; j < n; ++j) {
            auto c = project(unit_vec<K>(n, j));
            for (std::size_t i = 0; i < c.size(); ++i) m(i, j) = c[i];
        }
        return {m};
    }
    /// The coordinate section quotient -> A (not multiplicative in general).
    Vec<K> lift(const Vec<K>& q) const {
        auto x = zero_vec<K>(ideal.ambient());
        for (std::size_t i = 0; i < lift_indices.size(); ++i) x[lift_indices[i]] = q[i];
        return x;
    }
    /// Induced operator on the quotient; op must preserve the ideal.
    Matrix<K> induced(const Matrix<K>& op) const {
        for (const auto& b : ideal.basis())
            require(ideal.contains(op.apply(b)), ErrorCode::precondition, "operator does not preserve the ideal");
        const std::size_t m = lift_indices.size();
        Matrix<K> r(m, m);
        for (std::size_t j = 0; j < m; ++j) {
            auto c = project(op.apply(unit_vec<K>(ideal.ambient(), lift_indices[j])));
            for (std::size_t i = 0; i < m; ++i) r(i, j) = c[i];
        }
        return r;
    }
};

template <typename K>
Quotient<K> quotient_algebra(const StructAlgebra<K>& a, const Subspace<K>& ideal) {
    require(ideal.ambient() == a.dim(), ErrorCode::dimension_mismatch, "ideal ambient dimension");
    Quotient<K> q{StructAlgebra<K>{}, ideal, ideal.complement_indices()};
    const auto& idx = q.lift_indices;
    std::optional<Vec<K>> unit;
    if (a.unit()) unit = q.project(*a.unit());
    q.algebra = StructAlgebra<K>::from_products(
        a.field(), idx.size(), [&](std::size_t i, std::size_t j) { return q.project(a.basis_product(idx[i], idx[j])); },
        unit);
    return q;
}

/// A subalgebra V (closed under multiplication) as a standalone algebra in V's basis coordinates.
template <typename K>
StructAlgebra<K> subalgebra(const StructAlgebra<K>& a, const Subspace<K>& v) {
    auto basis = v.basis();
    auto sub = StructAlgebra<K>::from_products(a.field(), basis.size(), [&](std::size_t i, std::size_t j) {
        auto p = a.mul(basis[i], basis[j]);
        require(v.contains(p), ErrorCode::precondition, "subspace is not closed under multiplication");
        return v.coordinates(p);
    });
    return sub.with_unit(find_unit(sub));
}

/// True iff I is closed under left and right multiplication by A.
template <typename K>
bool is_two_sided_ideal(const StructAlgebra<K>& a, const Subspace<K>& ideal) {
    for (const auto& x : ideal.basis())
        for (std::size_t i = 0; i < a.dim(); ++i) {
            auto e = unit_vec<K>(a.dim(), i);
            if (!ideal.contains(a.mul(e, x)) || !ideal.contains(a.mul(x, e))) return false;
        }
    return true;
}

} // namespace hpi
