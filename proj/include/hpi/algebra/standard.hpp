#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hpi/algebra/struct_algebra.hpp"

namespace hpi::standard {

namespace detail {

/// Algebra spanned by the matrix units e_{ij} for (i, j) in cells, in the given order.
template <typename K>
StructAlgebra<K> matrix_units(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& cells,
                              FieldSpec field) {
    const std::size_t d = cells.size();
    auto index = [&](std::size_t i, std::size_t j) -> std::ptrdiff_t {
        for (std::size_t k = 0; k < d; ++k)
            if (cells[k] == std::make_pair(i, j)) return static_cast<std::ptrdiff_t>(k);
        return -1;
    };
    auto a = StructAlgebra<K>::from_products(field, d, [&](std::size_t x, std::size_t y) {
        auto p = zero_vec<K>(d);
        if (cells[x].second == cells[y].first) {
            auto k = index(cells[x].first, cells[y].second);
            require(k >= 0, ErrorCode::precondition, "matrix units not closed under multiplication");
            p[static_cast<std::size_t>(k)] = K(1);
        }
        return p;
    });
    auto unit = zero_vec<K>(d);
    bool unital = true;
    for (std::size_t i = 0; i < n; ++i) {
        auto k = index(i, i);
        if (k < 0) unital = false;
        else unit[static_cast<std::size_t>(k)] = K(1);
    }
    return unital ? a.with_unit(unit) : a;
}

} // namespace detail

/// M_n with basis e_{11}, e_{12}, ..., e_{nn} (row-major).
template <typename K>
StructAlgebra<K> matrix_algebra(std::size_t n, FieldSpec field = {}) {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cells.emplace_back(i, j);
    return detail::matrix_units<K>(n, cells, field);
}

/// UT_n with basis e_{ij}, i <= j, row-major (UT_2: e11, e12, e22).
template <typename K>
StructAlgebra<K> upper_triangular(std::size_t n, FieldSpec field = {}) {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) cells.emplace_back(i, j);
    return detail::matrix_units<K>(n, cells, field);
}

/// Strictly upper triangular n x n matrices, e_{ij} with i < j.
template <typename K>
StructAlgebra<K> strictly_upper(std::size_t n, FieldSpec field = {}) {
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) cells.emplace_back(i, j);
    return detail::matrix_units<K>(n, cells, field);
}

/// F[x]/(x^k) with basis 1, x, ..., x^{k-1}.
template <typename K>
StructAlgebra<K> truncated_polynomial(std::size_t k, FieldSpec field = {}) {
    return StructAlgebra<K>::from_products(
        field, k,
        [&](std::size_t i, std::size_t j) {
            auto p = zero_vec<K>(k);
            if (i + j < k) p[i + j] = K(1);
            return p;
        },
        unit_vec<K>(k, 0));
}

/// F^k = F e_1 + ... + F e_k with orthogonal idempotents.
template <typename K>
StructAlgebra<K> diagonal(std::size_t k, FieldSpec field = {}) {
    return StructAlgebra<K>::from_products(
        field, k,
        [&](std::size_t i, std::size_t j) { return i == j ? unit_vec<K>(k, i) : zero_vec<K>(k); },
        Vec<K>(k, K(1)));
}

/// n-dimensional algebra with zero multiplication.
template <typename K>
StructAlgebra<K> zero_product(std::size_t n, FieldSpec field = {}) {
    return StructAlgebra<K>::from_products(field, n, [&](std::size_t, std::size_t) { return zero_vec<K>(n); });
}

} // namespace hpi::standard
