#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "hpi/algebra/struct_algebra.hpp"
#include "hpi/field/poly.hpp"

namespace hpi {

/// Gram matrix G[i][j] = Tr(L_{e_i e_j}) of the left regular representation on A+.
template <typename K>
Matrix<K> trace_form(const StructAlgebra<K>& a) {
    const std::size_t n = a.dim();
    auto plus = adjoin_unit(a);
    Vec<K> tr(n, K(0));  // Tr(L_{e_k}) on A+
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j <= n; ++j) tr[k] += plus.table().at(k, j, j);
    Matrix<K> g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!is_zero(a.table().at(i, j, k)) && !is_zero(tr[k])) g(i, j) += a.table().at(i, j, k) * tr[k];
    return g;
}

/// J(A) = { a : Tr(L_{ab}) = 0 on A+ for all b in A } (Dickson's criterion, characteristic 0).
template <typename K>
Subspace<K> jacobson_radical(const StructAlgebra<K>& a) {
    if (a.dim() == 0) return Subspace<K>(0);
    return span(kernel(trace_form(a).transpose()), a.dim());
}

struct Nilpotency {
    bool nilpotent = false;
    std::size_t index = 0;  ///< least p with V^p = 0 when nilpotent
};

/// Powers V, V^2, ... of a subspace under the product of A.
template <typename K>
Nilpotency is_nilpotent(const StructAlgebra<K>& a, const Subspace<K>& v) {
    require(v.ambient() == a.dim(), ErrorCode::dimension_mismatch, "subspace ambient dimension");
    Subspace<K> power = v;
    // A nilpotent subalgebra of dimension d has vanishing (d+1)-fold products.
    for (std::size_t p = 1; p <= a.dim() + 1; ++p) {
        if (power.is_zero_space()) return {true, p};
        auto next = bilinear_image(power, v, a.table());
        if (next == power) return {false, 0};
        power = std::move(next);
    }
    return {false, 0};
}

/// Ordinary Wedderburn-Mal'cev splitting A = B0 + J(A).
template <typename K>
struct WedderburnMalcev {
    Subspace<K> radical;
    Subspace<K> semisimple;              ///< B0
    std::vector<Vec<K>> section;         ///< multiplicative lift of the quotient basis
    std::vector<std::size_t> quotient_indices;
};

/// Lifts the quotient basis of A/J and corrects it modulo J, J^2, J^4, ... by solving
/// linear congruences until the lift is multiplicative.
template <typename K>
WedderburnMalcev<K> wedderburn_malcev(const StructAlgebra<K>& a) {
    const std::size_t n = a.dim();
    WedderburnMalcev<K> out;
    out.radical = jacobson_radical(a);
    out.quotient_indices = out.radical.complement_indices();
    const auto& idx = out.quotient_indices;
    const std::size_t r = idx.size();
    for (auto i : idx) out.section.push_back(unit_vec<K>(n, i));
    // gamma[i][j] = coordinates of s_i s_j in A/J
    std::vector<std::vector<Vec<K>>> gamma(r, std::vector<Vec<K>>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            auto res = out.radical.residue(a.basis_product(idx[i], idx[j]));
            for (auto k : idx) gamma[i][j].push_back(res[k]);
        }
    auto defect = [&](std::size_t i, std::size_t j) {
        auto d = a.mul(out.section[i], out.section[j]);
        for (std::size_t k = 0; k < r; ++k) axpy(d, -gamma[i][j][k], out.section[k]);
        return d;
    };
    Subspace<K> cur = out.radical;
    while (!cur.is_zero_space()) {
        auto next = bilinear_image(cur, cur, a.table());
        auto u = cur.basis();
        auto ann = next.annihilator();
        const std::size_t t = u.size();
        // unknown psi_i = sum_t x[i * t + s] u_s
        std::vector<Vec<K>> rows;
        Vec<K> rhs;
        auto dot = [](const Vec<K>& alpha, const Vec<K>& v) {
            K s(0);
            for (std::size_t k = 0; k < v.size(); ++k)
                if (!is_zero(alpha[k]) && !is_zero(v[k])) s += alpha[k] * v[k];
            return s;
        };
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                auto d = defect(i, j);
                for (const auto& alpha : ann) {
                    Vec<K> row(r * t, K(0));
                    for (std::size_t s = 0; s < t; ++s) {
                        row[j * t + s] += dot(alpha, a.mul(out.section[i], u[s]));
                        row[i * t + s] += dot(alpha, a.mul(u[s], out.section[j]));
                        K au = dot(alpha, u[s]);
                        if (!is_zero(au))
                            for (std::size_t k = 0; k < r; ++k) row[k * t + s] -= gamma[i][j][k] * au;
                    }
                    rows.push_back(std::move(row));
                    rhs.push_back(-dot(alpha, d));
                }
            }
        if (!rows.empty() && r * t > 0) {
            auto x = solve(Matrix<K>::from_rows(rows, r * t), rhs);
            if (!x) fail(ErrorCode::internal, "Wedderburn-Mal'cev correction system is inconsistent");
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t s = 0; s < t; ++s) axpy(out.section[i], (*x)[i * t + s], u[s]);
        }
        cur = std::move(next);
    }
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (!is_zero_vec(defect(i, j))) fail(ErrorCode::internal, "Wedderburn-Mal'cev lift is not multiplicative");
    out.semisimple = span(out.section, n);
    return out;
}

/// { x : x e_i = e_i x for all i }.
template <typename K>
Subspace<K> center(const StructAlgebra<K>& a) {
    const std::size_t n = a.dim();
    Matrix<K> m(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t x = 0; x < n; ++x) m(i * n + k, x) = a.table().at(x, i, k) - a.table().at(i, x, k);
    return span(kernel(m), n);
}

namespace detail {

/// Minimal polynomial over Q of a square rational matrix.
inline UPoly minimal_polynomial(const Matrix<Rational>& m) {
    const std::size_t n = m.rows();
    std::vector<Vec<Rational>> powers{Matrix<Rational>::identity(n).flat()};
    Matrix<Rational> p = Matrix<Rational>::identity(n);
    while (true) {
        p = p * m;
        auto cols = powers;
        cols.push_back(p.flat());
        auto ker = kernel(Matrix<Rational>::from_columns(cols, n * n));
        if (!ker.empty()) {
            auto c = ker.front();  // last coordinate is free (1) since earlier powers are independent
            return UPoly(c).monic();
        }
        powers.push_back(p.flat());
    }
}

} // namespace detail

/// Primitive central idempotents of a unital algebra: orthogonal, idempotent, summing to 1.
/// The center is viewed over Q; a generic central element's minimal polynomial is factored
/// over Q and the factors split the center by the Chinese remainder theorem. A component
/// that is a proper field extension of the ground field raises field_too_small.
template <typename K>
std::vector<Vec<K>> primitive_central_idempotents(const StructAlgebra<K>& a) {
    require(a.has_unit(), ErrorCode::not_unital, "central idempotents need a unital algebra");
    const std::size_t n = a.dim();
    const Vec<K>& one = *a.unit();
    auto z = center(a);
    auto jz = intersect(z, jacobson_radical(a));
    if (z.dim() - jz.dim() == 1) return {one};
    using T = ScalarTraits<K>;
    const std::size_t phi = T::rational_degree(a.field());
    auto zb = z.basis();
    std::vector<Vec<K>> qbasis;  // zeta^t z_i
    for (const auto& zi : zb)
        for (std::size_t t = 0; t < phi; ++t) qbasis.push_back(scale(T::power_basis(t, a.field()), zi));
    auto q_coords = [&](const Vec<K>& x) {
        Vec<Rational> out;
        for (const auto& c : z.coordinates(x)) {
            auto rc = T::rational_coords(c, a.field());
            out.insert(out.end(), rc.begin(), rc.end());
        }
        return out;
    };
    auto component_dim = [&](const Vec<K>& e, const Subspace<K>& s) {
        std::vector<Vec<K>> v;
        for (const auto& b : s.basis()) v.push_back(a.mul(e, b));
        return span(v, n).dim();
    };
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int attempt = 0; attempt < 64; ++attempt) {
        auto w = zero_vec<K>(n);
        for (std::size_t i = 0; i < qbasis.size(); ++i) {
            int c = attempt == 0 ? static_cast<int>(i + 1) : coeff(rng);
            axpy(w, K(c), qbasis[i]);
        }
        Matrix<Rational> lw(qbasis.size(), qbasis.size());
        for (std::size_t j = 0; j < qbasis.size(); ++j) {
            auto c = q_coords(a.mul(w, qbasis[j]));
            for (std::size_t i = 0; i < c.size(); ++i) lw(i, j) = c[i];
        }
        auto mu = detail::minimal_polynomial(lw);
        auto factors = factor_squarefree(squarefree_part(mu));
        std::vector<Vec<K>> idem;
        bool generic = true;
        for (const auto& g : factors) {
            UPoly q = UPoly::constant(1);
            while ((mu % (q * g)).is_zero()) q = q * g;
            auto [gg, s, t] = ext_gcd(mu / q, q);
            UPoly u = (s * (mu / q)) % mu;
            // e = u(w) by Horner
            auto e = zero_vec<K>(n);
            for (int k = u.degree(); k >= 0; --k) {
                e = a.mul(e, w);
                axpy(e, ScalarTraits<K>::from_rational(u.coeff(static_cast<std::size_t>(k))), one);
            }
            std::size_t d = component_dim(e, z) - component_dim(e, jz);
            if (d != 1) {
                if (static_cast<std::size_t>(g.degree()) == phi * d)
                    fail(ErrorCode::field_too_small,
                         "center does not split over the ground field; irreducible factor " + g.str());
                generic = false;
                break;
            }
            idem.push_back(std::move(e));
        }
        if (!generic) continue;
        std::sort(idem.begin(), idem.end(), [](const Vec<K>& x, const Vec<K>& y) {
            auto first = [](const Vec<K>& v) {
                std::size_t i = 0;
                while (i < v.size() && is_zero(v[i])) ++i;
                return i;
            };
            return first(x) < first(y);
        });
        return idem;
    }
    fail(ErrorCode::internal, "no separating central element found");
}

} // namespace hpi
