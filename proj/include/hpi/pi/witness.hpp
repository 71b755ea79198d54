#pragma once

#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hpi/haction/decompose.hpp"
#include "hpi/pi/codim.hpp"

namespace hpi {

/// A polynomial alternating in 2k sets of l = dim B variables that is nonzero when every
/// set is filled with the basis a_1..a_l and the n1 extra slots with basis vectors z.
template <typename K>
struct StarWitness {
    std::size_t k = 0, l = 0, n1 = 0;
    HMonomial generator;          ///< monomial whose alternation is f
    HPolynomial<K> f;
    std::vector<std::size_t> z;   ///< basis indices of the extra variables
    Vec<K> value;                 ///< f(a_1..a_l; ...; a_1..a_l; z)
};

/// Variables 0..2kl-1 form the alternating sets (set i holds i*l .. i*l + l - 1); the
/// remaining n1 variables are free. Searched by increasing n1, then monomials (sigma, labels)
/// in lexicographic order, then z in lexicographic order; the first nonzero value is returned.
template <typename K>
std::optional<StarWitness<K>> property_star_witness(const HAction<K>& act, std::size_t k, std::size_t n0,
                                                    const CodimOptions& opts = {}) {
    require(k >= 1, ErrorCode::precondition, "k must be at least 1");
    const auto& b = act.algebra();
    auto unit = b.unit() ? b.unit() : find_unit(b);
    require(unit.has_value(), ErrorCode::precondition, "the witness search needs a unital algebra B");
    const std::size_t l = b.dim(), d = b.dim();
    const std::size_t h = act.effective_image().dim();
    detail::Deadline deadline(opts.wall_seconds);
    for (std::size_t n1 = 0; n1 <= n0; ++n1) {
        const std::size_t deg = 2 * k * l + n1;
        double est = detail::estimate_rows(deg, h);
        if (est > opts.row_cap)
            fail(ErrorCode::resource_cap, "witness search at degree " + std::to_string(deg) + " needs " +
                                              std::to_string(static_cast<long long>(est)) + " monomials, above the row cap");
        std::vector<Vec<K>> points(deg);
        for (std::size_t i = 0; i < 2 * k * l; ++i) points[i] = unit_vec<K>(d, i % l);
        std::vector<std::size_t> sigma(deg);
        std::iota(sigma.begin(), sigma.end(), 0);
        do {
            std::vector<std::size_t> labels(deg, 0);
            while (true) {
                if (deadline.passed()) fail(ErrorCode::resource_cap, "wall-clock budget exceeded in witness search");
                HMonomial m{sigma, labels};
                HPolynomial<K> f(m);
                for (std::size_t i = 0; i < 2 * k; ++i) {
                    std::vector<std::size_t> set(l);
                    std::iota(set.begin(), set.end(), i * l);
                    f = alternate(f, set);
                }
                if (!f.is_zero()) {
                    std::vector<std::size_t> z(n1, 0);
                    while (true) {
                        for (std::size_t s = 0; s < n1; ++s) points[2 * k * l + s] = unit_vec<K>(d, z[s]);
                        auto v = evaluate(f, act, points);
                        if (!is_zero_vec(v)) return StarWitness<K>{k, l, n1, m, f, z, v};
                        std::size_t p = n1;
                        while (p-- > 0) {
                            if (++z[p] < d) break;
                            z[p] = 0;
                        }
                        if (p == static_cast<std::size_t>(-1)) break;
                    }
                }
                std::size_t p = deg;
                while (p-- > 0) {
                    if (++labels[p] < h) break;
                    labels[p] = 0;
                }
                if (p == static_cast<std::size_t>(-1)) break;
            }
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    return std::nullopt;
}

/// Codimension sequence with n-th roots next to the structural exponent d.
template <typename K>
struct ExponentReport {
    std::vector<std::size_t> n;
    std::vector<std::size_t> codim;
    std::vector<double> roots;  ///< reporting only; every decision uses the exact codim
    bool nilpotent = false;
    std::optional<std::size_t> d;             ///< absent for nilpotent A
    std::vector<std::size_t> witness_chain;   ///< block indices, 0-based
    std::vector<std::size_t> block_dims;
};

template <typename K>
ExponentReport<K> exponent_report(const HAction<K>& act, std::size_t n_max, const CodimOptions& opts = {}) {
    ExponentReport<K> r;
    auto dec = decompose(act);
    r.nilpotent = dec.nilpotent;
    if (!dec.nilpotent) {
        r.d = dec.d;
        r.witness_chain = dec.witness;
        for (const auto& b : dec.blocks) r.block_dims.push_back(b.dim());
    }
    for (std::size_t n = 1; n <= n_max; ++n) {
        auto c = codimension(act, n, opts);
        r.n.push_back(n);
        r.codim.push_back(c);
        r.roots.push_back(std::pow(static_cast<double>(c), 1.0 / static_cast<double>(n)));
    }
    return r;
}

} // namespace hpi
