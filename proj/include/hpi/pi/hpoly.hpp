#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "hpi/haction/haction.hpp"

namespace hpi {

/// x^{h_{l_1}}_{s(1)} x^{h_{l_2}}_{s(2)} ... x^{h_{l_n}}_{s(n)}: position j holds variable
/// sigma[j] acted on by effective-image basis element labels[j] (all 0-based).
struct HMonomial {
    std::vector<std::size_t> sigma;
    std::vector<std::size_t> labels;

    std::size_t degree() const { return sigma.size(); }

    friend auto operator<=>(const HMonomial&, const HMonomial&) = default;
    friend bool operator==(const HMonomial&, const HMonomial&) = default;

    std::string str() const {
        std::string s;
        for (std::size_t j = 0; j < sigma.size(); ++j) {
            if (j) s += " ";
            s += "x" + std::to_string(sigma[j] + 1) + "^h" + std::to_string(labels[j]);
        }
        return s;
    }
};

inline HMonomial make_monomial(std::vector<std::size_t> sigma, std::vector<std::size_t> labels) {
    require(sigma.size() == labels.size(), ErrorCode::dimension_mismatch, "monomial needs one label per position");
    auto sorted = sigma;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        require(sorted[i] == i, ErrorCode::precondition, "monomial variables must be a permutation of 0..n-1");
    return {std::move(sigma), std::move(labels)};
}

/// Plain product x_1 x_2 ... x_n with every label 0 (the identity operator).
inline HMonomial identity_monomial(std::vector<std::size_t> sigma) {
    std::vector<std::size_t> labels(sigma.size(), 0);
    return make_monomial(std::move(sigma), std::move(labels));
}

/// Multilinear H-polynomial of fixed degree; zero coefficients are never stored.
template <typename K>
class HPolynomial {
public:
    explicit HPolynomial(std::size_t degree = 0) : n_(degree) {}
    HPolynomial(const HMonomial& m, K c = K(1)) : n_(m.degree()) { add(m, c); }  // NOLINT

    std::size_t degree() const { return n_; }
    const std::map<HMonomial, K>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    void add(const HMonomial& m, const K& c) {
        require(m.degree() == n_, ErrorCode::dimension_mismatch, "monomial degree differs from polynomial degree");
        if (hpi::is_zero(c)) return;
        auto [it, fresh] = t_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (hpi::is_zero(it->second)) t_.erase(it);
        }
    }

    HPolynomial& operator+=(const HPolynomial& o) {
        require(o.n_ == n_, ErrorCode::dimension_mismatch, "adding polynomials of different degree");
        for (const auto& [m, c] : o.t_) add(m, c);
        return *this;
    }
    friend HPolynomial operator+(HPolynomial a, const HPolynomial& b) { return a += b; }
    friend HPolynomial operator*(const K& s, const HPolynomial& p) {
        HPolynomial out(p.n_);
        for (const auto& [m, c] : p.t_) out.add(m, s * c);
        return out;
    }
    friend bool operator==(const HPolynomial&, const HPolynomial&) = default;

private:
    std::size_t n_;
    std::map<HMonomial, K> t_;
};

/// sum coeff * prod_j h_{l_j}(a_{sigma(j)}), product left to right.
template <typename K>
Vec<K> evaluate(const HPolynomial<K>& f, const HAction<K>& act, const std::vector<Vec<K>>& points) {
    const auto& a = act.algebra();
    const auto& ops = act.effective_image().operators;
    require(points.size() == f.degree(), ErrorCode::dimension_mismatch, "point count differs from polynomial degree");
    for (const auto& p : points) require(p.size() == a.dim(), ErrorCode::dimension_mismatch, "point is not a vector of A");
    auto out = zero_vec<K>(a.dim());
    for (const auto& [m, c] : f.terms()) {
        Vec<K> prod;
        for (std::size_t j = 0; j < m.degree(); ++j) {
            require(m.labels[j] < ops.size(), ErrorCode::precondition, "label outside the effective image basis");
            auto y = ops[m.labels[j]].apply(points[m.sigma[j]]);
            prod = j == 0 ? std::move(y) : a.mul(prod, y);
        }
        axpy(out, c, prod);
    }
    return out;
}

/// Multilinear map A^{(x) n} -> A of f in the basis of A: entry at
/// ((i_1 d + i_2) d + ... + i_n) d + k, with i_t the basis index fed to variable t.
template <typename K>
Vec<K> eval_tensor(const HPolynomial<K>& f, const HAction<K>& act) {
    const std::size_t d = act.algebra().dim(), n = f.degree();
    std::size_t tuples = 1;
    for (std::size_t t = 0; t < n; ++t) tuples *= d;
    Vec<K> out(tuples * d, K(0));
    std::vector<std::size_t> idx(n, 0);
    for (std::size_t t = 0; t < tuples; ++t) {
        std::vector<Vec<K>> pts;
        for (auto i : idx) pts.push_back(unit_vec<K>(d, i));
        auto v = evaluate(f, act, pts);
        for (std::size_t k = 0; k < d; ++k) out[t * d + k] = v[k];
        for (std::size_t p = n; p-- > 0;) {
            if (++idx[p] < d) break;
            idx[p] = 0;
        }
    }
    return out;
}

template <typename K>
bool is_h_identity(const HPolynomial<K>& f, const HAction<K>& act) {
    return is_zero_vec(eval_tensor(f, act));
}

namespace detail {

inline int permutation_sign(const std::vector<std::size_t>& p) {
    int s = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) s = -s;
    return s;
}

} // namespace detail

/// sum over permutations tau of varset of sgn(tau) f with each variable v in varset renamed tau(v).
template <typename K>
HPolynomial<K> alternate(const HPolynomial<K>& f, std::vector<std::size_t> varset) {
    std::sort(varset.begin(), varset.end());
    require(std::adjacent_find(varset.begin(), varset.end()) == varset.end(), ErrorCode::precondition,
            "alternation set has repeated variables");
    for (auto v : varset) require(v < f.degree(), ErrorCode::precondition, "alternation variable out of range");
    std::vector<std::size_t> perm(varset.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::size_t> rename(f.degree());
    HPolynomial<K> out(f.degree());
    do {
        std::iota(rename.begin(), rename.end(), 0);
        for (std::size_t i = 0; i < varset.size(); ++i) rename[varset[i]] = varset[perm[i]];
        K sign(detail::permutation_sign(perm));
        for (const auto& [m, c] : f.terms()) {
            HMonomial r = m;
            for (auto& v : r.sigma) v = rename[v];
            out.add(r, sign * c);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace hpi
