#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "hpi/error.hpp"
#include "hpi/field/rational.hpp"

namespace hpi {

/// Dense univariate polynomial over Q, coefficients stored low degree first.
/// The zero polynomial has an empty coefficient vector and degree -1.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    UPoly(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static UPoly constant(const Rational& r) { return UPoly(std::vector<Rational>{r}); }
    static UPoly x() { return UPoly{0, 1}; }
    static UPoly monomial(std::size_t deg, const Rational& coeff = Rational(1)) {
        std::vector<Rational> c(deg + 1);
        c[deg] = coeff;
        return UPoly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const Rational& lead() const { return c_.back(); }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        auto inv = lead().inverse();
        std::vector<Rational> c = c_;
        for (auto& v : c) v *= inv;
        return UPoly(std::move(c));
    }

    UPoly derivative() const {
        std::vector<Rational> d;
        for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
        return UPoly(std::move(d));
    }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return UPoly(std::move(r));
    }
    friend UPoly operator-(const UPoly& a) {
        std::vector<Rational> r = a.c_;
        for (auto& v : r) v = -v;
        return UPoly(std::move(r));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return UPoly(std::move(r));
    }
    friend UPoly operator*(const Rational& s, const UPoly& a) { return UPoly::constant(s) * a; }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division: returns (quotient, remainder).
    friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
        require(!b.is_zero(), ErrorCode::division_by_zero, "polynomial division by zero");
        std::vector<Rational> rem = a.c_;
        if (a.degree() < b.degree()) return {UPoly{}, a};
        std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1);
        auto inv = b.lead().inverse();
        for (int i = static_cast<int>(rem.size()) - 1; i >= b.degree(); --i) {
            if (rem[i].is_zero()) continue;
            auto f = rem[i] * inv;
            std::size_t shift = static_cast<std::size_t>(i - b.degree());
            quo[shift] = f;
            for (std::size_t j = 0; j < b.c_.size(); ++j) rem[shift + j] -= f * b.c_[j];
        }
        return {UPoly(std::move(quo)), UPoly(std::move(rem))};
    }
    friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }
    friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const auto& v = c_[static_cast<std::size_t>(i)];
            if (v.is_zero()) continue;
            bool neg = v.sign() < 0;
            Rational a = neg ? -v : v;
            if (out.empty()) out += neg ? "-" : "";
            else out += neg ? " - " : " + ";
            if (i == 0 || !a.is_one()) out += a.str();
            if (i > 0 && !a.is_one()) out += "*";
            if (i >= 1) out += var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Monic gcd.
inline UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
inline std::tuple<UPoly, UPoly, UPoly> ext_gcd(const UPoly& a, const UPoly& b) {
    UPoly r0 = a, r1 = b, s0 = UPoly::constant(1), s1, t0, t1 = UPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    auto inv = UPoly::constant(r0.lead().inverse());
    return {r0 * inv, s0 * inv, t0 * inv};
}

inline UPoly squarefree_part(const UPoly& f) {
    if (f.degree() <= 0) return f.monic();
    return (f / gcd(f, f.derivative())).monic();
}

namespace detail {
inline UPoly cyclotomic_uncached(int m) {
    UPoly p = UPoly::monomial(static_cast<std::size_t>(m)) - UPoly::constant(1);
    for (int d = 1; d < m; ++d)
        if (m % d == 0) p = p / cyclotomic_uncached(d);
    return p;
}
} // namespace detail

/// Integer coefficients of Phi_m, computed as (x^m - 1) / prod_{d | m, d < m} Phi_d.
inline UPoly cyclotomic_polynomial(int m) {
    require(m >= 1, ErrorCode::precondition, "cyclotomic order must be positive");
    static std::map<int, UPoly> cache;
    static std::mutex mu;
    std::scoped_lock lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, detail::cyclotomic_uncached(m)).first;
    return it->second;
}

inline int euler_phi(int m) {
    int result = m;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace detail {

/// Primitive integer multiple of f with positive leading coefficient.
inline std::vector<mpz_class> primitive_integer(const UPoly& f) {
    mpz_class l = 1;
    for (const auto& c : f.coeffs()) l = lcm(l, c.denominator());
    std::vector<mpz_class> z;
    mpz_class g = 0;
    for (const auto& c : f.coeffs()) {
        mpz_class v = c.numerator() * (l / c.denominator());
        g = gcd(g, v);
        z.push_back(v);
    }
    if (g != 0) {
        if (z.back() < 0) g = -g;
        for (auto& v : z) v /= g;
    }
    return z;
}

inline UPoly from_integer(const std::vector<mpz_class>& z) {
    std::vector<Rational> c;
    for (const auto& v : z) c.emplace_back(v, mpz_class(1));
    return UPoly(std::move(c));
}

inline std::vector<mpz_class> positive_divisors(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline mpz_class eval_integer(const std::vector<mpz_class>& z, const mpz_class& x) {
    mpz_class acc = 0;
    for (auto it = z.rbegin(); it != z.rend(); ++it) acc = acc * x + *it;
    return acc;
}

/// Lagrange interpolation through (xs[i], ys[i]).
inline UPoly interpolate(const std::vector<mpz_class>& xs, const std::vector<mpz_class>& ys) {
    UPoly result;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        UPoly term = UPoly::constant(Rational(ys[i], 1));
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            term = term * UPoly(std::vector<Rational>{Rational(-xs[j], 1), Rational(1)});
            term = term * UPoly::constant(Rational(mpz_class(1), mpz_class(xs[i] - xs[j])));
        }
        result = result + term;
    }
    return result;
}

inline bool has_integer_coeffs(const UPoly& f) {
    return std::all_of(f.coeffs().begin(), f.coeffs().end(), [](const Rational& r) { return r.is_integer(); });
}

/// Searches for a factor of exact degree d of the primitive integer polynomial g.
inline std::optional<UPoly> kronecker_factor(const std::vector<mpz_class>& g, int d) {
    // Evaluation points with small nonzero values keep the divisor product small.
    std::vector<std::pair<std::size_t, mpz_class>> candidates;
    for (long x = -12; x <= 12; ++x) {
        auto v = eval_integer(g, x);
        if (v != 0) candidates.emplace_back(positive_divisors(v).size(), mpz_class(x));
    }
    if (static_cast<int>(candidates.size()) < d + 1) return std::nullopt;
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<mpz_class> xs;
    std::vector<std::vector<mpz_class>> divs;
    for (int i = 0; i <= d; ++i) {
        xs.push_back(candidates[static_cast<std::size_t>(i)].second);
        auto p = positive_divisors(eval_integer(g, xs.back()));
        std::vector<mpz_class> signed_divs;
        for (const auto& q : p) {
            signed_divs.push_back(q);
            if (i > 0) signed_divs.push_back(-q);
        }
        divs.push_back(std::move(signed_divs));
    }
    UPoly gq = from_integer(g);
    std::vector<std::size_t> idx(xs.size(), 0);
    std::vector<mpz_class> ys(xs.size());
    while (true) {
        for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = divs[i][idx[i]];
        UPoly h = interpolate(xs, ys);
        if (h.degree() == d && has_integer_coeffs(h) && (gq % h).is_zero()) return h;
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == divs[k].size()) idx[k++] = 0;
        if (k == idx.size()) break;
    }
    return std::nullopt;
}

inline void factor_squarefree_into(const UPoly& f, std::vector<UPoly>& out) {
    if (f.degree() <= 0) return;
    if (f.degree() == 1) {
        out.push_back(f.monic());
        return;
    }
    auto z = primitive_integer(f);
    // Rational roots p/q with p | a0 and q | an.
    if (z.front() == 0) {
        out.push_back(UPoly::x());
        factor_squarefree_into(f / UPoly::x(), out);
        return;
    }
    for (const auto& p : positive_divisors(z.front())) {
        for (const auto& q : positive_divisors(z.back())) {
            for (int s : {1, -1}) {
                Rational r(mpz_class(s * p), q);
                if (f.eval(r).is_zero()) {
                    UPoly lin(std::vector<Rational>{-r, Rational(1)});
                    out.push_back(lin);
                    factor_squarefree_into(f / lin, out);
                    return;
                }
            }
        }
    }
    for (int d = 2; 2 * d <= f.degree(); ++d) {
        if (auto h = kronecker_factor(z, d)) {
            factor_squarefree_into(*h, out);
            factor_squarefree_into(f / *h, out);
            return;
        }
    }
    out.push_back(f.monic());
}

} // namespace detail

/// Monic irreducible factors over Q of a squarefree polynomial, sorted by (degree, coefficients).
/// Rational roots are extracted first; remaining factors come from a Kronecker search,
/// practical for degrees up to about 8.
inline std::vector<UPoly> factor_squarefree(const UPoly& f) {
    std::vector<UPoly> out;
    detail::factor_squarefree_into(f, out);
    std::sort(out.begin(), out.end(), [](const UPoly& a, const UPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i) {
            auto ai = a.coeff(static_cast<std::size_t>(i)), bi = b.coeff(static_cast<std::size_t>(i));
            if (ai != bi) return ai < bi;
        }
        return false;
    });
    return out;
}

} // namespace hpi
