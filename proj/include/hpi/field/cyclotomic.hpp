#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "hpi/error.hpp"
#include "hpi/field/poly.hpp"
#include "hpi/field/rational.hpp"

namespace hpi {

namespace detail {

/// Per-order data: Phi_m and the reductions of z^k for k < 2*phi(m) - 1.
struct CycloContext {
    int order = 1;
    std::size_t degree = 1;
    UPoly modulus;
    std::vector<std::vector<Rational>> power_residue;
};

inline std::shared_ptr<const CycloContext> cyclo_context(int m) {
    static std::map<int, std::shared_ptr<const CycloContext>> cache;
    static std::mutex mu;
    std::scoped_lock lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
    auto ctx = std::make_shared<CycloContext>();
    ctx->order = m;
    ctx->modulus = m == 1 ? UPoly{-1, 1} : cyclotomic_polynomial(m);
    ctx->degree = static_cast<std::size_t>(ctx->modulus.degree());
    for (std::size_t k = 0; k + 1 < 2 * ctx->degree; ++k) {
        auto r = UPoly::monomial(k) % ctx->modulus;
        std::vector<Rational> v(ctx->degree);
        for (std::size_t i = 0; i < ctx->degree; ++i) v[i] = r.coeff(i);
        ctx->power_residue.push_back(std::move(v));
    }
    cache.emplace(m, ctx);
    return ctx;
}

} // namespace detail

/// Element of Q(zeta_m), stored as the reduced residue modulo Phi_m.
/// Orders 1 and 2 both describe Q and are normalized to order 1; a rational
/// value combines with any order, two distinct nontrivial orders never mix.
class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(Rational(0)) {}
    Cyclotomic(long v) : Cyclotomic(Rational(v)) {}  // NOLINT
    Cyclotomic(int v) : Cyclotomic(Rational(v)) {}   // NOLINT
    Cyclotomic(const Rational& r) : ctx_(detail::cyclo_context(1)), c_{r} {}  // NOLINT

    /// Element of order m from residue coefficients (reduced if longer than phi(m)).
    Cyclotomic(int m, std::vector<Rational> coeffs) {
        require(m >= 1, ErrorCode::precondition, "cyclotomic order must be positive");
        if (m == 2) {
            // Q(zeta_2) = Q with zeta_2 = -1
            Rational v(0), p(1);
            for (const auto& c : coeffs) {
                v += c * p;
                p = -p;
            }
            ctx_ = detail::cyclo_context(1);
            c_ = {v};
            return;
        }
        ctx_ = detail::cyclo_context(m);
        c_ = reduce(std::move(coeffs));
    }

    static Cyclotomic zeta(int m) {
        if (m <= 2) return Cyclotomic(Rational(m == 1 ? 1 : -1));
        return Cyclotomic(m, {Rational(0), Rational(1)});
    }

    /// Parses "c0 + c1*z + c2*z^2 ..." in Q(zeta_m); terms may repeat and come in any order.
    static Cyclotomic parse(std::string_view s, int m) {
        std::vector<Rational> coeffs;
        std::size_t i = 0;
        auto skip = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
        auto bad = [&] { fail(ErrorCode::schema, "malformed cyclotomic scalar '" + std::string(s) + "'"); };
        bool first = true;
        skip();
        if (i == s.size()) bad();
        while (i < s.size()) {
            int sign = 1;
            bool saw_op = false;
            while (i < s.size() && (s[i] == '+' || s[i] == '-' || std::isspace(static_cast<unsigned char>(s[i])))) {
                if (s[i] == '-') sign = -sign;
                if (s[i] == '+' || s[i] == '-') saw_op = true;
                ++i;
            }
            if (!first && !saw_op) bad();
            first = false;
            Rational coeff(1);
            std::size_t start = i;
            while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
            bool has_number = i > start;
            if (has_number) coeff = Rational::parse(s.substr(start, i - start));
            skip();
            std::size_t power = 0;
            if (has_number && i < s.size() && s[i] == '*') {
                ++i;
                skip();
                if (i >= s.size() || s[i] != 'z') bad();
            }
            if (i < s.size() && s[i] == 'z') {
                ++i;
                power = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    std::size_t ps = i;
                    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                    if (i == ps) bad();
                    power = std::stoul(std::string(s.substr(ps, i - ps)));
                }
            } else if (!has_number) {
                bad();
            }
            if (coeffs.size() <= power) coeffs.resize(power + 1);
            coeffs[power] += sign > 0 ? coeff : -coeff;
            skip();
        }
        if (m <= 1) {
            require(coeffs.size() <= 1, ErrorCode::schema, "power of z in a rational scalar '" + std::string(s) + "'");
            return Cyclotomic(coeffs.empty() ? Rational(0) : coeffs[0]);
        }
        return Cyclotomic(m, std::move(coeffs));
    }

    int order() const { return ctx_->order; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    Rational rational_part() const { return c_[0]; }

    std::string str() const {
        std::string out;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            const auto& v = c_[k];
            if (v.is_zero()) continue;
            bool neg = v.sign() < 0;
            Rational a = neg ? -v : v;
            if (out.empty()) out += neg ? "-" : "";
            else out += neg ? " - " : " + ";
            if (k == 0) out += a.str();
            else if (!a.is_one()) out += a.str() + "*";
            if (k >= 1) out += "z";
            if (k >= 2) out += "^" + std::to_string(k);
        }
        return out.empty() ? "0" : out;
    }

    Cyclotomic inverse() const {
        require(!is_zero(), ErrorCode::division_by_zero, "inverse of zero");
        if (order() == 1) return Cyclotomic(c_[0].inverse());
        auto [g, s, t] = ext_gcd(as_poly(), ctx_->modulus);
        if (g.degree() != 0) fail(ErrorCode::internal, "non-invertible cyclotomic residue");
        return Cyclotomic(order(), s.coeffs());
    }

    /// Galois automorphism zeta -> zeta^j (gcd(j, m) = 1).
    Cyclotomic galois(int j) const {
        if (order() == 1) return *this;
        Cyclotomic acc(Rational(0));
        Cyclotomic zj = zeta(order()).pow(static_cast<unsigned>(((j % order()) + order()) % order()));
        Cyclotomic p(Rational(1));
        for (const auto& c : c_) {
            acc += Cyclotomic(c) * p;
            p *= zj;
        }
        return acc;
    }

    Cyclotomic pow(unsigned e) const {
        Cyclotomic result(Rational(1)), base = *this;
        while (e) {
            if (e & 1U) result *= base;
            base *= base;
            e >>= 1U;
        }
        return result;
    }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        align(o);
        if (o.order() == 1) c_[0] += o.c_[0];
        else for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this += -o; }
    Cyclotomic& operator*=(const Cyclotomic& o) {
        align(o);
        if (o.order() == 1) {
            for (auto& c : c_) c *= o.c_[0];
            return *this;
        }
        if (order() == 1) return *this = o * c_[0];
        std::vector<Rational> prod(2 * c_.size() - 1);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                if (!o.c_[j].is_zero()) prod[i + j] += c_[i] * o.c_[j];
        }
        std::vector<Rational> r(c_.size());
        for (std::size_t k = 0; k < prod.size(); ++k) {
            if (prod[k].is_zero()) continue;
            const auto& pr = ctx_->power_residue[k];
            for (std::size_t i = 0; i < r.size(); ++i)
                if (!pr[i].is_zero()) r[i] += prod[k] * pr[i];
        }
        c_ = std::move(r);
        return *this;
    }
    Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    friend Cyclotomic operator-(Cyclotomic a) {
        for (auto& c : a.c_) c = -c;
        return a;
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.order() == b.order()) return a.c_ == b.c_;
        if (a.order() == 1) return b.is_rational() && b.c_[0] == a.c_[0];
        if (b.order() == 1) return a.is_rational() && a.c_[0] == b.c_[0];
        fail(ErrorCode::order_mismatch, "comparing elements of Q(zeta_" + std::to_string(a.order()) + ") and Q(zeta_" +
                                            std::to_string(b.order()) + ")");
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }

    std::size_t hash() const {
        std::size_t h = 0;
        for (const auto& c : c_) h = h * 1000003U ^ c.hash();
        return h;
    }

private:
    UPoly as_poly() const { return UPoly(c_); }

    std::vector<Rational> reduce(std::vector<Rational> coeffs) const {
        if (coeffs.size() <= ctx_->degree) {
            coeffs.resize(ctx_->degree);
            return coeffs;
        }
        auto r = UPoly(std::move(coeffs)) % ctx_->modulus;
        std::vector<Rational> out(ctx_->degree);
        for (std::size_t i = 0; i < ctx_->degree; ++i) out[i] = r.coeff(i);
        return out;
    }

    /// Brings *this to the common order with o (promoting a rational).
    void align(const Cyclotomic& o) {
        if (order() == o.order() || o.order() == 1) return;
        if (order() == 1) {
            Rational v = c_[0];
            ctx_ = o.ctx_;
            c_.assign(ctx_->degree, Rational(0));
            c_[0] = v;
            return;
        }
        fail(ErrorCode::order_mismatch, "mixing Q(zeta_" + std::to_string(order()) + ") and Q(zeta_" +
                                            std::to_string(o.order()) + ")");
    }

    std::shared_ptr<const detail::CycloContext> ctx_;
    std::vector<Rational> c_;
};

inline bool is_zero(const Cyclotomic& c) { return c.is_zero(); }

/// True iff z^m = 1 and z^k != 1 for 1 <= k < m.
inline bool is_primitive_root(const Cyclotomic& z, int m) {
    if (m < 1) return false;
    Cyclotomic p(Rational(1));
    Cyclotomic one(Rational(1));
    for (int k = 1; k < m; ++k) {
        p *= z;
        if (p == one) return false;
    }
    p *= z;
    return p == one;
}

inline bool is_primitive_root(const Rational& z, int m) { return is_primitive_root(Cyclotomic(z), m); }

} // namespace hpi
