#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "hpi/error.hpp"

namespace hpi {

/// Exact rational number in canonical form (gcd(num, den) = 1, den > 0).
class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT: implicit on purpose, integers embed
    Rational(int v) : q_(v) {}   // NOLINT
    Rational(const mpz_class& num, const mpz_class& den) {
        require(den != 0, ErrorCode::division_by_zero, "rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "p" or "p/q" (optional leading sign, no spaces).
    static Rational parse(std::string_view s) {
        std::string t(s);
        auto valid = !t.empty();
        for (std::size_t i = 0; i < t.size() && valid; ++i) {
            char c = t[i];
            if (c == '-' || c == '+') valid = i == 0 || t[i - 1] == '/';
            else if (c == '/') valid = i > 0 && t.find('/', i + 1) == std::string::npos;
            else valid = c >= '0' && c <= '9';
        }
        if (!t.empty() && t[0] == '+') t.erase(0, 1);
        mpq_class q;
        if (!valid || q.set_str(t, 10) != 0) fail(ErrorCode::schema, "malformed rational '" + std::string(s) + "'");
        require(q.get_den() != 0, ErrorCode::division_by_zero, "rational with zero denominator");
        q.canonicalize();
        return Rational(q);
    }

    const mpq_class& value() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    std::string str() const { return q_.get_str(10); }

    Rational inverse() const {
        require(!is_zero(), ErrorCode::division_by_zero, "inverse of zero");
        return Rational(mpq_class(1) / q_);
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        require(!o.is_zero(), ErrorCode::division_by_zero, "division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    std::size_t hash() const {
        std::size_t h = std::hash<long>{}(mpz_get_si(q_.get_num_mpz_t()));
        h ^= std::hash<long>{}(mpz_get_si(q_.get_den_mpz_t())) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h ^= mpz_size(q_.get_num_mpz_t());
        return h;
    }

private:
    mpq_class q_{0};
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

} // namespace hpi
