#pragma once

#include <concepts>
#include <string>
#include <string_view>
#include <vector>

#include "hpi/field/cyclotomic.hpp"
#include "hpi/field/rational.hpp"

namespace hpi {

template <typename K>
concept ExactField = requires(K a, K b) {
    { K(0) } -> std::convertible_to<K>;
    { K(1) } -> std::convertible_to<K>;
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { a / b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a == b } -> std::convertible_to<bool>;
    { is_zero(a) } -> std::convertible_to<bool>;
    { a.str() } -> std::convertible_to<std::string>;
};

/// Ground-field description carried by documents and algebras: order 1 is Q.
struct FieldSpec {
    int order = 1;
    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

template <typename K>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static Rational parse(std::string_view s, const FieldSpec&) { return Rational::parse(s); }
    /// Dimension of the field over Q.
    static std::size_t rational_degree(const FieldSpec&) { return 1; }
    static std::vector<Rational> rational_coords(const Rational& x, const FieldSpec&) { return {x}; }
    static Rational power_basis(std::size_t, const FieldSpec&) { return Rational(1); }
    static Rational from_rational(const Rational& r) { return r; }
};

template <>
struct ScalarTraits<Cyclotomic> {
    static Cyclotomic parse(std::string_view s, const FieldSpec& f) { return Cyclotomic::parse(s, f.order); }
    static std::size_t rational_degree(const FieldSpec& f) {
        return f.order <= 2 ? 1 : static_cast<std::size_t>(euler_phi(f.order));
    }
    static std::vector<Rational> rational_coords(const Cyclotomic& x, const FieldSpec& f) {
        std::vector<Rational> out(rational_degree(f));
        const auto& c = x.coeffs();
        if (x.order() == 1) out[0] = c[0];
        else for (std::size_t i = 0; i < out.size() && i < c.size(); ++i) out[i] = c[i];
        return out;
    }
    static Cyclotomic power_basis(std::size_t i, const FieldSpec& f) {
        return Cyclotomic::zeta(f.order).pow(static_cast<unsigned>(i));
    }
    static Cyclotomic from_rational(const Rational& r) { return Cyclotomic(r); }
};

} // namespace hpi
