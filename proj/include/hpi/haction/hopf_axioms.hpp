#pragma once

#include <optional>
#include <string>

#include "hpi/haction/haction.hpp"
#include "hpi/hopfzoo/presentation.hpp"

namespace hpi {

struct HopfCheck {
    bool ok = true;
    std::string failure;  ///< empty when ok

    explicit operator bool() const { return ok; }
};

namespace detail {

/// Flattened Kronecker product, used to compare sums of p (x) q as operators.
template <typename K>
Vec<K> kron_flat(const Matrix<K>& a, const Matrix<K>& b) {
    const std::size_t n = a.rows();
    Vec<K> out(n * n * n * n, K(0));
    for (std::size_t i = 0; i < n * n; ++i) {
        const K& x = a.flat()[i];
        if (is_zero(x)) continue;
        for (std::size_t j = 0; j < n * n; ++j)
            if (!is_zero(b.flat()[j])) out[i * n * n + j] = x * b.flat()[j];
    }
    return out;
}

} // namespace detail

/// Checks the operator relations of the presentation, that each expansion is the coproduct
/// (no reversed slot), and, for unital A, rho(g) 1 = eps(g) 1.
template <typename K>
HopfCheck verify_hopf_module_axioms(const HAction<K>& act, const HopfPresentation<K>& hopf) {
    const std::size_t n = act.algebra().dim();
    for (const auto& g : hopf.generators) {
        bool found = false;
        for (const auto& ag : act.generators()) found = found || ag.label == g;
        if (!found) return {false, "generator '" + g + "' of the Hopf presentation has no operator"};
    }
    for (const auto& ag : act.generators()) {
        bool found = false;
        for (const auto& g : hopf.generators) found = found || ag.label == g;
        if (!found) return {false, "operator '" + ag.label + "' is not a generator of the Hopf presentation"};
    }
    for (const auto& rel : hopf.relations) {
        Matrix<K> sum(n, n);
        for (const auto& [c, w] : rel.terms) sum = sum + c * act.word_operator(w);
        if (!sum.is_zero_matrix()) return {false, "relation " + rel.name + " fails"};
    }
    for (const auto& g : act.generators()) {
        Vec<K> lhs(n * n * n * n, K(0)), rhs(n * n * n * n, K(0));
        for (const auto& t : g.expansion) {
            if (t.has_twisted()) return {false, "expansion of " + g.label + " uses the reversed slot"};
            axpy(lhs, t.coeff, detail::kron_flat(act.word_operator(*t.p), act.word_operator(*t.q)));
        }
        auto it = hopf.coproduct.find(g.label);
        if (it != hopf.coproduct.end())
            for (const auto& t : it->second)
                axpy(rhs, t.coeff, detail::kron_flat(act.word_operator(t.p), act.word_operator(t.q)));
        if (lhs != rhs) return {false, "expansion of " + g.label + " does not match its coproduct"};
    }
    auto unit = act.algebra().unit() ? act.algebra().unit() : find_unit(act.algebra());
    if (unit)
        for (const auto& g : act.generators()) {
            auto it = hopf.counit.find(g.label);
            if (it == hopf.counit.end()) continue;
            if (g.matrix.apply(*unit) != scale(it->second, *unit))
                return {false, "unital condition fails for " + g.label + ": rho(" + g.label + ") 1 != eps(" + g.label + ") 1"};
        }
    return {};
}

} // namespace hpi
