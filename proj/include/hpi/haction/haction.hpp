#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hpi/algebra/structure.hpp"

namespace hpi {

/// A word in the generator labels; the empty word is the identity of H.
using Word = std::vector<std::string>;

inline std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (const auto& l : w) s += l;
    return s;
}

/// One summand of h(ab) = sum coeff * ((p a)(q b) + (r b)(s a)).
/// Either pair may be absent; a term with both pairs contributes both products.
template <typename K>
struct ExpansionTerm {
    K coeff = K(1);
    std::optional<Word> p, q, r, s;

    bool has_direct() const { return p.has_value(); }
    bool has_twisted() const { return r.has_value(); }

    friend bool operator==(const ExpansionTerm& a, const ExpansionTerm& b) {
        return a.coeff == b.coeff && a.p == b.p && a.q == b.q && a.r == b.r && a.s == b.s;
    }
};

template <typename K>
ExpansionTerm<K> direct_term(Word p, Word q, K coeff = K(1)) {
    return {coeff, std::move(p), std::move(q), std::nullopt, std::nullopt};
}

template <typename K>
ExpansionTerm<K> twisted_term(Word r, Word s, K coeff = K(1)) {
    return {coeff, std::nullopt, std::nullopt, std::move(r), std::move(s)};
}

template <typename K>
struct Generator {
    std::string label;
    Matrix<K> matrix;
    std::vector<ExpansionTerm<K>> expansion;
};

/// Basis of the effective image: operators with the generator words that produced them.
template <typename K>
struct EffectiveImage {
    std::vector<Matrix<K>> operators;
    std::vector<Word> words;
    Subspace<K> span;  ///< flattened operators in K^{n^2}

    std::size_t dim() const { return operators.size(); }
};

/// Unital operator algebra generated by the seeds, in closure order: identity, then seeds, then
/// products extended one seed at a time until the span stops growing.
template <typename K>
EffectiveImage<K> operator_closure(std::size_t n, const std::vector<Matrix<K>>& seeds, const std::vector<Word>& seed_words) {
    EffectiveImage<K> img;
    std::vector<Vec<K>> flat;
    img.span = Subspace<K>(n * n);
    auto try_add = [&](Matrix<K> m, Word w) {
        auto v = m.flat();
        if (img.span.contains(v)) return false;
        flat.push_back(std::move(v));
        img.span = span(flat, n * n);
        img.operators.push_back(std::move(m));
        img.words.push_back(std::move(w));
        return true;
    };
    try_add(Matrix<K>::identity(n), {});
    std::size_t frontier = 0;
    for (std::size_t i = 0; i < seeds.size(); ++i) try_add(seeds[i], seed_words[i]);
    while (frontier < img.operators.size() && img.operators.size() < n * n) {
        std::size_t end = img.operators.size();
        for (std::size_t i = frontier; i < end; ++i)
            for (std::size_t s = 0; s < seeds.size(); ++s) {
                Word w = img.words[i];
                w.insert(w.end(), seed_words[s].begin(), seed_words[s].end());
                try_add(img.operators[i] * seeds[s], std::move(w));
            }
        frontier = end;
    }
    return img;
}

/// Generalized H-action on a structure-constant algebra.
template <typename K>
class HAction {
public:
    HAction() = default;
    HAction(StructAlgebra<K> algebra, std::vector<Generator<K>> generators)
        : a_(std::move(algebra)), gens_(std::move(generators)) {
        std::map<std::string, bool> seen;
        for (const auto& g : gens_) {
            require(!g.label.empty(), ErrorCode::schema, "generator with empty label");
            require(!seen[g.label], ErrorCode::schema, "duplicate generator label '" + g.label + "'");
            seen[g.label] = true;
            require(g.matrix.rows() == a_.dim() && g.matrix.cols() == a_.dim(), ErrorCode::schema,
                    "generator '" + g.label + "' matrix is not " + std::to_string(a_.dim()) + "x" + std::to_string(a_.dim()));
        }
        for (const auto& g : gens_)
            for (const auto& t : g.expansion) {
                require(t.p.has_value() == t.q.has_value() && t.r.has_value() == t.s.has_value(), ErrorCode::schema,
                        "expansion term of '" + g.label + "' must give p with q and r with s");
                require(t.p.has_value() || t.r.has_value(), ErrorCode::schema,
                        "empty expansion term for '" + g.label + "'");
                for (const auto* w : {&t.p, &t.q, &t.r, &t.s})
                    if (w->has_value()) word_operator(**w);  // validates labels
            }
        std::vector<Matrix<K>> seeds;
        std::vector<Word> words;
        for (const auto& g : gens_) {
            seeds.push_back(g.matrix);
            words.push_back({g.label});
        }
        image_ = operator_closure(a_.dim(), seeds, words);
    }

    const StructAlgebra<K>& algebra() const { return a_; }
    const std::vector<Generator<K>>& generators() const { return gens_; }
    const EffectiveImage<K>& effective_image() const { return image_; }

    const Generator<K>& generator(const std::string& label) const {
        for (const auto& g : gens_)
            if (g.label == label) return g;
        fail(ErrorCode::schema, "unknown generator label '" + label + "'");
    }

    /// rho(w) = rho(w_1) rho(w_2) ... (rightmost letter acts first).
    Matrix<K> word_operator(const Word& w) const {
        auto m = Matrix<K>::identity(a_.dim());
        for (const auto& l : w) m = m * generator(l).matrix;
        return m;
    }

private:
    StructAlgebra<K> a_;
    std::vector<Generator<K>> gens_;
    EffectiveImage<K> image_;
};

struct ActionViolation {
    std::string generator;
    std::size_t a = 0, b = 0;
};

/// Right-hand side of the expansion of generator g at (x, y).
template <typename K>
Vec<K> expansion_value(const HAction<K>& act, const Generator<K>& g, const Vec<K>& x, const Vec<K>& y) {
    const auto& alg = act.algebra();
    auto out = zero_vec<K>(alg.dim());
    for (const auto& t : g.expansion) {
        if (t.has_direct())
            axpy(out, t.coeff, alg.mul(act.word_operator(*t.p).apply(x), act.word_operator(*t.q).apply(y)));
        if (t.has_twisted())
            axpy(out, t.coeff, alg.mul(act.word_operator(*t.r).apply(y), act.word_operator(*t.s).apply(x)));
    }
    return out;
}

/// Checks rho(g)(e_a e_b) = sum (rho(p) e_a)(rho(q) e_b) + (rho(r) e_b)(rho(s) e_a)
/// for every generator and basis pair; returns the first violation.
template <typename K>
std::optional<ActionViolation> verify_action(const HAction<K>& act) {
    const auto& alg = act.algebra();
    const std::size_t n = alg.dim();
    for (const auto& g : act.generators()) {
        // Cache word operators for this generator's expansion.
        std::vector<std::array<std::optional<Matrix<K>>, 4>> ops;
        for (const auto& t : g.expansion) {
            std::array<std::optional<Matrix<K>>, 4> o;
            if (t.has_direct()) o[0] = act.word_operator(*t.p), o[1] = act.word_operator(*t.q);
            if (t.has_twisted()) o[2] = act.word_operator(*t.r), o[3] = act.word_operator(*t.s);
            ops.push_back(std::move(o));
        }
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                auto lhs = g.matrix.apply(alg.basis_product(a, b));
                auto rhs = zero_vec<K>(n);
                auto ea = unit_vec<K>(n, a), eb = unit_vec<K>(n, b);
                for (std::size_t k = 0; k < ops.size(); ++k) {
                    const auto& t = g.expansion[k];
                    if (t.has_direct()) axpy(rhs, t.coeff, alg.mul(ops[k][0]->apply(ea), ops[k][1]->apply(eb)));
                    if (t.has_twisted()) axpy(rhs, t.coeff, alg.mul(ops[k][2]->apply(eb), ops[k][3]->apply(ea)));
                }
                if (lhs != rhs) return ActionViolation{g.label, a, b};
            }
    }
    return std::nullopt;
}

template <typename K>
void require_valid_action(const HAction<K>& act) {
    if (auto v = verify_action(act))
        fail(ErrorCode::validation, "action axiom fails for generator '" + v->generator + "' at basis pair (" +
                                        std::to_string(v->a) + ", " + std::to_string(v->b) + ")");
}

/// Induced action on A/I for an H-stable ideal I; expansions carry over verbatim.
template <typename K>
HAction<K> quotient_action(const HAction<K>& act, const Quotient<K>& q) {
    std::vector<Generator<K>> gens;
    for (const auto& g : act.generators()) gens.push_back({g.label, q.induced(g.matrix), g.expansion});
    return HAction<K>(q.algebra, std::move(gens));
}

/// Restriction of the action to an H-stable ideal B that is a subalgebra, in B's basis coordinates.
template <typename K>
HAction<K> restrict_action(const HAction<K>& act, const Subspace<K>& b) {
    std::vector<Generator<K>> gens;
    for (const auto& g : act.generators()) gens.push_back({g.label, restrict_operator(g.matrix, b), g.expansion});
    return HAction<K>(subalgebra(act.algebra(), b), std::move(gens));
}

/// Operators spanning the effective image, plus left and right multiplications by the basis.
template <typename K>
std::vector<Matrix<K>> ideal_operators(const HAction<K>& act) {
    auto ops = act.effective_image().operators;
    auto l = act.algebra().left_mults();
    auto r = act.algebra().right_mults();
    ops.insert(ops.end(), l.begin(), l.end());
    ops.insert(ops.end(), r.begin(), r.end());
    return ops;
}

/// True iff the subspace is stable under every operator in the effective image.
template <typename K>
bool is_h_stable(const HAction<K>& act, const Subspace<K>& v) {
    for (const auto& op : act.effective_image().operators)
        if (!v.contains(image(op, v))) return false;
    return true;
}

} // namespace hpi
