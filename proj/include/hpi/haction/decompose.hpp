#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "hpi/haction/haction.hpp"

namespace hpi {

/// J^H(A): the largest subspace of J(A) stable under the effective image and under
/// left and right multiplication by A.
template <typename K>
Subspace<K> h_radical(const HAction<K>& act) {
    return stable_closure_shrink(jacobson_radical(act.algebra()), ideal_operators(act));
}

/// A subspace of End(A), realized as an algebra in the coordinates of its canonical basis.
template <typename K>
struct OperatorAlgebra {
    EffectiveImage<K> generated;  ///< closure in generation order
    StructAlgebra<K> algebra;     ///< basis = canonical basis of generated.span
    std::size_t n = 0;            ///< size of the operators

    Matrix<K> element(const Vec<K>& coords) const {
        return Matrix<K>::from_flat(n, n, generated.span.from_coordinates(coords));
    }
};

/// Unital operator algebra generated by the given operators, with its structure constants.
template <typename K>
OperatorAlgebra<K> operator_algebra(const FieldSpec& field, std::size_t n, const std::vector<Matrix<K>>& seeds) {
    OperatorAlgebra<K> out;
    out.n = n;
    std::vector<Word> words(seeds.size());
    out.generated = operator_closure(n, seeds, words);
    const auto& sp = out.generated.span;
    std::vector<Matrix<K>> basis;
    for (const auto& v : sp.basis()) basis.push_back(Matrix<K>::from_flat(n, n, v));
    out.algebra = StructAlgebra<K>::from_products(
        field, basis.size(), [&](std::size_t i, std::size_t j) { return sp.coordinates((basis[i] * basis[j]).flat()); },
        sp.coordinates(Matrix<K>::identity(n).flat()));
    return out;
}

/// The enveloping algebra E of A as a module over H~, L_A and R_A.
template <typename K>
OperatorAlgebra<K> enveloping_algebra(const HAction<K>& act) {
    return operator_algebra(act.algebra().field(), act.algebra().dim(), ideal_operators(act));
}

namespace detail {

/// Looks for a singular nonzero element in the commutant of the operators; used to tell
/// M_r(F) with r > 1 apart from a division algebra.
template <typename K>
bool commutant_has_zero_divisor(std::size_t n, const std::vector<Matrix<K>>& ops) {
    // C = { X : X T = T X for all T }
    std::vector<Vec<K>> rows;
    for (const auto& t : ops)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vec<K> row(n * n, K(0));
                for (std::size_t k = 0; k < n; ++k) {
                    row[i * n + k] += t(k, j);
                    row[k * n + j] -= t(i, k);
                }
                rows.push_back(std::move(row));
            }
    auto basis = kernel(Matrix<K>::from_rows(rows, n * n));
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int attempt = 0; attempt < 32; ++attempt) {
        auto x = zero_vec<K>(n * n);
        for (std::size_t i = 0; i < basis.size(); ++i)
            axpy(x, K(attempt < static_cast<int>(basis.size()) ? (i == static_cast<std::size_t>(attempt) ? 1 : 0) : coeff(rng)),
                 basis[i]);
        auto m = Matrix<K>::from_flat(n, n, x);
        if (m.is_zero_matrix()) continue;
        if (rank(m) < n) return true;
    }
    return false;
}

} // namespace detail

/// A^2 != 0 and A has no proper nonzero ideal stable under the effective image.
/// Decided on the enveloping algebra E: a nonzero radical of E or more than one central
/// idempotent of E exhibits a proper submodule; otherwise E is simple, and A is a simple
/// E-module iff the commutant of E is a division algebra.
template <typename K>
bool is_h_simple(const HAction<K>& act) {
    const auto& a = act.algebra();
    const std::size_t n = a.dim();
    if (n == 0) return false;
    if (bilinear_image(Subspace<K>::full(n), Subspace<K>::full(n), a.table()).is_zero_space()) return false;
    auto env = enveloping_algebra(act);
    if (!jacobson_radical(env.algebra).is_zero_space()) return false;
    if (primitive_central_idempotents(env.algebra).size() > 1) return false;
    if (env.algebra.dim() == n * n) return true;
    if (detail::commutant_has_zero_divisor(n, env.generated.operators)) return false;
    fail(ErrorCode::field_too_small,
         "enveloping algebra is central simple of dimension " + std::to_string(env.algebra.dim()) +
             " but its commutant shows no zero divisor; simplicity cannot be decided over the ground field");
}

/// An H-simple block of a semisimple quotient: support subspace and its unit.
template <typename K>
struct HBlock {
    Subspace<K> support;
    Vec<K> unit;
    std::vector<std::size_t> idempotents;  ///< indices into the primitive central idempotents

    std::size_t dim() const { return support.dim(); }
};

/// Splits a unital algebra with zero H-radical into H-simple H-stable ideals by grouping
/// primitive central idempotents that the effective image connects.
template <typename K>
std::vector<HBlock<K>> h_simple_decompose(const HAction<K>& act) {
    const auto& base = act.algebra();
    const std::size_t n = base.dim();
    auto unit = base.unit() ? base.unit() : find_unit(base);
    require(unit.has_value(), ErrorCode::not_unital,
            "the algebra is not unital; for Hopf actions pass to the unital H-semisimple quotient (adjoin the unit of A)");
    require(h_radical(act).is_zero_space(), ErrorCode::precondition, "the H-radical is nonzero; decompose A/J^H(A)");
    auto a = base.with_unit(unit);
    auto e = primitive_central_idempotents(a);
    const std::size_t k = e.size();
    std::vector<std::size_t> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    const auto& ops = act.effective_image().operators;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Vec<K>> images;
        for (std::size_t x = 0; x < n; ++x) {
            auto ex = a.mul(e[i], unit_vec<K>(n, x));
            if (is_zero_vec(ex)) continue;
            for (const auto& op : ops) images.push_back(op.apply(ex));
        }
        for (std::size_t j = 0; j < k; ++j) {
            if (find(i) == find(j)) continue;
            for (const auto& y : images)
                if (!is_zero_vec(a.mul(e[j], y))) {
                    parent[find(i)] = find(j);
                    break;
                }
        }
    }
    std::vector<HBlock<K>> blocks;
    std::vector<std::ptrdiff_t> slot(k, -1);
    for (std::size_t i = 0; i < k; ++i) {
        auto r = find(i);
        if (slot[r] < 0) {
            slot[r] = static_cast<std::ptrdiff_t>(blocks.size());
            blocks.push_back({Subspace<K>(n), zero_vec<K>(n), {}});
        }
        auto& b = blocks[static_cast<std::size_t>(slot[r])];
        b.unit = add(b.unit, e[i]);
        b.idempotents.push_back(i);
    }
    for (auto& b : blocks) {
        std::vector<Vec<K>> v;
        for (std::size_t x = 0; x < n; ++x) v.push_back(a.mul(b.unit, unit_vec<K>(n, x)));
        b.support = span(v, n);
        require(is_h_stable(act, b.support), ErrorCode::internal, "block is not stable under the effective image");
        if (!is_h_simple(restrict_action(HAction<K>(a, act.generators()), b.support)))
            fail(ErrorCode::decomposition_failure,
                 "block of dimension " + std::to_string(b.dim()) + " is not H-simple; the semisimplicity hypothesis fails");
    }
    return blocks;
}

/// The linear section kappa: A/J^H -> A, multiplicative against B = pi(B0).
template <typename K>
struct KappaEmbedding {
    Quotient<K> quotient;   ///< A/J^H with the projection pi
    Subspace<K> b0;         ///< Wedderburn-Mal'cev complement of J(A) in A
    Subspace<K> n;          ///< (B0, B0)-bimodule complement of J^H in J(A)
    Subspace<K> b;          ///< pi(B0) inside A/J^H
    LinearMap<K> kappa;     ///< (dim A) x (dim A/J^H)

    Vec<K> operator()(const Vec<K>& x) const { return kappa(x); }
};

template <typename K>
KappaEmbedding<K> kappa_embedding(const HAction<K>& act) {
    const auto& a = act.algebra();
    const std::size_t dim = a.dim();
    auto wm = wedderburn_malcev(a);
    const auto& j = wm.radical;
    auto jh = h_radical(act);
    KappaEmbedding<K> out;
    out.b0 = wm.semisimple;
    // (B0, B0)-bimodule structure on J in J-coordinates
    std::vector<Matrix<K>> ops;
    for (const auto& b : out.b0.basis()) {
        ops.push_back(restrict_operator(a.left_mult(b), j));
        ops.push_back(restrict_operator(a.right_mult(b), j));
    }
    std::vector<Vec<K>> s;
    for (const auto& v : jh.basis()) s.push_back(j.coordinates(v));
    Matrix<K> p;
    try {
        p = equivariant_projection(j.dim(), ops, span(s, j.dim()));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::not_completely_reducible)
            fail(ErrorCode::internal, "J(A) has no (B0, B0)-bimodule complement to J^H(A)");
        throw;
    }
    std::vector<Vec<K>> nv;
    for (const auto& c : kernel(p)) nv.push_back(j.from_coordinates(c));
    out.n = span(nv, dim);
    out.quotient = quotient_algebra(a, jh);
    const auto& q = out.quotient;
    const std::size_t qd = q.lift_indices.size();
    std::vector<Vec<K>> w = out.b0.basis();
    for (const auto& v : out.n.basis()) w.push_back(v);
    require(w.size() == qd, ErrorCode::internal, "B0 + N does not complement J^H(A)");
    std::vector<Vec<K>> images;
    for (const auto& v : w) images.push_back(q.project(v));
    auto pw = Matrix<K>::from_columns(images, qd);
    auto inv = inverse(pw);
    require(inv.has_value(), ErrorCode::internal, "projection restricted to B0 + N is not invertible");
    out.kappa = {Matrix<K>::from_columns(w, dim) * *inv};
    std::vector<Vec<K>> bv;
    for (const auto& v : out.b0.basis()) bv.push_back(q.project(v));
    out.b = span(bv, qd);

    // postconditions
    const auto& bar = q.algebra;
    for (std::size_t i = 0; i < qd; ++i) {
        auto ei = unit_vec<K>(qd, i);
        require(q.project(out(ei)) == ei, ErrorCode::internal, "pi kappa is not the identity");
        for (const auto& bb : out.b.basis()) {
            require(out(bar.mul(ei, bb)) == a.mul(out(ei), out(bb)), ErrorCode::internal, "kappa(ab) != kappa(a)kappa(b)");
            require(out(bar.mul(bb, ei)) == a.mul(out(bb), out(ei)), ErrorCode::internal, "kappa(ba) != kappa(b)kappa(a)");
        }
    }
    return out;
}

/// Products in A+ = A + F 1 computed inside A: S A+ = S + S A.
template <typename K>
Subspace<K> times_unitization(const Subspace<K>& s, const StructAlgebra<K>& a) {
    return s + bilinear_image(s, Subspace<K>::full(a.dim()), a.table());
}

/// span{ h kappa(b) : h in the effective image, b in the block }.
template <typename K>
Subspace<K> h_kappa_block(const HAction<K>& act, const KappaEmbedding<K>& kappa, const HBlock<K>& block) {
    std::vector<Vec<K>> v;
    for (const auto& b : block.support.basis()) {
        auto kb = kappa(b);
        for (const auto& op : act.effective_image().operators) v.push_back(op.apply(kb));
    }
    return span(v, act.algebra().dim());
}

struct ExponentOptions {
    bool allow_repeats = false;  ///< off: indices in a chain are pairwise distinct
};

template <typename K>
struct ExponentCandidate {
    std::size_t d = 0;
    std::vector<std::size_t> witness;  ///< block indices, 0-based
    Subspace<K> chain;                 ///< final nonzero chain subspace of the witness
};

/// d = max sum of dim B_i over block sequences whose chain
/// (H kappa(B_i1)) A+ (H kappa(B_i2)) A+ ... (H kappa(B_ir)) is nonzero.
/// Sequences are explored depth-first in lexicographic order; the first strict maximum is kept.
template <typename K>
ExponentCandidate<K> exponent_candidate(const HAction<K>& act, const KappaEmbedding<K>& kappa,
                                        const std::vector<HBlock<K>>& blocks, ExponentOptions opts = {}) {
    const auto& a = act.algebra();
    const std::size_t q = blocks.size();
    std::vector<Subspace<K>> hk;
    for (const auto& b : blocks) hk.push_back(h_kappa_block(act, kappa, b));
    const std::size_t max_len = opts.allow_repeats ? 2 * q : q;
    ExponentCandidate<K> best;
    best.chain = Subspace<K>(a.dim());
    std::vector<std::size_t> seq;
    std::vector<bool> used(q, false);
    std::function<void(const Subspace<K>&, std::size_t)> dfs = [&](const Subspace<K>& s, std::size_t weight) {
        if (weight > best.d) {
            best.d = weight;
            best.witness = seq;
            best.chain = s;
        }
        if (seq.size() == max_len) return;
        Subspace<K> sa = times_unitization(s, a);
        for (std::size_t i = 0; i < q; ++i) {
            if (used[i] && !opts.allow_repeats) continue;
            auto next = bilinear_image(sa, hk[i], a.table());
            if (next.is_zero_space()) continue;  // dead chains stay dead
            seq.push_back(i);
            used[i] = true;
            dfs(next, weight + blocks[i].dim());
            used[i] = false;
            seq.pop_back();
        }
    };
    for (std::size_t i = 0; i < q; ++i) {
        if (hk[i].is_zero_space()) continue;
        seq = {i};
        used[i] = true;
        dfs(hk[i], blocks[i].dim());
        used[i] = false;
    }
    return best;
}

/// Everything the structure theory attaches to an action.
template <typename K>
struct DecompReport {
    Subspace<K> radical;    ///< J(A)
    Subspace<K> h_radical;  ///< J^H(A)
    bool nilpotent = false;
    std::optional<HAction<K>> quotient_action;  ///< induced action on A/J^H(A)
    std::optional<KappaEmbedding<K>> kappa;
    std::vector<HBlock<K>> blocks;  ///< subspaces of A/J^H(A)
    std::size_t d = 0;
    std::vector<std::size_t> witness;
    std::optional<Subspace<K>> witness_chain;
};

template <typename K>
DecompReport<K> decompose(const HAction<K>& act, ExponentOptions opts = {}) {
    require_valid_action(act);
    DecompReport<K> r;
    const auto& a = act.algebra();
    r.radical = jacobson_radical(a);
    r.h_radical = h_radical(act);
    r.nilpotent = r.h_radical.is_full();
    if (r.nilpotent) return r;
    r.kappa = kappa_embedding(act);
    r.quotient_action = quotient_action(act, r.kappa->quotient);
    require_valid_action(*r.quotient_action);
    r.blocks = h_simple_decompose(*r.quotient_action);
    auto ec = exponent_candidate(act, *r.kappa, r.blocks, opts);
    r.d = ec.d;
    r.witness = ec.witness;
    r.witness_chain = ec.chain;
    return r;
}

} // namespace hpi
