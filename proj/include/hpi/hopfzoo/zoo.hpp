#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hpi/field/cyclotomic.hpp"
#include "hpi/haction/hopf_axioms.hpp"

namespace hpi {

namespace detail {

inline FieldSpec field_of(const Rational&) { return {}; }
inline FieldSpec field_of(const Cyclotomic& z) { return {z.order()}; }

template <typename K>
K power(const K& x, long e) {
    K r(1);
    for (long i = 0; i < e; ++i) r = r * x;
    return r;
}

template <typename K>
TensorElement<K> tensor_mul(const StructAlgebra<K>& h, const TensorElement<K>& x, const TensorElement<K>& y) {
    TensorElement<K> out;
    for (const auto& [ab, c] : x)
        for (const auto& [a2b2, c2] : y) {
            auto l = h.basis_product(ab.first, a2b2.first);
            auto r = h.basis_product(ab.second, a2b2.second);
            for (std::size_t i = 0; i < l.size(); ++i) {
                if (is_zero(l[i])) continue;
                for (std::size_t j = 0; j < r.size(); ++j) {
                    if (is_zero(r[j])) continue;
                    out[{i, j}] += c * c2 * l[i] * r[j];
                }
            }
        }
    for (auto it = out.begin(); it != out.end();) it = is_zero(it->second) ? out.erase(it) : std::next(it);
    return out;
}

} // namespace detail

/// Taft algebra H_{m^2}(zeta): generated by c, v with c^m = 1, v^m = 0, vc = zeta cv;
/// basis c^i v^k at index i * m + k; Delta(c) = c (x) c, Delta(v) = c (x) v + v (x) 1,
/// eps(c) = 1, eps(v) = 0, S(c) = c^{-1}, S(v) = -c^{-1} v.
template <typename K>
HopfPresentation<K> taft(int m, const K& zeta) {
    require(m >= 2, ErrorCode::precondition, "Taft algebra needs m >= 2");
    require(is_primitive_root(zeta, m), ErrorCode::precondition, "zeta is not a primitive " + std::to_string(m) + "-th root of unity");
    const auto field = detail::field_of(zeta);
    const std::size_t um = static_cast<std::size_t>(m), dim = um * um;
    auto idx = [um](std::size_t i, std::size_t k) { return (i % um) * um + k; };
    HopfPresentation<K> h;
    h.kind = HopfKind::taft;
    h.m = m;
    h.zeta = zeta;
    h.generators = {"c", "v"};
    Word cm(um, "c"), vm(um, "v");
    h.relations.push_back({"c^" + std::to_string(m) + " = 1", {{K(1), cm}, {K(-1), {}}}});
    h.relations.push_back({"v^" + std::to_string(m) + " = 0", {{K(1), vm}}});
    h.relations.push_back({"vc = zeta cv", {{K(1), {"v", "c"}}, {-zeta, {"c", "v"}}}});
    h.coproduct["c"] = {{K(1), {"c"}, {"c"}}};
    h.coproduct["v"] = {{K(1), {"c"}, {"v"}}, {K(1), {"v"}, {}}};
    h.counit["c"] = K(1);
    h.counit["v"] = K(0);

    // (c^i v^k)(c^j v^l) = zeta^{kj} c^{i+j} v^{k+l}
    h.algebra = StructAlgebra<K>::from_products(
        field, dim,
        [&](std::size_t x, std::size_t y) {
            std::size_t i = x / um, k = x % um, j = y / um, l = y % um;
            auto p = zero_vec<K>(dim);
            if (k + l < um) p[idx(i + j, k + l)] = detail::power(zeta, static_cast<long>((k * j) % um));
            return p;
        },
        unit_vec<K>(dim, 0));
    const auto& alg = *h.algebra;
    for (std::size_t i = 0; i < um; ++i)
        for (std::size_t k = 0; k < um; ++k) {
            std::string s;
            if (i > 0) s += i == 1 ? "c" : "c^" + std::to_string(i);
            if (k > 0) s += k == 1 ? "v" : "v^" + std::to_string(k);
            h.basis_labels.push_back(s.empty() ? "1" : s);
        }
    const std::size_t c = idx(1, 0), v = idx(0, 1);
    TensorElement<K> dc{{{c, c}, K(1)}};
    TensorElement<K> dv{{{c, v}, K(1)}, {{v, 0}, K(1)}};
    h.delta.resize(dim);
    h.epsilon = zero_vec<K>(dim);
    Matrix<K> s(dim, dim);
    auto sc = unit_vec<K>(dim, idx(um - 1, 0));
    auto sv = scale(K(-1), unit_vec<K>(dim, idx(um - 1, 1)));
    for (std::size_t i = 0; i < um; ++i)
        for (std::size_t k = 0; k < um; ++k) {
            TensorElement<K> d{{{0, 0}, K(1)}};
            for (std::size_t t = 0; t < i; ++t) d = detail::tensor_mul(alg, d, dc);
            for (std::size_t t = 0; t < k; ++t) d = detail::tensor_mul(alg, d, dv);
            h.delta[idx(i, k)] = d;
            h.epsilon[idx(i, k)] = k == 0 ? K(1) : K(0);
            // S(c^i v^k) = S(v)^k S(c)^i
            auto y = unit_vec<K>(dim, 0);
            for (std::size_t t = 0; t < k; ++t) y = alg.mul(y, sv);
            for (std::size_t t = 0; t < i; ++t) y = alg.mul(y, sc);
            for (std::size_t r = 0; r < dim; ++r) s(r, idx(i, k)) = y[r];
        }
    h.antipode = s;
    return h;
}

/// Module-algebra action of a Taft algebra: c -> pc, v -> pv; validated against the Hopf
/// relations and the expansion axiom.
template <typename K>
HAction<K> taft_action(const StructAlgebra<K>& a, const Matrix<K>& pc, const Matrix<K>& pv, int m, const K& zeta) {
    auto h = taft(m, zeta);
    HAction<K> act(a, {{"c", pc, {direct_term<K>({"c"}, {"c"})}},
                       {"v", pv, {direct_term<K>({"c"}, {"v"}), direct_term<K>({"v"}, {})}}});
    if (auto chk = verify_hopf_module_axioms(act, h); !chk) fail(ErrorCode::validation, chk.failure);
    require_valid_action(act);
    return act;
}

/// Grading of A by a finite set T0 with a partial product: basis vector i lies in
/// component elements[degrees[i]]; product[g][w] is the index of gw or empty if undefined.
struct Grading {
    std::vector<std::string> elements;
    std::vector<std::vector<std::optional<std::size_t>>> product;
    std::vector<std::size_t> degrees;

    friend bool operator==(const Grading&, const Grading&) = default;
};

template <typename K>
void validate_grading(const StructAlgebra<K>& a, const Grading& gr) {
    const std::size_t t = gr.elements.size();
    require(t > 0, ErrorCode::schema, "grading has no elements");
    require(gr.product.size() == t, ErrorCode::schema, "grading product table must be square over the elements");
    for (const auto& row : gr.product) {
        require(row.size() == t, ErrorCode::schema, "grading product table must be square over the elements");
        for (const auto& x : row) require(!x || *x < t, ErrorCode::schema, "grading product entry out of range");
    }
    require(gr.degrees.size() == a.dim(), ErrorCode::schema, "grading must assign a degree to every basis vector");
    for (auto d : gr.degrees) require(d < t, ErrorCode::schema, "degree out of range");
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            auto p = a.basis_product(i, j);
            if (is_zero_vec(p)) continue;
            auto gw = gr.product[gr.degrees[i]][gr.degrees[j]];
            bool ok = gw.has_value();
            for (std::size_t k = 0; ok && k < p.size(); ++k) ok = is_zero(p[k]) || gr.degrees[k] == *gw;
            if (!ok)
                fail(ErrorCode::validation, "grading violation at basis pair (" + std::to_string(i) + ", " + std::to_string(j) +
                                                "): product leaves component " +
                                                (gw ? gr.elements[*gw] : std::string("(undefined)")));
        }
}

inline std::string grading_label(const Grading& gr, std::size_t t) { return "h" + gr.elements[t]; }

/// Action of the dual of the semigroup algebra: h_t projects onto component t and
/// h_t(ab) = sum over gw = t of h_g(a) h_w(b).
template <typename K>
HAction<K> grading_dual_action(const StructAlgebra<K>& a, const Grading& gr) {
    validate_grading(a, gr);
    const std::size_t t = gr.elements.size();
    std::vector<Generator<K>> gens;
    for (std::size_t s = 0; s < t; ++s) {
        Matrix<K> proj(a.dim(), a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i)
            if (gr.degrees[i] == s) proj(i, i) = K(1);
        std::vector<ExpansionTerm<K>> ex;
        for (std::size_t g = 0; g < t; ++g)
            for (std::size_t w = 0; w < t; ++w)
                if (gr.product[g][w] == s) ex.push_back(direct_term<K>({grading_label(gr, g)}, {grading_label(gr, w)}));
        gens.push_back({grading_label(gr, s), proj, ex});
    }
    HAction<K> act(a, std::move(gens));
    require_valid_action(act);
    return act;
}

/// Presentation of the dual semigroup algebra: orthogonal idempotents h_t summing to 1,
/// Delta(h_t) = sum over gw = t of h_g (x) h_w; the counit picks out an identity element if present.
template <typename K>
HopfPresentation<K> grading_dual_presentation(const Grading& gr) {
    HopfPresentation<K> h;
    h.kind = HopfKind::grading_dual;
    const std::size_t t = gr.elements.size();
    std::optional<std::size_t> identity;
    for (std::size_t e = 0; e < t && !identity; ++e) {
        bool ok = true;
        for (std::size_t g = 0; g < t; ++g) ok = ok && gr.product[e][g] == g && gr.product[g][e] == g;
        if (ok) identity = e;
    }
    OperatorRelation<K> sum{"sum of h_t = 1", {{K(-1), {}}}};
    for (std::size_t s = 0; s < t; ++s) {
        auto ls = grading_label(gr, s);
        h.generators.push_back(ls);
        sum.terms.push_back({K(1), {ls}});
        for (std::size_t r = 0; r < t; ++r) {
            auto lr = grading_label(gr, r);
            OperatorRelation<K> rel{ls + lr + (r == s ? " = " + ls : " = 0"), {{K(1), {ls, lr}}}};
            if (r == s) rel.terms.push_back({K(-1), {ls}});
            h.relations.push_back(rel);
        }
        for (std::size_t g = 0; g < t; ++g)
            for (std::size_t w = 0; w < t; ++w)
                if (gr.product[g][w] == s) h.coproduct[ls].push_back({K(1), {grading_label(gr, g)}, {grading_label(gr, w)}});
        if (identity) h.counit[ls] = s == *identity ? K(1) : K(0);
    }
    h.relations.push_back(sum);
    return h;
}

/// One map of a semigroup acting by endomorphisms (anti = false) or anti-endomorphisms.
template <typename K>
struct SemigroupMap {
    std::string label;
    Matrix<K> matrix;
    bool anti = false;
};

/// g(ab) = g(a) g(b) for endomorphisms, g(ab) = g(b) g(a) for anti-endomorphisms.
template <typename K>
HAction<K> group_action(const StructAlgebra<K>& a, const std::vector<SemigroupMap<K>>& maps) {
    std::vector<Generator<K>> gens;
    for (const auto& g : maps)
        gens.push_back({g.label, g.matrix, {g.anti ? twisted_term<K>({g.label}, {g.label}) : direct_term<K>({g.label}, {g.label})}});
    HAction<K> act(a, std::move(gens));
    require_valid_action(act);
    return act;
}

/// Group algebra presentation: Delta(g) = g (x) g, eps(g) = 1, with the given relations.
template <typename K>
HopfPresentation<K> group_presentation(const std::vector<std::string>& labels, std::vector<OperatorRelation<K>> relations) {
    HopfPresentation<K> h;
    h.kind = HopfKind::group_algebra;
    h.generators = labels;
    h.relations = std::move(relations);
    for (const auto& g : labels) {
        h.coproduct[g] = {{K(1), {g}, {g}}};
        h.counit[g] = K(1);
    }
    return h;
}

/// H = F acting by the identity.
template <typename K>
HAction<K> trivial_action(const StructAlgebra<K>& a) {
    return HAction<K>(a, {{"id", Matrix<K>::identity(a.dim()), {direct_term<K>({}, {})}}});
}

template <typename K>
HopfPresentation<K> trivial_presentation() {
    HopfPresentation<K> h;
    h.kind = HopfKind::trivial;
    h.generators = {"id"};
    h.relations = {{"id = 1", {{K(1), {"id"}}, {K(-1), {}}}}};
    h.coproduct["id"] = {{K(1), {"id"}, {"id"}}};
    h.counit["id"] = K(1);
    return h;
}

} // namespace hpi
