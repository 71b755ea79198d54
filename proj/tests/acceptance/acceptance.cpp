// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "../oracle.hpp"
#include "hpi/hopfzoo/catalog.hpp"

using namespace hpi;
using Q = Rational;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream log;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            log << "    failed: " << what << "\n";
        }
    }
    void note(const std::string& s) { log << "    " << s << "\n"; }
};

io::Document<Q> load(const std::string& name) {
    return io::read_document<Q>(io::parse_json(io::read_file(catalog::path(name))));
}

Vec<Q> vec(std::initializer_list<long> xs) {
    Vec<Q> v;
    for (auto x : xs) v.emplace_back(x);
    return v;
}

std::string str(const Vec<Q>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + ")";
}

// ------------------------------------------------------------------ 1

void taft_example(Check& c) {
    auto doc = load("sweedler-dual-numbers");
    const auto& act = doc.action;
    const auto& a = act.algebra();
    // Hand expansion on the basis 1, x with c(1) = 1, c(x) = -x, v(1) = 0, v(x) = 1:
    //   c(ab) = c(a) c(b),  v(ab) = c(a) v(b) + v(a) b
    //   (1,1): c -> 1,  v -> 0
    //   (1,x): c -> -x, v -> c(1) v(x) + v(1) x = 1
    //   (x,1): c -> -x, v -> c(x) v(1) + v(x) 1 = 1
    //   (x,x): c -> (-x)(-x) = 0, v -> c(x) v(x) + v(x) x = -x + x = 0
    struct Instance {
        const char* g;
        std::size_t a, b;
        Vec<Q> value;
    };
    std::vector<Instance> hand{{"c", 0, 0, vec({1, 0})}, {"c", 0, 1, vec({0, -1})}, {"c", 1, 0, vec({0, -1})},
                               {"c", 1, 1, vec({0, 0})}, {"v", 0, 0, vec({0, 0})},  {"v", 0, 1, vec({1, 0})},
                               {"v", 1, 0, vec({1, 0})}, {"v", 1, 1, vec({0, 0})}};
    for (const auto& h : hand) {
        const auto& g = act.generator(h.g);
        auto ea = unit_vec<Q>(2, h.a), eb = unit_vec<Q>(2, h.b);
        auto lhs = g.matrix.apply(a.mul(ea, eb));
        auto rhs = expansion_value(act, g, ea, eb);
        c.expect(lhs == h.value, std::string(h.g) + "(e" + std::to_string(h.a) + " e" + std::to_string(h.b) + ") = " + str(lhs));
        c.expect(rhs == h.value, std::string("expansion of ") + h.g + " at (" + std::to_string(h.a) + ", " +
                                     std::to_string(h.b) + ") = " + str(rhs));
    }
    c.expect(!verify_action(act).has_value(), "verify_action");
    // relations by hand: c^2 = 1, v^2 = 0, vc = -cv
    auto pc = act.generator("c").matrix, pv = act.generator("v").matrix;
    c.expect(pc * pc == Matrix<Q>::identity(2), "c^2 = 1");
    c.expect((pv * pv).is_zero_matrix(), "v^2 = 0");
    c.expect(pv * pc == Q(-1) * (pc * pv), "vc = -cv");
    auto chk = verify_hopf_module_axioms(act, io::presentation(doc));
    c.expect(chk.ok, "Hopf relation checks: " + chk.failure);

    auto j = jacobson_radical(a);
    c.expect(j == span(std::vector<Vec<Q>>{vec({0, 1})}, 2), "J(A) = span{x}");
    auto jh = h_radical(act);
    c.expect(jh.is_zero_space(), "J^H(A) = 0");
    c.expect(is_h_simple(act), "is_h_simple");
    auto kappa = kappa_embedding(act);
    auto blocks = h_simple_decompose(act);
    auto ec = exponent_candidate(act, kappa, blocks);
    c.expect(ec.d == 2 && ec.d == a.dim(), "exponent_candidate d = " + std::to_string(ec.d));
    c.note("J dim " + std::to_string(j.dim()) + ", J^H dim " + std::to_string(jh.dim()) + ", d = " + std::to_string(ec.d));
}

// ------------------------------------------------------------------ 2

void trivial_regression(Check& c) {
    std::vector<std::pair<std::string, StructAlgebra<Q>>> algebras{{"F", standard::diagonal<Q>(1)},
                                                                   {"F+F", standard::diagonal<Q>(2)},
                                                                   {"UT2", standard::upper_triangular<Q>(2)},
                                                                   {"M2", standard::matrix_algebra<Q>(2)}};
    for (const auto& [name, a] : algebras) {
        auto act = trivial_action(a);
        std::string row = name + ":";
        for (std::size_t n = 1; n <= 4; ++n) {
            auto fast = codimension(act, n);
            auto slow = testing::brute_force_codimension(act, n);
            c.expect(fast == slow, name + " n=" + std::to_string(n) + ": " + std::to_string(fast) + " vs oracle " +
                                       std::to_string(slow));
            row += " " + std::to_string(fast);
        }
        c.note(row);
    }
    auto f = trivial_action(standard::diagonal<Q>(1));
    for (std::size_t n = 1; n <= 6; ++n) c.expect(codimension(f, n) == 1, "c_" + std::to_string(n) + "(F) = 1");
    for (std::size_t k : {3, 4}) {
        auto nil = trivial_action(standard::strictly_upper<Q>(k));
        auto p = is_nilpotent(nil.algebra(), Subspace<Q>::full(nil.algebra().dim()));
        c.expect(p.nilpotent && p.index == k, "nilpotency index of N_" + std::to_string(k));
        for (std::size_t n = p.index; n <= p.index + 1; ++n)
            c.expect(codimension(nil, n) == 0, "N_" + std::to_string(k) + " c_" + std::to_string(n) + " = 0");
        c.expect(codimension(nil, p.index - 1) > 0, "N_" + std::to_string(k) + " nonzero below its index");
    }
}

// ------------------------------------------------------------------ 3

void exponent_checks(Check& c) {
    auto timed = [&](const std::string& what, const std::function<void()>& f) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.expect(s < 1.0, what + " took " + std::to_string(s) + " s");
    };
    timed("UT2", [&] {
        auto r = decompose(load("ut2-trivial").action);
        c.expect(r.d == 2, "UT2 d = " + std::to_string(r.d));
        c.expect(r.witness_chain && r.witness_chain->contains(vec({0, 1, 0})), "UT2 witness chain contains e12");
        c.note("UT2: d = 2, witness chain " + (r.witness_chain ? std::to_string(r.witness_chain->dim()) : "-") + "-dim through e12");
    });
    timed("F+F", [&] {
        auto r = decompose(trivial_action(standard::diagonal<Q>(2)));
        c.expect(r.d == 1 && r.blocks.size() == 2, "F+F trivial: d = " + std::to_string(r.d));
    });
    timed("swap", [&] {
        auto r = decompose(load("swap").action);
        c.expect(r.blocks.size() == 1 && r.d == 2, "swap: blocks " + std::to_string(r.blocks.size()) + ", d = " + std::to_string(r.d));
    });
    for (const auto& name : catalog::names()) {
        auto doc = load(name);
        if (!is_h_simple(doc.action)) continue;
        timed(name, [&] {
            auto r = decompose(doc.action);
            c.expect(r.d == doc.action.algebra().dim(), name + " is H-simple but d = " + std::to_string(r.d));
            c.note(name + ": H-simple, d = dim A = " + std::to_string(r.d));
        });
    }
}

// ------------------------------------------------------------------ 4

void graded_identity(Check& c) {
    for (const auto& name : {"m2-z2", "ut2-z2"}) {
        auto doc = load(name);
        std::string row = std::string(name) + ":";
        for (std::size_t n = 1; n <= 3; ++n) {
            auto g = graded_codimension(doc.action.algebra(), *doc.grading, n);
            auto d = codimension(grading_dual_action(doc.action.algebra(), *doc.grading), n);
            c.expect(g == d, std::string(name) + " n=" + std::to_string(n) + ": graded " + std::to_string(g) + " dual " + std::to_string(d));
            row += " " + std::to_string(g);
        }
        c.note(row);
    }
}

// ------------------------------------------------------------------ 5

void kappa_contract(Check& c) {
    for (const auto& name : catalog::names()) {
        auto doc = load(name);
        const auto& a = doc.action.algebra();
        auto k = kappa_embedding(doc.action);
        const auto& q = k.quotient;
        const std::size_t qd = q.lift_indices.size();
        auto pi = q.projection().matrix;
        c.expect(pi * k.kappa.matrix == Matrix<Q>::identity(qd), name + ": pi kappa != id");
        for (std::size_t i = 0; i < qd; ++i) {
            auto abar = unit_vec<Q>(qd, i);
            for (const auto& b : k.b.basis()) {
                auto ab = q.algebra.mul(abar, b), ba = q.algebra.mul(b, abar);
                c.expect(k(ab) == a.mul(k(abar), k(b)), name + ": kappa(ab) != kappa(a) kappa(b)");
                c.expect(k(ba) == a.mul(k(b), k(abar)), name + ": kappa(ba) != kappa(b) kappa(a)");
            }
        }
        c.note(name + ": dim A/J^H = " + std::to_string(qd) + ", dim B = " + std::to_string(k.b.dim()));
    }
}

// ------------------------------------------------------------------ 6

void radical_invariants(Check& c) {
    std::vector<std::pair<std::string, HAction<Q>>> acts;
    for (const auto& name : catalog::names()) acts.emplace_back(name, load(name).action);
    acts.emplace_back("N3-trivial", trivial_action(standard::strictly_upper<Q>(3)));
    acts.emplace_back("F[x]/(x^3)-trivial", trivial_action(standard::truncated_polynomial<Q>(3)));
    for (const auto& [name, act] : acts) {
        const auto& a = act.algebra();
        auto j = jacobson_radical(a);
        auto jh = h_radical(act);
        c.expect(j.contains(jh), name + ": J^H not inside J");
        c.expect(is_nilpotent(a, jh).nilpotent, name + ": J^H not nilpotent");
        c.expect(is_h_stable(act, jh), name + ": J^H not H-stable");
        c.expect(is_two_sided_ideal(a, jh), name + ": J^H not an ideal");
        if (!jh.is_full()) {
            auto q = quotient_algebra(a, jh);
            c.expect(h_radical(quotient_action(act, q)).is_zero_space(), name + ": J^H(A/J^H) != 0");
        }
        c.note(name + ": dim J = " + std::to_string(j.dim()) + ", dim J^H = " + std::to_string(jh.dim()));
    }
    auto sw = load("sweedler-dual-numbers").action;
    auto j = jacobson_radical(sw.algebra());
    auto jh = h_radical(sw);
    c.expect(j.contains(jh) && jh.dim() < j.dim(), "Taft example: J^H is not a proper subspace of J");
}

// ------------------------------------------------------------------ 7

void property_star(Check& c) {
    auto f = trivial_action(standard::diagonal<Q>(1));
    for (std::size_t k = 1; k <= 2; ++k) {
        auto w = property_star_witness(f, k, 0);
        c.expect(w.has_value(), "F: no witness for k = " + std::to_string(k));
        if (w) c.note("F, k = " + std::to_string(k) + ": " + w->generator.str() + ", n1 = " + std::to_string(w->n1));
    }
    auto sw = load("sweedler-dual-numbers").action;
    auto w = property_star_witness(sw, 1, 2);
    c.expect(w.has_value(), "Taft example: no witness for k = 1");
    if (w) {
        c.note("Taft, k = 1: alternation of " + w->generator.str() + " (" + std::to_string(w->f.terms().size()) +
               " terms), n1 = " + std::to_string(w->n1) + ", value " + str(w->value));
        c.expect(!is_h_identity(w->f, sw), "Taft witness is an identity");
    }

    std::mt19937 rng(2024);
    const std::size_t h = sw.effective_image().dim();
    std::uniform_int_distribution<int> coeff(-3, 3), small(0, 4);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 3 + static_cast<std::size_t>(t % 2);
        HPolynomial<Q> p(n);
        for (int term = 0; term < 3; ++term) {
            std::vector<std::size_t> s(n), l(n);
            std::iota(s.begin(), s.end(), 0);
            std::shuffle(s.begin(), s.end(), rng);
            for (auto& x : l) x = static_cast<std::size_t>(rng() % h);
            p.add(make_monomial(s, l), Q(coeff(rng)));
        }
        std::vector<std::size_t> set(n);
        std::iota(set.begin(), set.end(), 0);
        std::shuffle(set.begin(), set.end(), rng);
        set.resize(2 + static_cast<std::size_t>(t % 2));
        auto alt = alternate(p, set);
        long fact = set.size() == 2 ? 2 : 6;
        c.expect(alternate(alt, set) == Q(fact) * alt, "factorial idempotence, sample " + std::to_string(t));
        std::vector<Vec<Q>> pts(n);
        for (auto& x : pts) x = vec({small(rng) - 2, small(rng) - 2});
        pts[set[1]] = pts[set[0]];
        c.expect(is_zero_vec(evaluate(alt, sw, pts)), "repeat-kill, sample " + std::to_string(t));
    }
}

// ------------------------------------------------------------------ 8

void codimension_vs_d(Check& c) {
    for (const auto& name : catalog::names()) {
        auto act = load(name).action;
        auto r = exponent_report(act, 5);
        if (r.nilpotent) continue;
        const std::size_t d = *r.d, dim = act.algebra().dim();
        for (std::size_t n = 1; n <= 4; ++n) {
            auto slow = testing::brute_force_codimension(act, n);
            c.expect(r.codim[n - 1] == slow, name + " n=" + std::to_string(n) + ": " + std::to_string(r.codim[n - 1]) +
                                                 " vs oracle " + std::to_string(slow));
        }
        std::string roots, within = "yes";
        bool increasing = true;
        for (std::size_t i = 0; i < r.n.size(); ++i) {
            char buf[16];
            std::snprintf(buf, sizeof buf, " %.4f", r.roots[i]);
            roots += buf;
            // exact form of root <= d (dim A)^(2/n)
            double bound = std::pow(static_cast<double>(d), static_cast<double>(r.n[i])) * static_cast<double>(dim * dim);
            if (static_cast<double>(r.codim[i]) > bound) within = "no";
            if (i && r.roots[i] <= r.roots[i - 1]) increasing = false;
        }
        c.note(name + ": d = " + std::to_string(d) + ", roots" + roots + "; within d (dim A)^(2/n): " + within +
               "; increasing: " + (increasing ? "yes" : "no"));
    }
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        double budget_s;
        void (*run)(Check&);
    };
    const Criterion criteria[] = {
        {1, "Taft worked example", 1, taft_example},
        {2, "trivial-action regression against brute force", 60, trivial_regression},
        {3, "exponent formula checks", 60, exponent_checks},
        {4, "graded / dual-action identity", 300, graded_identity},
        {5, "kappa contract on the catalog", 60, kappa_contract},
        {6, "radical invariants", 60, radical_invariants},
        {7, "alternating witnesses and alternation invariants", 600, property_star},
        {8, "codimension vs d on the catalog", 600, codimension_vs_d},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Check c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        c.expect(s < cr.budget_s, "runtime " + std::to_string(s) + " s over budget");
        std::cout << c.log.str();
        char line[160];
        std::snprintf(line, sizeof line, "[%s] criterion %d: %s (%.2f s)", c.ok ? "PASS" : "FAIL", cr.id, cr.title, s);
        std::cout << line << std::endl;
        if (!c.ok) ++failed;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
    return failed ? 1 : 0;
}
