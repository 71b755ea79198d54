#pragma once

// Bundled examples. The JSON files under catalog/ are the output of these builders;
// every builder runs the action and Hopf checks before returning.

#include <string>
#include <vector>

#include "hpi/algebra/standard.hpp"
#include "hpi/io/json.hpp"

namespace hpi::catalog {

using io::Document;
using io::HopfSpec;

namespace detail {

inline Matrix<Rational> mat(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<Vec<Rational>> r;
    for (const auto& row : rows) {
        Vec<Rational> v;
        for (auto x : row) v.emplace_back(x);
        r.push_back(std::move(v));
    }
    return Matrix<Rational>::from_rows(r, r.front().size());
}

inline Grading z2(std::vector<std::size_t> degrees) {
    return {{"0", "1"}, {{0, 1}, {1, 0}}, std::move(degrees)};
}

inline Document<Rational> checked(Document<Rational> doc) {
    require_valid_action(doc.action);
    if (auto chk = verify_hopf_module_axioms(doc.action, io::presentation(doc)); !chk)
        fail(ErrorCode::validation, doc.name + ": " + chk.failure);
    return doc;
}

inline Document<Rational> trivial_doc(std::string name, std::string provenance, StructAlgebra<Rational> a) {
    return checked({std::move(name), std::move(provenance), trivial_action(a), std::nullopt,
                    HopfSpec<Rational>{HopfKind::trivial, 0, std::nullopt, {}}});
}

inline Document<Rational> graded_doc(std::string name, std::string provenance, StructAlgebra<Rational> a, Grading gr) {
    auto act = grading_dual_action(a, gr);
    return checked({std::move(name), std::move(provenance), std::move(act), std::move(gr),
                    HopfSpec<Rational>{HopfKind::grading_dual, 0, std::nullopt, {}}});
}

} // namespace detail

inline Document<Rational> sweedler_dual_numbers() {
    auto a = standard::truncated_polynomial<Rational>(2);
    auto act = taft_action(a, detail::mat({{1, 0}, {0, -1}}), detail::mat({{0, 1}, {0, 0}}), 2, Rational(-1));
    return detail::checked({"sweedler-dual-numbers",
                            "Sweedler's 4-dimensional Hopf algebra H_4 = Taft algebra with m = 2, zeta = -1, acting on "
                            "the dual numbers F[x]/(x^2) (basis 1, x): c is the automorphism x -> -x, v is the "
                            "skew-derivation 1 -> 0, x -> 1.",
                            std::move(act), std::nullopt, HopfSpec<Rational>{HopfKind::taft, 2, Rational(-1), {}}});
}

inline Document<Rational> ut2_trivial() {
    return detail::trivial_doc("ut2-trivial", "Upper triangular 2x2 matrices (basis e11, e12, e22) with the trivial action of F.",
                               standard::upper_triangular<Rational>(2));
}

inline Document<Rational> ut3_trivial() {
    return detail::trivial_doc("ut3-trivial",
                               "Upper triangular 3x3 matrices (basis e11, e12, e13, e22, e23, e33) with the trivial action of F.",
                               standard::upper_triangular<Rational>(3));
}

inline Document<Rational> m2_trivial() {
    return detail::trivial_doc("m2-trivial", "Full matrix algebra M_2 (basis e11, e12, e21, e22) with the trivial action of F.",
                               standard::matrix_algebra<Rational>(2));
}

inline Document<Rational> m2_z2() {
    return detail::graded_doc("m2-z2",
                              "M_2 with its elementary Z_2-grading (e11, e22 even; e12, e21 odd) as an action of the dual "
                              "of the group algebra F Z_2.",
                              standard::matrix_algebra<Rational>(2), detail::z2({0, 1, 1, 0}));
}

inline Document<Rational> ut2_z2() {
    return detail::graded_doc("ut2-z2",
                              "UT_2 with the Z_2-grading e11, e22 even and e12 odd, as an action of the dual of F Z_2.",
                              standard::upper_triangular<Rational>(2), detail::z2({0, 1, 0}));
}

inline Document<Rational> swap() {
    auto act = group_action(standard::diagonal<Rational>(2),
                            std::vector<SemigroupMap<Rational>>{{"g", detail::mat({{0, 1}, {1, 0}}), false}});
    OperatorRelation<Rational> order2{"g^2 = 1", {{Rational(1), {"g", "g"}}, {Rational(-1), {}}}};
    return detail::checked({"swap", "F + F (orthogonal idempotents e1, e2) with Z_2 = <g> acting by the coordinate swap e1 <-> e2.",
                            std::move(act), std::nullopt, HopfSpec<Rational>{HopfKind::group_algebra, 0, std::nullopt, {order2}}});
}

inline std::vector<std::string> names() {
    return {"sweedler-dual-numbers", "ut2-trivial", "ut3-trivial", "m2-trivial", "m2-z2", "ut2-z2", "swap"};
}

inline Document<Rational> build(const std::string& name) {
    if (name == "sweedler-dual-numbers") return sweedler_dual_numbers();
    if (name == "ut2-trivial") return ut2_trivial();
    if (name == "ut3-trivial") return ut3_trivial();
    if (name == "m2-trivial") return m2_trivial();
    if (name == "m2-z2") return m2_z2();
    if (name == "ut2-z2") return ut2_z2();
    if (name == "swap") return swap();
    fail(ErrorCode::schema, "unknown catalog entry '" + name + "'");
}

#ifdef HPI_CATALOG_DIR
inline std::string default_dir() { return HPI_CATALOG_DIR; }
#else
inline std::string default_dir() { return "catalog"; }
#endif

inline std::string path(const std::string& name, const std::string& dir = default_dir()) {
    return dir + "/" + name + ".json";
}

} // namespace hpi::catalog
