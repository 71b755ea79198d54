#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hpi/haction/haction.hpp"

namespace hpi {

enum class HopfKind { taft, group_algebra, grading_dual, trivial };

inline std::string hopf_kind_name(HopfKind k) {
    switch (k) {
    case HopfKind::taft: return "taft";
    case HopfKind::group_algebra: return "group-algebra";
    case HopfKind::grading_dual: return "grading-dual";
    case HopfKind::trivial: return "trivial";
    }
    return "?";
}

inline HopfKind parse_hopf_kind(const std::string& s) {
    if (s == "taft") return HopfKind::taft;
    if (s == "group-algebra") return HopfKind::group_algebra;
    if (s == "grading-dual") return HopfKind::grading_dual;
    if (s == "trivial") return HopfKind::trivial;
    fail(ErrorCode::schema, "unknown Hopf presentation kind '" + s + "'");
}

/// sum coeff * rho(word) = 0
template <typename K>
struct OperatorRelation {
    std::string name;
    std::vector<std::pair<K, Word>> terms;
};

/// sum coeff * p (x) q
template <typename K>
struct CoproductTerm {
    K coeff = K(1);
    Word p, q;
};

/// Sparse element of H (x) H on basis indices.
template <typename K>
using TensorElement = std::map<std::pair<std::size_t, std::size_t>, K>;

/// Hopf data as needed for checking actions: generators, defining relations as operator
/// equations, coproduct and counit of the generators. Taft algebras additionally carry the
/// full structure table on the basis c^i v^k with coproduct, counit and antipode.
template <typename K>
struct HopfPresentation {
    HopfKind kind = HopfKind::trivial;
    std::vector<std::string> generators;
    std::vector<OperatorRelation<K>> relations;
    std::map<std::string, std::vector<CoproductTerm<K>>> coproduct;
    std::map<std::string, K> counit;  ///< generators without an entry skip the unital check

    // taft parameters and materialized tables
    int m = 0;
    std::optional<K> zeta;
    std::optional<StructAlgebra<K>> algebra;
    std::vector<std::string> basis_labels;
    std::vector<TensorElement<K>> delta;  ///< Delta(basis_i)
    Vec<K> epsilon;
    std::optional<Matrix<K>> antipode;
};

} // namespace hpi
