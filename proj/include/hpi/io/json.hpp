#pragma once

#include <array>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hpi/haction/decompose.hpp"
#include "hpi/haction/hopf_axioms.hpp"
#include "hpi/hopfzoo/zoo.hpp"
#include "hpi/pi/witness.hpp"

namespace hpi::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* document_schema = "hpi/1";
inline constexpr const char* report_schema = "hpi-report/1";

/// Which Hopf presentation the document's action is checked against.
template <typename K>
struct HopfSpec {
    HopfKind kind = HopfKind::trivial;
    int m = 0;                               ///< taft
    std::optional<K> zeta;                   ///< taft
    std::vector<OperatorRelation<K>> relations;  ///< group-algebra

    friend bool operator==(const HopfSpec& a, const HopfSpec& b) {
        if (a.kind != b.kind || a.m != b.m || a.zeta != b.zeta || a.relations.size() != b.relations.size()) return false;
        for (std::size_t i = 0; i < a.relations.size(); ++i)
            if (a.relations[i].name != b.relations[i].name || a.relations[i].terms != b.relations[i].terms) return false;
        return true;
    }
};

template <typename K>
struct Document {
    std::string name;
    std::string provenance;
    HAction<K> action;
    std::optional<Grading> grading;
    std::optional<HopfSpec<K>> hopf;

    friend bool operator==(const Document& a, const Document& b) {
        if (a.name != b.name || a.provenance != b.provenance || a.grading != b.grading || a.hopf != b.hopf) return false;
        if (!(a.action.algebra() == b.action.algebra())) return false;
        const auto& ga = a.action.generators();
        const auto& gb = b.action.generators();
        if (ga.size() != gb.size()) return false;
        for (std::size_t i = 0; i < ga.size(); ++i)
            if (ga[i].label != gb[i].label || ga[i].matrix != gb[i].matrix || ga[i].expansion != gb[i].expansion) return false;
        return true;
    }
};

/// Builds the presentation a document's action is checked against; the grading-dual kind
/// takes its data from the document's grading.
template <typename K>
HopfPresentation<K> presentation(const Document<K>& doc) {
    require(doc.hopf.has_value(), ErrorCode::precondition, "document has no Hopf presentation");
    const auto& h = *doc.hopf;
    switch (h.kind) {
    case HopfKind::taft: return taft(h.m, *h.zeta);
    case HopfKind::grading_dual:
        require(doc.grading.has_value(), ErrorCode::schema, "grading-dual presentation needs a grading");
        return grading_dual_presentation<K>(*doc.grading);
    case HopfKind::group_algebra: {
        std::vector<std::string> labels;
        for (const auto& g : doc.action.generators()) labels.push_back(g.label);
        return group_presentation(labels, h.relations);
    }
    case HopfKind::trivial: return trivial_presentation<K>();
    }
    fail(ErrorCode::internal, "unreachable Hopf kind");
}

// ---------------------------------------------------------------- reading

namespace detail {

inline const Json& field(const Json& j, const char* key, const std::string& where) {
    require(j.is_object(), ErrorCode::schema, where + " must be an object");
    auto it = j.find(key);
    require(it != j.end(), ErrorCode::schema, where + " is missing \"" + key + "\"");
    return *it;
}

inline std::string get_string(const Json& j, const std::string& where) {
    require(j.is_string(), ErrorCode::schema, where + " must be a string");
    return j.get<std::string>();
}

inline std::size_t get_index(const Json& j, const std::string& where) {
    require(j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0), ErrorCode::schema,
            where + " must be a non-negative integer");
    return j.get<std::size_t>();
}

inline const Json& get_array(const Json& j, const std::string& where, std::optional<std::size_t> len = std::nullopt) {
    require(j.is_array(), ErrorCode::schema, where + " must be an array");
    if (len) require(j.size() == *len, ErrorCode::schema, where + " must have " + std::to_string(*len) + " entries");
    return j;
}

template <typename K>
K scalar(const Json& j, const FieldSpec& f, const std::string& where) {
    auto s = get_string(j, where);
    try {
        return ScalarTraits<K>::parse(s, f);
    } catch (const Error& e) {
        fail(ErrorCode::schema, where + ": " + e.what());
    }
}

template <typename K>
Vec<K> vector(const Json& j, std::size_t n, const FieldSpec& f, const std::string& where) {
    get_array(j, where, n);
    Vec<K> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(scalar<K>(j[i], f, where + "[" + std::to_string(i) + "]"));
    return v;
}

template <typename K>
Matrix<K> matrix(const Json& j, std::size_t n, const FieldSpec& f, const std::string& where) {
    get_array(j, where, n);
    std::vector<Vec<K>> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(vector<K>(j[i], n, f, where + "[" + std::to_string(i) + "]"));
    return Matrix<K>::from_rows(rows, n);
}

inline Word word(const Json& j, const std::string& where) {
    get_array(j, where);
    Word w;
    for (std::size_t i = 0; i < j.size(); ++i) w.push_back(get_string(j[i], where + "[" + std::to_string(i) + "]"));
    return w;
}

} // namespace detail

inline FieldSpec read_field(const Json& j) {
    auto type = detail::get_string(detail::field(j, "type", "algebra.field"), "algebra.field.type");
    if (type == "Q") return {};
    require(type == "Q(zeta)", ErrorCode::schema, "unknown field type '" + type + "'");
    auto m = detail::get_index(detail::field(j, "order", "algebra.field"), "algebra.field.order");
    require(m >= 1 && m <= 1000, ErrorCode::schema, "cyclotomic order out of range");
    return {static_cast<int>(m)};
}

/// Field declared by a document, read without building anything else.
inline FieldSpec peek_field(const Json& doc) {
    return read_field(detail::field(detail::field(doc, "algebra", "document"), "field", "algebra"));
}

template <typename K>
StructAlgebra<K> read_algebra(const Json& j) {
    auto f = read_field(detail::field(j, "field", "algebra"));
    const std::size_t n = detail::get_index(detail::field(j, "dim", "algebra"), "algebra.dim");
    require(n >= 1, ErrorCode::schema, "algebra.dim must be positive");
    const auto& t = detail::get_array(detail::field(j, "table", "algebra"), "algebra.table", n);
    BilinearMap<K> table(n, n, n);
    for (std::size_t a = 0; a < n; ++a) {
        detail::get_array(t[a], "algebra.table[" + std::to_string(a) + "]", n);
        for (std::size_t b = 0; b < n; ++b) {
            auto where = "algebra.table[" + std::to_string(a) + "][" + std::to_string(b) + "]";
            auto v = detail::vector<K>(t[a][b], n, f, where);
            for (std::size_t k = 0; k < n; ++k) table.at(a, b, k) = v[k];
        }
    }
    std::optional<Vec<K>> unit;
    const auto& u = detail::field(j, "unit", "algebra");
    if (!u.is_null()) unit = detail::vector<K>(u, n, f, "algebra.unit");
    return StructAlgebra<K>(f, std::move(table), std::move(unit));
}

template <typename K>
std::vector<Generator<K>> read_generators(const Json& j, std::size_t n, const FieldSpec& f) {
    const auto& gs = detail::get_array(detail::field(j, "generators", "action"), "action.generators");
    std::vector<Generator<K>> out;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        auto where = "action.generators[" + std::to_string(i) + "]";
        Generator<K> g;
        g.label = detail::get_string(detail::field(gs[i], "label", where), where + ".label");
        g.matrix = detail::matrix<K>(detail::field(gs[i], "matrix", where), n, f, where + ".matrix");
        const auto& ex = detail::get_array(detail::field(gs[i], "expansion", where), where + ".expansion");
        for (std::size_t t = 0; t < ex.size(); ++t) {
            auto tw = where + ".expansion[" + std::to_string(t) + "]";
            require(ex[t].is_object(), ErrorCode::schema, tw + " must be an object");
            ExpansionTerm<K> term;
            if (ex[t].contains("coeff")) term.coeff = detail::scalar<K>(ex[t]["coeff"], f, tw + ".coeff");
            for (auto [key, slot] : {std::pair{"p", &term.p}, {"q", &term.q}, {"r", &term.r}, {"s", &term.s}})
                if (ex[t].contains(key)) *slot = detail::word(ex[t][key], tw + "." + key);
            for (const auto& [key, _] : ex[t].items())
                require(key == "coeff" || key == "p" || key == "q" || key == "r" || key == "s", ErrorCode::schema,
                        tw + " has unknown key \"" + key + "\"");
            g.expansion.push_back(std::move(term));
        }
        out.push_back(std::move(g));
    }
    return out;
}

inline Grading read_grading(const Json& j, std::size_t n) {
    Grading gr;
    const auto& el = detail::get_array(detail::field(j, "elements", "grading"), "grading.elements");
    for (std::size_t i = 0; i < el.size(); ++i) gr.elements.push_back(detail::get_string(el[i], "grading.elements[]"));
    const auto& pr = detail::get_array(detail::field(j, "product", "grading"), "grading.product", el.size());
    for (std::size_t i = 0; i < el.size(); ++i) {
        detail::get_array(pr[i], "grading.product[]", el.size());
        std::vector<std::optional<std::size_t>> row;
        for (const auto& x : pr[i]) {
            if (x.is_null()) row.emplace_back();
            else row.emplace_back(detail::get_index(x, "grading.product entry"));
        }
        gr.product.push_back(std::move(row));
    }
    const auto& dg = detail::get_array(detail::field(j, "degrees", "grading"), "grading.degrees", n);
    for (const auto& x : dg) gr.degrees.push_back(detail::get_index(x, "grading.degrees entry"));
    return gr;
}

template <typename K>
HopfSpec<K> read_hopf(const Json& j, const FieldSpec& f) {
    HopfSpec<K> h;
    h.kind = parse_hopf_kind(detail::get_string(detail::field(j, "kind", "hopf"), "hopf.kind"));
    if (h.kind == HopfKind::taft) {
        h.m = static_cast<int>(detail::get_index(detail::field(j, "m", "hopf"), "hopf.m"));
        h.zeta = detail::scalar<K>(detail::field(j, "zeta", "hopf"), f, "hopf.zeta");
    }
    if (h.kind == HopfKind::group_algebra && j.contains("relations")) {
        const auto& rs = detail::get_array(j["relations"], "hopf.relations");
        for (const auto& r : rs) {
            OperatorRelation<K> rel;
            rel.name = detail::get_string(detail::field(r, "name", "hopf relation"), "hopf relation name");
            for (const auto& t : detail::get_array(detail::field(r, "terms", "hopf relation"), "hopf relation terms"))
                rel.terms.emplace_back(detail::scalar<K>(detail::field(t, "coeff", "relation term"), f, "relation coeff"),
                                       detail::word(detail::field(t, "word", "relation term"), "relation word"));
            h.relations.push_back(std::move(rel));
        }
    }
    return h;
}

/// Parses and validates a document; the action must satisfy its expansion axiom.
template <typename K>
Document<K> read_document(const Json& j) {
    require(j.is_object(), ErrorCode::schema, "document must be a JSON object");
    auto schema = detail::get_string(detail::field(j, "schema", "document"), "schema");
    require(schema == document_schema, ErrorCode::schema,
            "unsupported schema '" + schema + "', expected '" + document_schema + "'");
    Document<K> doc;
    doc.name = detail::get_string(detail::field(j, "name", "document"), "name");
    doc.provenance = j.contains("provenance") ? detail::get_string(j["provenance"], "provenance") : "";
    auto alg = read_algebra<K>(detail::field(j, "algebra", "document"));
    auto f = alg.field();
    const std::size_t n = alg.dim();
    doc.action = HAction<K>(std::move(alg), read_generators<K>(detail::field(j, "action", "document"), n, f));
    if (j.contains("grading")) {
        doc.grading = read_grading(j["grading"], n);
        validate_grading(doc.action.algebra(), *doc.grading);
    }
    if (j.contains("hopf")) doc.hopf = read_hopf<K>(j["hopf"], f);
    return doc;
}

inline Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail(ErrorCode::schema, std::string("malformed JSON: ") + e.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(in.good(), ErrorCode::schema, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---------------------------------------------------------------- writing

inline Json write_field(const FieldSpec& f) {
    Json j;
    j["type"] = f.order <= 1 ? "Q" : "Q(zeta)";
    j["order"] = f.order;
    return j;
}

template <typename K>
Json write_vector(const Vec<K>& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(x.str());
    return j;
}

template <typename K>
Json write_matrix(const Matrix<K>& m) {
    Json j = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
        j.push_back(std::move(row));
    }
    return j;
}

template <typename K>
Json write_algebra(const StructAlgebra<K>& a) {
    Json j;
    j["field"] = write_field(a.field());
    j["dim"] = a.dim();
    j["unit"] = a.unit() ? write_vector(*a.unit()) : Json(nullptr);
    Json t = Json::array();
    for (std::size_t x = 0; x < a.dim(); ++x) {
        Json row = Json::array();
        for (std::size_t y = 0; y < a.dim(); ++y) row.push_back(write_vector(a.basis_product(x, y)));
        t.push_back(std::move(row));
    }
    j["table"] = std::move(t);
    return j;
}

inline Json write_word(const Word& w) {
    Json j = Json::array();
    for (const auto& l : w) j.push_back(l);
    return j;
}

template <typename K>
Json write_action(const HAction<K>& act) {
    Json gs = Json::array();
    for (const auto& g : act.generators()) {
        Json jg;
        jg["label"] = g.label;
        jg["matrix"] = write_matrix(g.matrix);
        Json ex = Json::array();
        for (const auto& t : g.expansion) {
            Json jt = Json::object();
            if (t.coeff != K(1)) jt["coeff"] = t.coeff.str();
            if (t.p) jt["p"] = write_word(*t.p), jt["q"] = write_word(*t.q);
            if (t.r) jt["r"] = write_word(*t.r), jt["s"] = write_word(*t.s);
            ex.push_back(std::move(jt));
        }
        jg["expansion"] = std::move(ex);
        gs.push_back(std::move(jg));
    }
    Json j;
    j["generators"] = std::move(gs);
    return j;
}

inline Json write_grading(const Grading& gr) {
    Json j;
    j["elements"] = gr.elements;
    Json pr = Json::array();
    for (const auto& row : gr.product) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(x ? Json(*x) : Json(nullptr));
        pr.push_back(std::move(r));
    }
    j["product"] = std::move(pr);
    j["degrees"] = gr.degrees;
    return j;
}

template <typename K>
Json write_hopf(const HopfSpec<K>& h) {
    Json j;
    j["kind"] = hopf_kind_name(h.kind);
    if (h.kind == HopfKind::taft) {
        j["m"] = h.m;
        j["zeta"] = h.zeta->str();
    }
    if (h.kind == HopfKind::group_algebra) {
        Json rs = Json::array();
        for (const auto& r : h.relations) {
            Json terms = Json::array();
            for (const auto& [c, w] : r.terms) terms.push_back(Json{{"coeff", c.str()}, {"word", write_word(w)}});
            rs.push_back(Json{{"name", r.name}, {"terms", std::move(terms)}});
        }
        j["relations"] = std::move(rs);
    }
    return j;
}

template <typename K>
Json write_document(const Document<K>& doc) {
    Json j;
    j["schema"] = document_schema;
    j["name"] = doc.name;
    j["provenance"] = doc.provenance;
    j["algebra"] = write_algebra(doc.action.algebra());
    j["action"] = write_action(doc.action);
    if (doc.grading) j["grading"] = write_grading(*doc.grading);
    if (doc.hopf) j["hopf"] = write_hopf(*doc.hopf);
    return j;
}

/// Canonical text form: two-space indent, trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- reports

template <typename K>
Json exponent_report_json(const ExponentReport<K>& r) {
    Json j;
    j["schema"] = report_schema;
    j["n"] = r.n;
    j["codim"] = r.codim;
    j["roots"] = r.roots;
    j["d"] = r.d ? Json(*r.d) : Json(nullptr);
    j["witness_chain"] = r.witness_chain;
    j["nilpotent"] = r.nilpotent;
    j["block_dims"] = r.block_dims;
    return j;
}

inline std::string format_root(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

/// Aligned table: n, c_n, c_n^(1/n).
template <typename K>
std::string exponent_report_text(const ExponentReport<K>& r) {
    std::vector<std::array<std::string, 3>> rows{{"n", "c_n", "c_n^(1/n)"}};
    for (std::size_t i = 0; i < r.n.size(); ++i)
        rows.push_back({std::to_string(r.n[i]), std::to_string(r.codim[i]), format_root(r.roots[i])});
    std::array<std::size_t, 3> w{};
    for (const auto& row : rows)
        for (std::size_t c = 0; c < 3; ++c) w[c] = std::max(w[c], row[c].size());
    std::ostringstream os;
    os << "d = " << (r.d ? std::to_string(*r.d) : std::string("none (nilpotent)")) << "\n";
    if (!r.witness_chain.empty()) {
        os << "witness chain:";
        for (auto b : r.witness_chain) os << " B" << b;
        os << "\n";
    }
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < 3; ++c) os << (c ? "  " : "") << std::setw(static_cast<int>(w[c])) << row[c];
        os << "\n";
    }
    return os.str();
}

} // namespace hpi::io
