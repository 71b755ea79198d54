// hpi: command-line front end over the hpi library.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hpi/hopfzoo/catalog.hpp"
#include "hpi/io/json.hpp"

using namespace hpi;
using io::Json;

namespace {

struct Job {
    std::string command;
    std::string input;
    std::size_t n_max = 5, n = 1, k = 1, n0 = 0;
    unsigned threads = 1;
    double row_cap = 2e6, wall_seconds = 600;
    bool allow_repeats = false;
    bool build = false;
    std::string out, format = "text";
};

struct Output {
    Json json;
    std::string text;
};

std::string load_input(const std::string& input) {
    const std::string scheme = "catalog:";
    if (input.rfind(scheme, 0) == 0) {
        auto name = input.substr(scheme.size());
        bool known = false;
        for (const auto& n : catalog::names()) known = known || n == name;
        require(known, ErrorCode::schema, "unknown catalog entry '" + name + "'");
        return io::read_file(catalog::path(name));
    }
    return io::read_file(input);
}

template <typename K>
Json basis_json(const Subspace<K>& s) {
    Json b = Json::array();
    for (const auto& v : s.basis()) b.push_back(io::write_vector(v));
    return Json{{"dim", s.dim()}, {"basis", std::move(b)}};
}

template <typename K>
std::string basis_text(const Subspace<K>& s) {
    std::string t = "dim " + std::to_string(s.dim());
    if (s.dim() == 0) return t;
    t += ", basis";
    for (const auto& v : s.basis()) {
        t += " (";
        for (std::size_t i = 0; i < v.size(); ++i) t += (i ? ", " : "") + v[i].str();
        t += ")";
    }
    return t;
}

CodimOptions codim_options(const Job& job) {
    return {job.row_cap, job.wall_seconds, job.threads};
}

template <typename K>
Output run_check(const io::Document<K>& doc) {
    if (auto v = verify_action(doc.action))
        fail(ErrorCode::validation, "expansion axiom fails for generator '" + v->generator + "' at basis pair (" +
                                        std::to_string(v->a) + ", " + std::to_string(v->b) + ")");
    Output o;
    o.json = {{"command", "check"}, {"name", doc.name}, {"action_valid", true}};
    if (doc.hopf) {
        auto chk = verify_hopf_module_axioms(doc.action, io::presentation(doc));
        if (!chk) fail(ErrorCode::validation, "Hopf check failed: " + chk.failure);
        o.json["hopf"] = hopf_kind_name(doc.hopf->kind);
        o.json["hopf_relations_hold"] = true;
        o.text = "action valid; Hopf relations hold\n";
    } else {
        o.json["hopf"] = nullptr;
        o.text = "action valid; no Hopf presentation to check\n";
    }
    o.json["message"] = o.text.substr(0, o.text.size() - 1);
    return o;
}

template <typename K>
Output run_radical(const io::Document<K>& doc) {
    auto j = jacobson_radical(doc.action.algebra());
    auto jh = h_radical(doc.action);
    Output o;
    o.json = {{"command", "radical"}, {"name", doc.name}, {"dim", doc.action.algebra().dim()},
              {"radical", basis_json(j)}, {"h_radical", basis_json(jh)}, {"h_radical_strictly_smaller", jh.dim() < j.dim()}};
    o.text = "J(A):   " + basis_text(j) + "\nJ^H(A): " + basis_text(jh) + "\n";
    return o;
}

template <typename K>
Output run_decompose(const io::Document<K>& doc, const Job& job) {
    auto r = decompose(doc.action, {job.allow_repeats});
    Output o;
    Json j{{"command", "decompose"}, {"name", doc.name}, {"dim", doc.action.algebra().dim()},
           {"radical", basis_json(r.radical)}, {"h_radical", basis_json(r.h_radical)}, {"nilpotent", r.nilpotent}};
    std::ostringstream t;
    t << "J(A):   " << basis_text(r.radical) << "\nJ^H(A): " << basis_text(r.h_radical) << "\n";
    if (r.nilpotent) {
        j["d"] = nullptr;
        t << "A is nilpotent; d undefined\n";
    } else {
        const auto& kp = *r.kappa;
        j["quotient_dim"] = kp.quotient.lift_indices.size();
        j["b0"] = basis_json(kp.b0);
        j["n"] = basis_json(kp.n);
        j["kappa"] = io::write_matrix(kp.kappa.matrix);
        Json blocks = Json::array();
        for (const auto& b : r.blocks)
            blocks.push_back({{"support", basis_json(b.support)}, {"unit", io::write_vector(b.unit)}});
        j["blocks"] = std::move(blocks);
        j["d"] = r.d;
        j["witness"] = r.witness;
        j["witness_chain"] = r.witness_chain ? basis_json(*r.witness_chain) : Json(nullptr);
        t << "dim A/J^H = " << kp.quotient.lift_indices.size() << "\n";
        t << "B0: " << basis_text(kp.b0) << "\nN:  " << basis_text(kp.n) << "\n";
        for (std::size_t i = 0; i < r.blocks.size(); ++i) t << "B" << i << ": " << basis_text(r.blocks[i].support) << "\n";
        t << "d = " << r.d << ", witness blocks:";
        for (auto w : r.witness) t << " B" << w;
        t << "\n";
    }
    o.json = std::move(j);
    o.text = t.str();
    return o;
}

template <typename K>
Output run_exponent(const io::Document<K>& doc, const Job& job) {
    auto r = exponent_report(doc.action, job.n_max, codim_options(job));
    Output o;
    o.json = io::exponent_report_json(r);
    o.json["name"] = doc.name;
    o.text = io::exponent_report_text(r);
    return o;
}

template <typename K>
Output run_codim(const io::Document<K>& doc, const Job& job) {
    auto r = codimension_stats(doc.action, job.n, codim_options(job));
    Output o;
    o.json = {{"command", "codim"}, {"name", doc.name}, {"n", job.n}, {"codim", r.value},
              {"rows", r.rows}, {"columns", r.columns}, {"blocks", r.blocks}};
    o.text = "c_" + std::to_string(job.n) + " = " + std::to_string(r.value) + "\n";
    return o;
}

template <typename K>
Output run_codim_graded(const io::Document<K>& doc, const Job& job) {
    require(doc.grading.has_value(), ErrorCode::precondition, "codim-graded needs a document with a grading");
    auto graded = graded_codimension(doc.action.algebra(), *doc.grading, job.n, codim_options(job));
    auto dual = codimension(grading_dual_action(doc.action.algebra(), *doc.grading), job.n, codim_options(job));
    Output o;
    o.json = {{"command", "codim-graded"}, {"name", doc.name}, {"n", job.n}, {"graded", graded}, {"dual", dual}, {"equal", graded == dual}};
    o.text = "graded c_" + std::to_string(job.n) + " = " + std::to_string(graded) + "\ndual-action c_" +
             std::to_string(job.n) + " = " + std::to_string(dual) + "\n" + (graded == dual ? "equal\n" : "DIFFERENT\n");
    return o;
}

template <typename K>
Output run_witness(const io::Document<K>& doc, const Job& job) {
    auto w = property_star_witness(doc.action, job.k, job.n0, codim_options(job));
    Output o;
    Json j{{"command", "witness"}, {"name", doc.name}, {"k", job.k}, {"n0", job.n0}, {"found", w.has_value()}};
    if (w) {
        j["l"] = w->l;
        j["n1"] = w->n1;
        j["generator"] = w->generator.str();
        j["terms"] = w->f.terms().size();
        j["z"] = w->z;
        j["value"] = io::write_vector(w->value);
        o.text = "found: alternation of " + w->generator.str() + " (" + std::to_string(w->f.terms().size()) +
                 " terms), n1 = " + std::to_string(w->n1) + "\n";
    } else {
        o.text = "no witness with n1 <= " + std::to_string(job.n0) + "\n";
    }
    o.json = std::move(j);
    return o;
}

template <typename K>
Output run_document(const Json& input, const Job& job) {
    auto doc = io::read_document<K>(input);
    if (job.command == "check") return run_check(doc);
    if (job.command == "radical") return run_radical(doc);
    if (job.command == "decompose") return run_decompose(doc, job);
    if (job.command == "exponent") return run_exponent(doc, job);
    if (job.command == "codim") return run_codim(doc, job);
    if (job.command == "codim-graded") return run_codim_graded(doc, job);
    if (job.command == "witness") return run_witness(doc, job);
    fail(ErrorCode::internal, "unknown command " + job.command);
}

/// Catalog output is raw document text, not a report.
std::string run_catalog(const Job& job) {
    if (job.input.empty()) {
        std::string s;
        for (const auto& n : catalog::names()) s += n + "\n";
        return s;
    }
    if (job.build) return io::dump(io::write_document(catalog::build(job.input)));
    return load_input("catalog:" + job.input);
}

void emit(const Job& job, const std::string& text) {
    if (job.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(job.out, std::ios::binary);
    require(f.good(), ErrorCode::precondition, "cannot write '" + job.out + "'");
    f << text;
}

int execute(const Job& job) {
    if (job.command == "catalog") {
        emit(job, run_catalog(job));
        return 0;
    }
    auto input = io::parse_json(load_input(job.input));
    auto field = io::peek_field(input);
    Output o = field.order == 1 ? run_document<Rational>(input, job) : run_document<Cyclotomic>(input, job);
    emit(job, job.format == "json" ? io::dump(o.json) : o.text);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hpi: polynomial H-identities of finite-dimensional algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Job job;
    app.add_option("--threads", job.threads, "worker threads for codimension runs")->check(CLI::Range(1, 256));
    app.add_option("--row-cap", job.row_cap, "refuse codimension runs above this many streamed rows");
    app.add_option("--wall-seconds", job.wall_seconds, "wall-clock budget for one codimension run");
    app.add_option("--out", job.out, "write the report to this file");
    app.add_option("--format", job.format, "report format")->check(CLI::IsMember({"json", "text"}));

    auto doc_command = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("input", job.input, "document path or catalog:NAME")->required();
        return sub;
    };
    doc_command("check", "verify the expansion axiom and the Hopf relations");
    doc_command("radical", "Jacobson radical J(A) and H-radical J^H(A)");
    doc_command("decompose", "full decomposition: radicals, kappa, H-simple blocks, d")
        ->add_flag("--allow-repeats", job.allow_repeats, "let the exponent search reuse blocks");
    doc_command("exponent", "d and the codimension table up to --n-max")
        ->add_option("--n-max", job.n_max, "largest n")->check(CLI::Range(1, 12));
    doc_command("codim", "H-codimension c_n")->add_option("--n", job.n, "degree")->check(CLI::Range(1, 12));
    doc_command("codim-graded", "graded codimension against the dual action")
        ->add_option("--n", job.n, "degree")->check(CLI::Range(1, 12));
    auto* wit = doc_command("witness", "search for an alternating non-identity");
    wit->add_option("--k", job.k, "number of alternating pairs")->check(CLI::Range(1, 8));
    wit->add_option("--n0", job.n0, "largest number of extra variables")->check(CLI::Range(0, 8));
    auto* cat = app.add_subcommand("catalog", "list bundled examples or print one");
    cat->add_option("name", job.input, "example to print");
    cat->add_flag("--build", job.build, "print the document as built in code instead of the stored file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    job.command = app.get_subcommands().front()->get_name();
    try {
        return execute(job);
    } catch (const Error& e) {
        Json err{{"error", {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return error_exit_status(e.code());
    } catch (const std::exception& e) {
        Json err{{"error", {{"code", "internal"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return error_exit_status(ErrorCode::internal);
    }
}
