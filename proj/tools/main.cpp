// orthocoord command-line front end. Exit 0 = pass, 1 = property violated,
// 2 = malformed input.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orthocoord/acceptance.hpp"
#include "orthocoord/error.hpp"
#include "orthocoord/json_io.hpp"
#include "orthocoord/lattice.hpp"
#include "orthocoord/models.hpp"
#include "orthocoord/rep.hpp"

using namespace orthocoord;
using io::Json;

namespace {

struct Outcome {
    Report report;
    Json result = Json::object();
};

// A report can stand in for its inputs: its "inputs" array is read back.
std::vector<Json> load_inputs(const std::vector<std::string>& files, std::size_t needed) {
    std::vector<Json> docs;
    for (const auto& f : files) docs.push_back(io::read_file(f));
    if (docs.size() == 1 && docs[0].is_object() && docs[0].contains("verdict") && docs[0].contains("inputs")) {
        Json inputs = docs[0]["inputs"];
        if (!inputs.is_array()) throw Error(ErrorKind::MalformedInput, "report 'inputs' must be an array");
        docs.assign(inputs.begin(), inputs.end());
    }
    if (docs.size() < needed)
        throw Error(ErrorKind::MalformedInput,
                    "expected " + std::to_string(needed) + " input document(s), got " + std::to_string(docs.size()));
    return docs;
}

std::string strip_kind(const Error& e) {
    std::string w = e.what();
    auto pos = w.find(": ");
    return pos == std::string::npos ? w : w.substr(pos + 2);
}

bool is_ortho_doc(const Json& j) { return j.is_object() && j.contains("perp"); }

Json modularity_json(const FiniteLattice& l) {
    auto m = is_modular(l);
    Json j{{"modular", m.modular}};
    if (m.witness) j["modularity_witness"] = *m.witness;
    return j;
}

// ---------------------------------------------------------------- handlers

Outcome check(const std::string& what, const std::vector<Json>& in) {
    Outcome out;
    const Json& doc = in[0];
    if (what == "lattice") {
        auto l = io::lattice_from_json(doc);
        out.result = modularity_json(l);
        out.result["size"] = l.size();
        out.result["height"] = height(l);
    } else if (what == "ortholattice") {
        auto l = io::ortholattice_from_json(doc);
        out.result = modularity_json(l.base());
        out.result["size"] = l.size();
        out.result["height"] = height(l.base());
    } else if (what == "ring") {
        auto ring = io::ring_from_json(doc);
        if (auto* t = std::get_if<TableRing>(&ring)) {
            out.result["size"] = t->size();
            out.result["regular"] = is_regular(*t);
            if (t->has_star()) {
                auto v = is_star_regular(*t);
                out.result["star_regular"] = v.star_regular;
                if (!v.witness.empty()) out.result["witness"] = v.witness;
            }
        } else {
            const auto& m = std::get<MatrixRing>(ring);
            if (auto c = m.cardinality()) out.result["size"] = *c;
            if (m.has_star()) {
                auto v = is_star_regular(m);
                out.result["regular"] = v.regular;
                out.result["star_regular"] = v.star_regular;
                if (!v.witness.empty()) out.result["witness"] = v.witness;
            } else {
                out.result["regular"] = true;
            }
        }
    } else {
        auto space = io::space_from_json(doc);
        out.result["dim"] = space.dim;
        out.result["field"] = space.field.name();
    }
    return out;
}

template <class L>
void verify_into(Outcome& out, const L& l, const FrameWitness<Elem>& phi) {
    auto rep = verify_frame(l, phi);
    for (auto& v : rep.violations) out.report.add("frame", v);
}

Outcome frame_cmd(const std::string& action, const std::vector<Json>& in, const std::string& kind, int n, int m) {
    Outcome out;
    const bool ortho = is_ortho_doc(in[0]);
    if (action == "verify") {
        if (in.size() < 2) throw Error(ErrorKind::MalformedInput, "frame verify needs <lattice> <frame>");
        auto phi = io::frame_from_json(in[1]);
        if (ortho) verify_into(out, io::ortholattice_from_json(in[0]), phi);
        else if (phi.kind == FrameKind::OrthoSemiframe)
            throw Error(ErrorKind::MalformedInput, "ortho-semiframes need an ortholattice (\"perp\")");
        else verify_into(out, io::lattice_from_json(in[0]), phi);
        return out;
    }
    FrameKind k = parse_frame_kind(kind);
    std::optional<FrameWitness<Elem>> found;
    if (ortho) found = search_frame(io::ortholattice_from_json(in[0]), k, n, m);
    else found = search_frame(io::lattice_from_json(in[0]), k, n, m);
    if (!found) out.report.add("frame exists", std::string(to_string(k)) + " n=" + std::to_string(n) + " m=" + std::to_string(m ? m : n));
    else out.result["frame"] = io::to_json(*found);
    return out;
}

Outcome semiframe_cmd(const std::vector<Json>& in) {
    Outcome out;
    auto l = io::ortholattice_from_json(in[0]);
    auto phi = io::frame_from_json(in[1]);
    auto sf = build_orthogonal_semiframe(l, phi);
    auto rep = verify_frame(l, sf);
    for (auto& v : rep.violations) out.report.add("semiframe", v);
    out.result["semiframe"] = io::to_json(sf);
    return out;
}

Outcome rep_cmd(const std::string& action, const std::vector<Json>& in, std::uint64_t seed) {
    Outcome out;
    auto rep = io::rep_from_json(in[0]);
    if (action == "verify") {
        out.report = verify_ring_rep(rep);
    } else if (action == "induce") {
        out.report = induce_lattice_rep(rep, seed);
    } else if (action == "ortho-check") {
        out.report = verify_ortho_rep(rep, seed);
    } else {
        const auto& b = rep.ring.blocks().front();
        FrameWitness<Subspace> sf =
            in.size() > 1 ? io::frame_from_json(in[1], b.field, b.dim)
                          : build_orthogonal_semiframe(SubspaceOrtho(b.space()),
                                                       models::canonical_frame(static_cast<int>(b.dim), b.field));
        auto rec = recover_adjoints(rep, sf, seed);
        for (auto& v : rec.preconditions.violations) out.report.add("precondition: " + v.claim, v.witness);
        for (auto& v : rec.steps.violations) out.report.add("StepFailure: " + v.claim, v.witness);
        out.result["star_representation"] = rec.star_representation();
        out.result["generators_checked"] = rec.generators_checked;
        out.result["random_checked"] = rec.random_checked;
        out.result["semiframe"] = io::to_json(sf);
    }
    return out;
}

// <subspaces>: {"field", "dim", "subspaces"?}; without "subspaces" the full
// lattice is used (finite fields only).
Outcome coord_cmd(const std::vector<Json>& in, std::uint64_t seed) {
    Outcome out;
    const Json& lat = in[0];
    if (!lat.is_object() || !lat.contains("field") || !lat.contains("dim"))
        throw Error(ErrorKind::MalformedInput, "subspace lattice needs 'field' and 'dim'");
    Field f = io::field_from_json(lat["field"]);
    auto dim = lat["dim"].get<std::size_t>();
    std::optional<std::vector<Subspace>> l;
    if (lat.contains("subspaces")) {
        l.emplace();
        for (const auto& s : lat["subspaces"]) l->push_back(io::subspace_from_json(f, dim, s));
    } else if (f.is_finite()) {
        l = enumerate_subspaces(f, dim);
    }
    auto phi = io::frame_from_json(in[1], f, dim);
    auto r0 = coordinatize(phi, f, dim);
    auto rep = verify_coordinatization(r0, l, seed);
    out.report = rep.report;
    out.result["n"] = r0.n;
    out.result["k"] = r0.k;
    out.result["basis"] = io::to_json(r0.p);
    out.result["lattice_size"] = rep.lattice_size;
    out.result["sampled"] = rep.sampled;
    return out;
}

Outcome pipeline_cmd(const std::vector<Json>& in, std::uint64_t seed) {
    Outcome out;
    Json merged = in[1];
    merged["ring"] = in[0];
    auto doc = io::eta_from_json(merged);
    auto res = ring_embedding_from_ortho_rep(doc.ring, doc.space, doc.eta, seed);
    out.report = res.report;
    out.result["star_stage_run"] = res.star_stage_run;
    if (res.iota) out.result["iota"] = io::to_json(*res.iota)["images"];
    if (res.semiframe) out.result["semiframe"] = io::to_json(*res.semiframe);
    return out;
}

Outcome fact3_cmd(const std::vector<Json>& in) {
    Outcome out;
    auto ring = io::ring_from_json(in[0]);
    TableRing t = std::holds_alternative<TableRing>(ring) ? std::get<TableRing>(ring) : to_table(std::get<MatrixRing>(ring));
    auto rep = fact3_check(t);
    for (auto& v : rep.violations) out.report.add("Con(Lat R) = Ideals(R)", v);
    if (!rep.isomorphic && rep.violations.empty()) out.report.add("Con(Lat R) = Ideals(R)", "not isomorphic");
    out.result["ideal_count"] = rep.ideal_count;
    out.result["congruence_count"] = rep.congruence_count;
    out.result["image"] = rep.image;
    return out;
}

// ---------------------------------------------------------------- models

Field field_arg(const std::string& s) { return s == "Q" ? Field::rationals() : models::field_of_order(std::stoul(s)); }

Matrix rotation3() {
    Field q = Field::rationals();
    auto s = [&](const char* t) { return q.parse(t); };
    return Matrix::from_rows(q, {{s("3/5"), s("4/5"), s("0")}, {s("-4/5"), s("3/5"), s("0")}, {s("0"), s("0"), s("1")}});
}

Json model_json(const std::string& name, int k, int n, const std::string& field) {
    Field q = Field::rationals();
    auto identity_space = [&](const Field& f, std::size_t d) { return IPSpace{f, d, Matrix::identity(f, d), Involution::Identity}; };
    if (name == "mo") return io::to_json(models::mo_n(k));
    if (name == "boolean") return io::to_json(models::boolean(n));
    if (name == "chain") return io::to_json(models::chain(n));
    if (name == "pentagon") return io::to_json(models::pentagon());
    if (name == "subspace") {
        Field f = field_arg(field);
        return io::to_json(models::subspace_ortholattice(f, n, Matrix::identity(f, n)).lattice);
    }
    if (name == "matrix-star-ring") {
        Field f = field_arg(field);
        return io::to_json(models::matrix_star_ring(f, n, Matrix::identity(f, n)));
    }
    if (name == "matrix-ring") {
        Field f = field_arg(field);
        MatrixRing r({{f, static_cast<std::size_t>(n), Matrix::identity(f, n), Involution::Identity}}, false);
        // small finite rings as full tables, everything else as a descriptor
        auto size = r.cardinality();
        if (size && *size <= 4096) return io::to_json(to_table(r));
        return io::to_json(r);
    }
    if (name == "product-ring") {
        Field g2 = Field::galois(2);
        MatrixRing a({{g2, 1, Matrix::identity(g2, 1), Involution::Identity}}, false);
        MatrixRing b({{g2, 2, Matrix::identity(g2, 2), Involution::Identity}}, false);
        return io::to_json(to_table(models::product(a, b)));
    }
    if (name == "canonical-frame") return io::to_json(models::canonical_frame(n, field_arg(field)));
    if (name == "mo2-frame") return io::to_json(models::mo2_frame());
    if (name == "identity-rep") {
        auto r = models::matrix_star_ring(q, n, Matrix::identity(q, n));
        return io::to_json(conjugation_rep(r, identity_space(q, n), Matrix::identity(q, n)));
    }
    if (name == "shear-rep") {
        auto r = models::matrix_star_ring(q, 2, Matrix::identity(q, 2));
        return io::to_json(conjugation_rep(r, identity_space(q, 2), Matrix::from_ints(q, {{1, 1}, {0, 1}})));
    }
    if (name == "rotation-rep") {
        auto r = models::matrix_star_ring(q, 3, Matrix::identity(q, 3));
        return io::to_json(conjugation_rep(r, identity_space(q, 3), rotation3()));
    }
    if (name == "rotation-eta") {
        auto r = models::matrix_star_ring(q, 3, Matrix::identity(q, 3));
        Json j = io::to_json(r, identity_space(q, 3), frame_eta_from_matrix(r, rotation3()));
        j.erase("ring");
        return j;
    }
    if (name == "gf3-eta") {
        Field g3 = Field::galois(3);
        MatrixRing r({{g3, 3, Matrix::identity(g3, 3), Involution::Identity}}, false);
        Matrix s = Matrix::from_ints(g3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
        Json j = io::to_json(r, identity_space(g3, 3), frame_eta_from_matrix(r, s));
        j.erase("ring");
        return j;
    }
    std::string known;
    for (const auto& c : models::catalog_names()) known += (known.empty() ? "" : ", ") + c;
    throw Error(ErrorKind::MalformedInput, "unknown model '" + name + "'; known: " + known);
}

// ---------------------------------------------------------------- output

void print_human(const std::string& command, const Outcome& out) {
    std::cout << command << ": " << (out.report.pass() ? "pass" : "fail") << "\n";
    for (const auto& v : out.report.violations) std::cout << "  violation: " << v.claim << (v.witness.empty() ? "" : " [" + v.witness + "]") << "\n";
    for (auto it = out.result.begin(); it != out.result.end(); ++it) {
        std::string text = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
        std::cout << "  " << it.key() << ": " << text << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact modular ortholattice, star-ring and representation toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    std::uint64_t seed = 0;
    app.add_flag("--json", json, "Machine-readable report on stdout");
    app.add_option("--seed", seed, "Seed for sampled checks")->capture_default_str();

    std::string what, action, kind = "skew", name, field = "Q";
    std::vector<std::string> files;
    int n = 2, m = 0, k = 2;

    auto* check_cmd = app.add_subcommand("check", "Validate a lattice, ortholattice, ring or space");
    check_cmd->add_option("what", what)->required()->check(CLI::IsMember({"lattice", "ortholattice", "ring", "space"}));
    check_cmd->add_option("file", files)->required();

    auto* frame = app.add_subcommand("frame", "Verify or search frames in a finite lattice");
    frame->add_option("action", action)->required()->check(CLI::IsMember({"verify", "search"}));
    frame->add_option("files", files)->required();
    frame->add_option("--kind", kind, "large-partial | skew | ortho-semiframe")->capture_default_str();
    frame->add_option("--n", n)->capture_default_str();
    frame->add_option("--m", m, "defaults to n");

    auto* semi = app.add_subcommand("semiframe", "Build an orthogonal semiframe from a skew frame");
    semi->add_option("action", action)->required()->check(CLI::IsMember({"build"}));
    semi->add_option("files", files, "<ortholattice> <frame>")->required()->expected(1, 2);

    auto* rep = app.add_subcommand("rep", "Ring, lattice and star representations");
    rep->add_option("action", action)->required()->check(CLI::IsMember({"verify", "induce", "ortho-check", "recover-star"}));
    rep->add_option("files", files, "<rep> [semiframe]")->required()->expected(1, 2);

    auto* coord = app.add_subcommand("coord", "Coordinatize a subspace lattice from a frame");
    coord->add_option("action", action)->required()->check(CLI::IsMember({"build"}));
    coord->add_option("files", files, "<subspaces> <frame>")->required()->expected(1, 2);

    auto* pipe = app.add_subcommand("pipeline", "Ring embedding from an ortholattice representation");
    pipe->add_option("action", action)->required()->check(CLI::IsMember({"theorem1"}));
    pipe->add_option("files", files, "<ring> <eta>")->required()->expected(1, 2);

    auto* f3 = app.add_subcommand("fact3", "Congruences of Lat(R) against ideals of R");
    f3->add_option("file", files)->required();

    auto* model = app.add_subcommand("model", "Emit a catalog structure as JSON");
    model->add_option("name", name)->required();
    model->add_option("--k", k)->capture_default_str();
    model->add_option("--n", n)->capture_default_str();
    model->add_option("--field", field, "Q or a prime power")->capture_default_str();

    auto* demo = app.add_subcommand("demo", "Run the acceptance suite");
    demo->add_option("action", action)->required()->check(CLI::IsMember({"all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    std::vector<std::string> command(argv + 1, argv + argc);
    std::string command_text;
    for (auto& c : command) command_text += (command_text.empty() ? "" : " ") + c;

    try {
        if (*model) {
            std::cout << model_json(name, k, n, field).dump(2) << "\n";
            return 0;
        }
        if (*demo) {
            auto start = std::chrono::steady_clock::now();
            Json items = Json::array();
            auto results = acceptance::run_all(seed, [&](const acceptance::CriterionResult& r) {
                if (!json) std::cout << acceptance::summary_line(r) << std::endl;
            });
            bool ok = true;
            for (const auto& r : results) {
                ok = ok && r.pass();
                Json item{{"criterion", r.id}, {"title", r.title}, {"verdict", r.pass() ? "pass" : "fail"},
                          {"seconds", r.seconds}, {"limit_seconds", r.limit_seconds}, {"detail", r.detail}};
                item["violations"] = io::to_json(r.report)["violations"];
                items.push_back(std::move(item));
            }
            double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            if (json)
                std::cout << Json{{"command", command}, {"seed", seed}, {"verdict", ok ? "pass" : "fail"}, {"criteria", items},
                                  {"timing_seconds", total}}
                                 .dump(2)
                          << "\n";
            else
                std::cout << "demo all: " << (ok ? "pass" : "fail") << " (" << total << " s)\n";
            return ok ? 0 : 1;
        }

        std::vector<Json> inputs;
        Outcome out;
        auto start = std::chrono::steady_clock::now();
        try {
            if (*check_cmd) {
                inputs = load_inputs(files, 1);
                out = check(what, inputs);
            } else if (*frame) {
                inputs = load_inputs(files, action == "verify" ? 2 : 1);
                out = frame_cmd(action, inputs, kind, n, m);
            } else if (*semi) {
                inputs = load_inputs(files, 2);
                out = semiframe_cmd(inputs);
            } else if (*rep) {
                inputs = load_inputs(files, 1);
                out = rep_cmd(action, inputs, seed);
            } else if (*coord) {
                inputs = load_inputs(files, 2);
                out = coord_cmd(inputs, seed);
            } else if (*pipe) {
                inputs = load_inputs(files, 2);
                out = pipeline_cmd(inputs, seed);
            } else if (*f3) {
                inputs = load_inputs(files, 1);
                out = fact3_cmd(inputs);
            }
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::MalformedInput) throw;
            // a structure that parses but breaks a contract is a violation, not bad input
            out.report.add(to_string(e.kind()), strip_kind(e));
        } catch (const nlohmann::json::exception& e) {
            throw Error(ErrorKind::MalformedInput, e.what());
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (json) {
            Json report{{"command", command}, {"seed", seed}, {"inputs", inputs}};
            Json verdict = io::to_json(out.report);
            report["verdict"] = verdict["verdict"];
            report["violations"] = verdict["violations"];
            report["result"] = out.result;
            report["timing_ms"] = ms;
            std::cout << report.dump(2) << "\n";
        } else {
            print_human(command_text, out);
        }
        return out.report.pass() ? 0 : 1;
    } catch (const Error& e) {
        if (json) std::cout << Json{{"command", command}, {"verdict", "error"}, {"error", e.what()}}.dump(2) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::MalformedInput ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
