// gentle-silt: command-line front end for the gentle/silting pipeline.
// Exit codes: 0 success, 1 cross-check or theorem failure, 2 input error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gentle/json_io.hpp"
#include "gentle/report.hpp"

using namespace gentle;

namespace {

struct Options {
    std::string algebra, curve, report, input;
    std::string mode = "exhaustive";
    int string_bound = 12;
    std::string out, dot;
    int jobs = 0;
    int object = -1;
};

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) std::cout << text;
    else write_file_atomic(out, text);
}

std::string algebra_name(const Json& j, const std::string& path) {
    if (j.contains("name")) return j["name"].get<std::string>();
    return std::filesystem::path(path).stem().string();
}

Presentation load_algebra(const std::string& path, std::string* name = nullptr) {
    Json j = read_json_file(path);
    Presentation p = algebra_from_json(j);
    if (name) *name = algebra_name(j, path);
    return p;
}

Presentation load_gentle(const std::string& path, std::string* name = nullptr) {
    Presentation p = load_algebra(path, name);
    auto d = validate_gentle(p);
    if (!d.ok())
        throw InputError(path + ": not gentle: " + d.violations.front().axiom + " at " + d.violations.front().witness);
    return p;
}

int jobs_of(const Options& o) {
    if (o.jobs > 0) return o.jobs;
    if (const char* env = std::getenv("GENTLE_SILT_JOBS")) {
        try {
            const int k = std::stoi(env);
            if (k > 0) return k;
        } catch (const std::exception&) {
        }
        throw InputError("GENTLE_SILT_JOBS must be a positive integer");
    }
    return 1;
}

EnumerationMode mode_for(const Options& o, const Catalogue& cat) {
    EnumerationMode m = EnumerationMode::parse(o.mode, o.string_bound);
    if (m.exhaustive && cat.type().kind == HereditaryType::Kind::ATilde)
        throw InputError("exhaustive mode needs a type A algebra; " + cat.type().label() +
                         " has infinitely many pairs, use --mode depth:<d>");
    return m;
}

int cmd_check(const Options& o) {
    Presentation p = load_algebra(o.algebra);
    auto d = validate_gentle(p);
    for (const auto& v : d.violations) std::cout << "violation " << v.axiom << ": " << v.witness << "\n";
    if (!d.ok()) return 1;
    std::cout << "gentle: " << p.num_vertices() << " vertices, " << p.num_arrows() << " arrows, "
              << p.relations.size() << " relations\n";
    if (p.relations.empty() && is_connected(p)) {
        try {
            std::cout << "hereditary type: " << classify_hereditary_type(p).label() << "\n";
        } catch (const PreconditionError& e) {
            std::cout << "hereditary type: none (" << e.what() << ")\n";
        }
    }
    return 0;
}

int cmd_surface(const Options& o) {
    Presentation p = load_gentle(o.algebra);
    auto comps = surface_from_algebra(p);
    emit(dump(comps.size() == 1 ? surface_to_json(comps.front()) : surfaces_to_json(comps)), o.out);
    return 0;
}

int cmd_enumerate(const Options& o) {
    std::string name;
    Presentation p = load_gentle(o.algebra, &name);
    Catalogue cat(p, o.string_bound);
    const EnumerationMode m = mode_for(o, cat);
    Enumeration en = enumerate_stau_tilt(cat, m);
    emit(dump(enumeration_to_json(cat, m, en, name)), o.out);
    std::cerr << en.pairs.size() << " pairs, " << en.edges.size() << " exchange edges\n";
    return 0;
}

int cmd_embed(const Options& o) {
    Presentation p = load_gentle(o.algebra);
    if (!is_connected(p)) throw InputError(o.algebra + ": embed needs a connected algebra");
    GentleModel m(p);
    Chord c = curve_from_json(m, read_json_file(o.curve));
    AdmissibleCurve ac = embed_curve(m, c);
    emit(dump(complex_to_json(m.paths(), complex_of_admissible(m, ac))), o.out);
    return 0;
}

int cmd_verify(const Options& o) {
    std::string name;
    Presentation p = load_gentle(o.algebra, &name);
    EnumerationMode m;
    {
        Catalogue probe(p, 1);
        m = mode_for(o, probe);
    }
    VerificationReport r = verify_no_strictly_shod(p, m, name, jobs_of(o));
    Json j = report_to_json(r);
    if (auto errs = validate_schema(report_schema(), j); !errs.empty())
        throw ConsistencyError("report fails its own schema: " + errs.front());
    if (!o.out.empty()) write_file_atomic(o.out, dump(j));
    if (!o.dot.empty()) write_file_atomic(o.dot, exchange_dot(j));
    std::cout << name << " " << r.type_label << " " << m.label() << ": " << r.objects.size() << " objects, "
              << r.failures << " failures, max gl.dim " << r.max_gl_dim << ", verdict " << (r.pass ? "pass" : "fail")
              << "\n";
    return r.pass ? 0 : 1;
}

int cmd_classify(const Options& o) {
    emit(classify_table(read_json_file(o.report)), o.out);
    return 0;
}

int cmd_export_dot(const Options& o) {
    Json j = read_json_file(o.input);
    if (j.contains("schema")) {
        emit(o.object >= 0 ? endo_dot(j, o.object) : exchange_dot(j), o.out);
    } else {
        if (o.object >= 0) throw InputError("--object applies to reports only");
        emit(quiver_dot(algebra_from_json(j), algebra_name(j, o.input)), o.out);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Silting and gentle algebra toolkit"};
    app.require_subcommand(1);
    Options o;

    auto add_mode = [&](CLI::App* sc) {
        sc->add_option("--mode", o.mode, "exhaustive or depth:<d>")->capture_default_str();
        sc->add_option("--string-bound", o.string_bound, "maximal string length in letters")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    auto* check = app.add_subcommand("check", "validate the gentle axioms");
    check->add_option("algebra", o.algebra)->required();

    auto* surface = app.add_subcommand("surface", "marked surface of an algebra");
    surface->add_option("algebra", o.algebra)->required();
    surface->add_option("--out", o.out);

    auto* enumerate = app.add_subcommand("enumerate", "support tau-tilting pairs");
    enumerate->add_option("algebra", o.algebra)->required();
    add_mode(enumerate);
    enumerate->add_option("--out", o.out);

    auto* embed = app.add_subcommand("embed", "two-term complex of a curve's rotation");
    embed->add_option("algebra", o.algebra)->required();
    embed->add_option("curve", o.curve)->required();
    embed->add_option("--out", o.out);

    auto* verify = app.add_subcommand("verify", "run the silted-algebra pipeline");
    verify->add_option("algebra", o.algebra)->required();
    add_mode(verify);
    verify->add_option("--out", o.out, "report JSON");
    verify->add_option("--dot", o.dot, "exchange graph DOT");
    verify->add_option("--jobs", o.jobs, "worker threads (GENTLE_SILT_JOBS)")->check(CLI::PositiveNumber);

    auto* classify = app.add_subcommand("classify", "form table of a report");
    classify->add_option("report", o.report)->required();
    classify->add_option("--out", o.out);

    auto* export_dot = app.add_subcommand("export-dot", "DOT of an algebra quiver, exchange graph or endo quiver");
    export_dot->add_option("input", o.input, "algebra or report JSON")->required();
    export_dot->add_option("--object", o.object, "endo quiver of this report object");
    export_dot->add_option("--out", o.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*check) return cmd_check(o);
        if (*surface) return cmd_surface(o);
        if (*enumerate) return cmd_enumerate(o);
        if (*embed) return cmd_embed(o);
        if (*verify) return cmd_verify(o);
        if (*classify) return cmd_classify(o);
        if (*export_dot) return cmd_export_dot(o);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const BoundExceeded& e) {
        std::cerr << "bound exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
