// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "gentle/json_io.hpp"

using namespace gentle;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Fixture {
    std::string name;
    Presentation algebra;
    EnumerationMode mode;
};

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> problems;
    void fail(const std::string& why) {
        pass = false;
        if (problems.size() < 5) problems.push_back(why);
    }
};

std::vector<Fixture> type_a_sweep() {
    std::vector<Fixture> out;
    for (int n = 1; n <= 7; ++n)
        for (const auto& o : type_a_orientations_up_to_reflection(n))
            out.push_back({"A" + std::to_string(n) + (o.empty() ? "" : "_" + orientation_word(o)), type_a(o), {}});
    return out;
}

std::vector<Fixture> atilde_sweep() {
    std::vector<Fixture> out;
    for (auto [p, q] : {std::pair{1, 1}, {2, 1}, {2, 2}, {3, 1}}) {
        const std::string path =
            std::string(GENTLE_FIXTURE_DIR) + "/atilde/Atilde_" + std::to_string(p) + "_" + std::to_string(q) + ".json";
        out.push_back({"Atilde_" + std::to_string(p) + "_" + std::to_string(q), algebra_from_json(read_json_file(path)),
                       EnumerationMode::parse("depth:8", 12)});
    }
    return out;
}

std::vector<Presentation> corpus(const std::string& dir) {
    std::vector<std::string> files;
    for (const auto& e : std::filesystem::directory_iterator(std::string(GENTLE_FIXTURE_DIR) + "/" + dir))
        files.push_back(e.path().string());
    std::sort(files.begin(), files.end());
    std::vector<Presentation> out;
    for (const auto& f : files) out.push_back(algebra_from_json(read_json_file(f)));
    return out;
}

long catalan(int n) {
    long c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

struct Sweep {
    std::vector<std::pair<std::string, VerificationReport>> reports;
    double secs = 0;
};

Sweep run_sweep(const std::vector<Fixture>& fx) {
    Sweep s;
    const auto t0 = Clock::now();
    for (const auto& f : fx) s.reports.emplace_back(f.name, verify_no_strictly_shod(f.algebra, f.mode, f.name));
    s.secs = seconds_since(t0);
    return s;
}

void report(int k, const std::string& title, Outcome& o) {
    std::cout << "criterion " << k << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title << "  " << o.detail.str()
              << "\n";
    for (const auto& p : o.problems) std::cout << "    " << p << "\n";
    std::cout.flush();
}

// Criterion 1 and 2 verdicts.
Outcome theorem_sweep(const Sweep& s, bool exhaustive) {
    Outcome o;
    long objects = 0;
    int max_gl = 0;
    for (const auto& [name, r] : s.reports) {
        objects += static_cast<long>(r.objects.size());
        max_gl = std::max(max_gl, r.max_gl_dim);
        if (!r.pass) o.fail(name + ": verdict fail, " + std::to_string(r.failures) + " failing objects");
        if (exhaustive && static_cast<long>(r.objects.size()) != catalan(r.rank + 1))
            o.fail(name + ": " + std::to_string(r.objects.size()) + " objects, expected " +
                   std::to_string(catalan(r.rank + 1)));
        for (const auto& rec : r.objects) {
            if (!rec.gl_dim || *rec.gl_dim > 2) o.fail(name + ": gl.dim above 2");
            if (!rec.gl_dim_bound || *rec.gl_dim_bound > 2) o.fail(name + ": geometric bound above 2");
            for (const auto& f : rec.failures) o.fail(name + ": " + f);
        }
    }
    o.detail << s.reports.size() << " algebras, " << objects << " silting objects, max gl.dim " << max_gl << ", "
             << static_cast<int>(s.secs) << " s";
    if (s.secs > 300) o.fail("runtime above 5 minutes");
    return o;
}

struct StringChecks {
    long strings = 0;
    Outcome embed, cover, dictionary;
};

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

void check_strings(const std::string& name, const Presentation& p, int letters, StringChecks& sc) {
    GentleModel m(p);
    const PathAlgebra& A = m.paths();
    for (const auto& w : enumerate_strings(p, letters)) {
        ++sc.strings;
        const std::string where = name + " " + w.label(p);
        try {
            const Chord c = curve_of_string(m, w);
            const Representation M = string_module(p, w);
            const TwoTermComplex pres = min_projective_presentation(A, M);

            if (!complexes_isomorphic(A, complex_of_admissible(m, embed_curve(m, c)), pres))
                sc.embed.fail(where + ": embedded complex differs from the minimal presentation");

            const CurveCover cc = projective_cover_curve(m, c);
            if (sorted(cc.cover) != sorted(pres.P0)) sc.cover.fail(where + ": cover terms differ");
            if (sorted(cc.kernel()) != sorted(pres.P1)) sc.cover.fail(where + ": kernel terms differ");
            if (!complexes_isomorphic(A, projective_presentation_curve(m, c), pres))
                sc.cover.fail(where + ": curve presentation not isomorphic to the oracle's");

            auto back = string_of_curve(m, c);
            auto Mc = module_of_curve(m, c);
            if (!back || canonical_string(*back) != canonical_string(w) || !Mc || !is_isomorphic(p, *Mc, M))
                sc.dictionary.fail(where + ": module and curve do not round trip");
        } catch (const std::exception& e) {
            sc.embed.fail(where + ": " + e.what());
        }
    }
}

}  // namespace

int main() {
    bool all = true;
    const auto a_fx = type_a_sweep();
    const auto t_fx = atilde_sweep();

    // 1
    const Sweep a_sweep = run_sweep(a_fx);
    Outcome c1 = theorem_sweep(a_sweep, true);
    report(1, "no strictly shod silted algebras over A_n, n<=7", c1);
    all = all && c1.pass;

    // 2
    const Sweep t_sweep = run_sweep(t_fx);
    Outcome c2 = theorem_sweep(t_sweep, false);
    {
        int bx = 0;
        for (const auto& [n, r] : t_sweep.reports) bx += r.bound_exceeded;
        c2.detail << ", " << bx << " exchanges beyond the string bound";
    }
    report(2, "Atilde sweep at depth 8, string bound 12", c2);
    all = all && c2.pass;

    // 3, 4 and the module/curve part of 6
    StringChecks sc;
    const auto t3 = Clock::now();
    for (const auto& f : a_fx) check_strings(f.name, f.algebra, f.algebra.num_vertices(), sc);
    for (const auto& f : t_fx) check_strings(f.name, f.algebra, 12, sc);
    const double s3 = seconds_since(t3);
    sc.embed.detail << sc.strings << " string modules, " << static_cast<int>(s3) << " s";
    report(3, "embedded curves give minimal projective presentations", sc.embed);
    sc.cover.detail << sc.strings << " string modules";
    report(4, "curve covers and kernels match the oracle", sc.cover);
    all = all && sc.embed.pass && sc.cover.pass;

    // 5
    Outcome c5;
    {
        long n = 0;
        for (const auto* s : {&a_sweep, &t_sweep})
            for (const auto& [name, r] : s->reports)
                for (std::size_t i = 0; i < r.objects.size(); ++i) {
                    ++n;
                    const auto& rec = r.objects[i];
                    const auto geo = global_dimension_geometric(rec.endo);
                    if (geo != global_dimension_linear(rec.endo) || geo != rec.gl_dim)
                        c5.fail(name + " object " + std::to_string(i) + ": formula and oracle disagree");
                }
        long hand = 0;
        for (const auto& p : corpus("corpus")) {
            ++hand;
            if (global_dimension_geometric(p) != global_dimension_linear(p))
                c5.fail("corpus algebra " + canonical_form(p) + ": formula and oracle disagree");
        }
        c5.detail << n << " endomorphism algebras and " << hand << " corpus algebras";
    }
    report(5, "global dimension formula", c5);
    all = all && c5.pass;

    // 6
    Outcome& c6 = sc.dictionary;
    {
        long algebras = 0, pairs = 0;
        std::vector<Presentation> everything;
        for (const char* dir : {"typeA", "atilde", "corpus"})
            for (auto& p : corpus(dir)) everything.push_back(std::move(p));
        for (const auto& f : a_fx) everything.push_back(f.algebra);
        for (const auto& p : everything) {
            ++algebras;
            auto comps = surface_from_algebra(p);
            auto parts = connected_components(p);
            bool ok = comps.size() == parts.size();
            for (std::size_t i = 0; ok && i < comps.size(); ++i)
                ok = isomorphic(algebra_from_surface(comps[i]), parts[i]);
            if (!ok) c6.fail("surface round trip fails for " + canonical_form(p));
        }
        std::vector<const Fixture*> fxs;
        for (const auto& f : a_fx) fxs.push_back(&f);
        for (const auto& f : t_fx) fxs.push_back(&f);
        for (const auto* f : fxs) {
            Catalogue cat(f->algebra, f->mode.string_bound);
            for (const auto& pr : enumerate_stau_tilt(cat, f->mode).pairs) {
                ++pairs;
                try {
                    if (h0_of_silting(cat, silting_of_pair(cat, pr)) != pr)
                        c6.fail(f->name + ": silting object does not return its pair");
                    if (pair_of_triangulation(cat, triangulation_of_pair(cat, pr)) != pr)
                        c6.fail(f->name + ": triangulation does not return its pair");
                } catch (const std::exception& e) {
                    c6.fail(f->name + ": " + e.what());
                }
            }
        }
        c6.detail << algebras << " algebras, " << pairs << " pairs, " << sc.strings << " strings";
    }
    report(6, "dictionary round trips", c6);
    all = all && c6.pass;

    // 7
    Outcome c7;
    {
        int worst_total = 0, worst_arc = 0;
        for (const auto* s : {&a_sweep, &t_sweep})
            for (const auto& [name, r] : s->reports)
                for (std::size_t i = 0; i < r.objects.size(); ++i) {
                    const auto& rec = r.objects[i];
                    worst_total = std::max(worst_total, rec.max_total_edges);
                    worst_arc = std::max(worst_arc, rec.max_arc_edges);
                    if (rec.max_total_edges > 4 || rec.max_arc_edges > 3 || rec.max_total_edges == 0)
                        c7.fail(name + " object " + std::to_string(i) + ": polygon bound violated or missing");
                }
        c7.detail << "max total edges " << worst_total << ", max arc edges " << worst_arc;
    }
    report(7, "polygon edge bound", c7);
    all = all && c7.pass;

    // 8
    Outcome c8;
    {
        std::map<std::string, int> forms;
        for (const auto* s : {&a_sweep, &t_sweep}) {
            const bool tilde = s == &t_sweep;
            for (const auto& [name, r] : s->reports)
                for (std::size_t i = 0; i < r.objects.size(); ++i) {
                    const auto& rec = r.objects[i];
                    const int hi = tilde ? 4 : 2;
                    if (rec.form < 1 || rec.form > hi) {
                        c8.fail(name + " object " + std::to_string(i) + ": no admissible form");
                        continue;
                    }
                    ++forms[(tilde ? "Atilde " : "A ") + std::string("(") + std::to_string(rec.form) + ")"];
                    int total = 0;
                    for (const auto& comp : connected_components(rec.endo)) total += comp.num_vertices();
                    if (total != r.rank) c8.fail(name + " object " + std::to_string(i) + ": sizes do not add up");
                }
        }
        for (const auto& [k, v] : forms) c8.detail << k << "=" << v << " ";
    }
    report(8, "classification into forms", c8);
    all = all && c8.pass;

    // 9
    Outcome c9;
    {
        int algebras = 0, bands = 0;
        std::vector<Presentation> fixtures;
        for (const auto& f : a_fx) fixtures.push_back(f.algebra);
        for (const auto& f : t_fx) fixtures.push_back(f.algebra);
        for (const auto& p : fixtures) {
            ++algebras;
            PathAlgebra A(p);
            std::vector<TwoTermComplex> s;
            for (int v = 0; v < p.num_vertices(); ++v) {
                s.push_back(TwoTermComplex::stalk(v, 0));
                s.push_back(TwoTermComplex::stalk(v, -1));
            }
            if (is_2term_silting(A, s)) c9.fail(canonical_form(p) + ": A + A[1] accepted as silting");
        }
        for (const auto& f : t_fx) {
            const Presentation& p = f.algebra;
            PathAlgebra A(p);
            StringWalk band;
            const auto type = classify_hereditary_type(p);
            const auto& cyc = type.path_order;
            for (std::size_t i = 0; i <= cyc.size(); ++i) band.vertices.push_back(cyc[i % cyc.size()]);
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                const int u = band.vertices[i], v = band.vertices[i + 1];
                for (int a = 0; a < p.num_arrows(); ++a) {
                    const auto& ar = p.arrows[a];
                    if ((ar.source == u && ar.target == v) || (ar.source == v && ar.target == u)) {
                        if (std::find(band.arrows.begin(), band.arrows.end(), a) != band.arrows.end()) continue;
                        band.arrows.push_back(a);
                        band.direct.push_back(ar.source == u);
                        break;
                    }
                }
            }
            if (!check_band(p, band)) {
                c9.fail(f.name + ": could not build the cycle band");
                continue;
            }
            for (int k = 1; k <= 2; ++k)
                for (int lambda : {1, 2, -1}) {
                    ++bands;
                    if (is_tau_rigid_pair(A, {band_module(p, band, Rational(lambda), k)}, {}))
                        c9.fail(f.name + ": band module accepted as tau-rigid");
                }
        }
        c9.detail << algebras << " algebras reject A + A[1], " << bands << " band modules rejected";
    }
    report(9, "negative controls", c9);
    all = all && c9.pass;

    std::cout << (all ? "acceptance: all criteria pass" : "acceptance: some criteria fail") << "\n";
    return all ? 0 : 1;
}
