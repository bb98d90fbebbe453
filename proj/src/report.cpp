#include "gentle/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace gentle {

namespace {

Json opt(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

void require_report(const Json& report) {
    auto errs = validate_schema(report_schema(), report);
    if (!errs.empty()) {
        const auto colon = errs.front().find(": ");
        throw SchemaError(errs.front().substr(0, colon), "report: " + errs.front().substr(colon + 2));
    }
}

std::string shapes(const Json& obj) {
    // form_tag is "(k) A2 x ~A3"; keep the component part
    const std::string t = obj.value("form_tag", std::string());
    const auto sp = t.find(' ');
    return sp == std::string::npos ? std::string("-") : t.substr(sp + 1);
}

}  // namespace

Json report_to_json(const VerificationReport& r) {
    Json j = Json::object();
    j["schema"] = "gentle-silt/report@1";
    j["algebra"] = r.algebra_id;
    j["type"] = r.type_label;
    j["rank"] = r.rank;
    j["mode"] = r.mode.label();
    j["string_bound"] = r.mode.string_bound;
    j["counts"] = {{"objects", r.objects.size()},
                   {"failures", r.failures},
                   {"bound_exceeded", r.bound_exceeded},
                   {"exchange_edges", r.edges.size()}};
    j["forms"] = Json::object();
    for (const auto& [k, v] : r.form_counts) j["forms"][k] = v;
    j["max_gl_dim"] = r.max_gl_dim;
    j["verdict"] = r.pass ? "pass" : "fail";
    j["reproducer"] = nullptr;
    for (std::size_t i = 0; i < r.objects.size(); ++i) {
        const auto& o = r.objects[i];
        const bool bad = !o.failures.empty() || (o.gl_dim && *o.gl_dim > 2) || !o.gl_dim;
        if (!bad) continue;
        j["reproducer"] = {{"object", i},
                           {"summands", o.summands},
                           {"failures", o.failures},
                           {"command", "gentle-silt verify " + r.algebra_id + " --mode " + r.mode.label() +
                                           " --string-bound " + std::to_string(r.mode.string_bound)}};
        break;
    }
    j["objects"] = Json::array();
    for (std::size_t i = 0; i < r.objects.size(); ++i) {
        const auto& o = r.objects[i];
        j["objects"].push_back({{"index", i},
                                {"summands", o.summands},
                                {"endo", algebra_to_json(o.endo)},
                                {"gl_dim", opt(o.gl_dim)},
                                {"gl_dim_bound", opt(o.gl_dim_bound)},
                                {"gl_dim_geometric", opt(o.gl_dim_geometric)},
                                {"max_polygon_edges", o.max_total_edges},
                                {"max_arc_edges", o.max_arc_edges},
                                {"form", o.form},
                                {"form_tag", o.form_tag},
                                {"failures", o.failures}});
    }
    j["exchange"] = Json::array();
    for (const auto& e : r.edges) j["exchange"].push_back({e.from, e.to});
    return j;
}

std::string classify_table(const Json& report) {
    require_report(report);
    std::ostringstream out;
    out << "algebra " << report["algebra"].get<std::string>() << "  type " << report["type"].get<std::string>()
        << "  mode " << report["mode"].get<std::string>() << "  verdict " << report["verdict"].get<std::string>()
        << "\n";
    out << std::left << std::setw(7) << "object" << std::setw(6) << "form" << std::setw(8) << "gl.dim"
        << std::setw(7) << "bound" << std::setw(7) << "edges" << "components\n";
    for (const auto& o : report["objects"]) {
        auto num = [](const Json& v) { return v.is_null() ? std::string("inf") : std::to_string(v.get<int>()); };
        const int form = o["form"].get<int>();
        out << std::left << std::setw(7) << o["index"].get<int>()
            << std::setw(6) << (form ? "(" + std::to_string(form) + ")" : std::string("-"))
            << std::setw(8) << num(o["gl_dim"]) << std::setw(7) << num(o["gl_dim_bound"]) << std::setw(7)
            << o["max_polygon_edges"].get<int>() << shapes(o) << "\n";
    }
    out << "forms:";
    for (auto it = report["forms"].begin(); it != report["forms"].end(); ++it)
        out << " " << it.key() << "=" << it.value().get<int>();
    out << "\nobjects " << report["counts"]["objects"].get<int>() << ", failures "
        << report["counts"]["failures"].get<int>() << ", max gl.dim " << report["max_gl_dim"].get<int>() << "\n";
    return out.str();
}

std::string quiver_dot(const Presentation& p, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << quote(name) << " {\n  rankdir=LR;\n";
    for (const auto& v : p.vertices) out << "  " << quote(v) << ";\n";
    for (int a = 0; a < p.num_arrows(); ++a) {
        const auto& ar = p.arrows[a];
        std::string label = ar.id;
        if (ar.grade != 0) label += " [" + std::to_string(ar.grade) + "]";
        out << "  " << quote(p.vertices[ar.source]) << " -> " << quote(p.vertices[ar.target])
            << " [label=" << quote(label) << "];\n";
    }
    // DOT has no edge-to-edge lines, so relations go in as comments
    for (auto [a, b] : p.relations) out << "  // relation " << p.arrows[a].id << " " << p.arrows[b].id << "\n";
    out << "}\n";
    return out.str();
}

std::string exchange_dot(const Json& report) {
    require_report(report);
    std::ostringstream out;
    out << "graph exchange {\n";
    for (const auto& o : report["objects"]) {
        std::string label;
        for (const auto& s : o["summands"]) label += (label.empty() ? "" : " + ") + s.get<std::string>();
        out << "  " << o["index"].get<int>() << " [label=" << quote(label) << "];\n";
    }
    for (const auto& e : report["exchange"]) out << "  " << e[0].get<int>() << " -- " << e[1].get<int>() << ";\n";
    out << "}\n";
    return out.str();
}

std::string endo_dot(const Json& report, int k) {
    require_report(report);
    const auto& objs = report["objects"];
    if (k < 0 || k >= static_cast<int>(objs.size()))
        throw InputError("object " + std::to_string(k) + " out of range (report has " + std::to_string(objs.size()) +
                         ")");
    return quiver_dot(algebra_from_json(objs[k]["endo"]), "End" + std::to_string(k));
}

}  // namespace gentle
