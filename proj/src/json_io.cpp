#include "gentle/json_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace gentle {

SchemaError::SchemaError(const std::string& pointer, const std::string& message)
    : InputError((pointer.empty() ? "/" : pointer) + ": " + message), pointer_(pointer) {}

namespace {

std::string escape_token(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '~') out += "~0";
        else if (c == '/') out += "~1";
        else out += c;
    }
    return out;
}

bool has_type(const Json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "integer") return v.is_number_integer();
    if (t == "number") return v.is_number();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

void validate_at(const Json& schema, const Json& v, const std::string& ptr, std::vector<std::string>& errs) {
    auto err = [&](const std::string& m) { errs.push_back((ptr.empty() ? "/" : ptr) + ": " + m); };
    if (schema.contains("type")) {
        const Json& t = schema["type"];
        bool ok = false;
        std::string names;
        if (t.is_array()) {
            for (const auto& x : t) {
                ok = ok || has_type(v, x.get<std::string>());
                names += (names.empty() ? "" : "|") + x.get<std::string>();
            }
        } else {
            ok = has_type(v, t.get<std::string>());
            names = t.get<std::string>();
        }
        if (!ok) {
            err("expected " + names);
            return;
        }
    }
    if (schema.contains("const") && v != schema["const"]) err("expected " + schema["const"].dump());
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& x : schema["enum"]) found = found || x == v;
        if (!found) err("value " + v.dump() + " not in " + schema["enum"].dump());
    }
    if (schema.contains("minimum") && v.is_number() && v.get<double>() < schema["minimum"].get<double>())
        err("below minimum " + schema["minimum"].dump());
    if (v.is_object()) {
        if (schema.contains("required"))
            for (const auto& k : schema["required"])
                if (!v.contains(k.get<std::string>())) err("missing required key '" + k.get<std::string>() + "'");
        const Json* props = schema.contains("properties") ? &schema["properties"] : nullptr;
        for (auto it = v.begin(); it != v.end(); ++it) {
            const std::string child = ptr + "/" + escape_token(it.key());
            if (props && props->contains(it.key())) {
                validate_at((*props)[it.key()], it.value(), child, errs);
            } else if (schema.contains("additionalProperties")) {
                const Json& ap = schema["additionalProperties"];
                if (ap.is_boolean() && !ap.get<bool>()) errs.push_back(child + ": unexpected key");
                else if (ap.is_object()) validate_at(ap, it.value(), child, errs);
            }
        }
    }
    if (v.is_array()) {
        if (schema.contains("minItems") && v.size() < schema["minItems"].get<std::size_t>())
            err("needs at least " + schema["minItems"].dump() + " items");
        if (schema.contains("maxItems") && v.size() > schema["maxItems"].get<std::size_t>())
            err("allows at most " + schema["maxItems"].dump() + " items");
        if (schema.contains("items"))
            for (std::size_t i = 0; i < v.size(); ++i)
                validate_at(schema["items"], v[i], ptr + "/" + std::to_string(i), errs);
    }
}

void require_valid(const Json& schema, const Json& doc, const std::string& what) {
    auto errs = validate_schema(schema, doc);
    if (errs.empty()) return;
    const std::string& first = errs.front();
    const auto colon = first.find(": ");
    throw SchemaError(first.substr(0, colon) == "/" ? "" : first.substr(0, colon),
                      what + ": " + first.substr(colon + 2));
}

Json string_list() { return Json{{"type", "array"}, {"items", {{"type", "string"}}}}; }

Json endpoint_schema() {
    return Json{{"type", "object"},
                {"required", {"kind", "point"}},
                {"properties",
                 {{"kind", {{"type", "string"}, {"enum", {"marked", "extra"}}}}, {"point", {{"type", "string"}}}}},
                {"additionalProperties", false}};
}

std::string closed_id(const Surface& s, int comp, int index) { return "*" + s.point_ids[s.boundary[comp][index]]; }

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

std::vector<std::string> validate_schema(const Json& schema, const Json& doc) {
    std::vector<std::string> errs;
    validate_at(schema, doc, "", errs);
    return errs;
}

const Json& algebra_schema() {
    static const Json s = {
        {"$schema", "https://json-schema.org/draft/2020-12/schema"},
        {"title", "gentle algebra presentation"},
        {"type", "object"},
        {"required", {"vertices", "arrows"}},
        {"properties",
         {{"name", {{"type", "string"}}},
          {"vertices", string_list()},
          {"arrows",
           {{"type", "array"},
            {"items",
             {{"type", "object"},
              {"required", {"id", "source", "target"}},
              {"properties",
               {{"id", {{"type", "string"}}},
                {"source", {{"type", "string"}}},
                {"target", {{"type", "string"}}},
                {"grade", {{"type", "integer"}}}}},
              {"additionalProperties", false}}}}},
          {"relations",
           {{"type", "array"},
            {"items", {{"type", "array"}, {"items", {{"type", "string"}}}, {"minItems", 2}, {"maxItems", 2}}}}}}},
        {"additionalProperties", false}};
    return s;
}

const Json& curve_schema() {
    static const Json s = {{"$schema", "https://json-schema.org/draft/2020-12/schema"},
                           {"title", "permissible curve"},
                           {"type", "object"},
                           {"required", {"crossings"}},
                           {"properties",
                            {{"start", endpoint_schema()},
                             {"end", endpoint_schema()},
                             {"crossings", string_list()},
                             {"arrows", string_list()},
                             {"winding", {{"type", "integer"}}}}},
                           {"additionalProperties", false}};
    return s;
}

const Json& complex_schema() {
    static const Json term = {{"type", "object"},
                              {"required", {"path", "coef"}},
                              {"properties", {{"path", string_list()}, {"coef", {{"type", {"string", "integer"}}}}}},
                              {"additionalProperties", false}};
    static const Json s = {
        {"$schema", "https://json-schema.org/draft/2020-12/schema"},
        {"title", "two-term complex of projectives"},
        {"type", "object"},
        {"required", {"P1", "P0", "d"}},
        {"properties",
         {{"P1", string_list()},
          {"P0", string_list()},
          {"d", {{"type", "array"}, {"items", {{"type", "array"}, {"items", {{"type", "array"}, {"items", term}}}}}}}}},
        {"additionalProperties", false}};
    return s;
}

const Json& report_schema() {
    static const Json opt_int = {{"type", {"integer", "null"}}};
    static const Json object = {
        {"type", "object"},
        {"required",
         {"index", "summands", "endo", "gl_dim", "gl_dim_bound", "gl_dim_geometric", "max_polygon_edges",
          "max_arc_edges", "form", "failures"}},
        {"properties",
         {{"index", {{"type", "integer"}, {"minimum", 0}}},
          {"summands", string_list()},
          {"endo", algebra_schema()},
          {"gl_dim", opt_int},
          {"gl_dim_bound", opt_int},
          {"gl_dim_geometric", opt_int},
          {"max_polygon_edges", {{"type", "integer"}}},
          {"max_arc_edges", {{"type", "integer"}}},
          {"form", {{"type", "integer"}, {"minimum", 0}}},
          {"form_tag", {{"type", "string"}}},
          {"failures", string_list()}}},
        {"additionalProperties", false}};
    static const Json s = {
        {"$schema", "https://json-schema.org/draft/2020-12/schema"},
        {"title", "gentle-silt verification report"},
        {"type", "object"},
        {"required", {"schema", "algebra", "type", "rank", "mode", "string_bound", "counts", "forms", "max_gl_dim",
                      "verdict", "objects", "exchange"}},
        {"properties",
         {{"schema", {{"const", "gentle-silt/report@1"}}},
          {"algebra", {{"type", "string"}}},
          {"type", {{"type", "string"}}},
          {"rank", {{"type", "integer"}, {"minimum", 1}}},
          {"mode", {{"type", "string"}}},
          {"string_bound", {{"type", "integer"}, {"minimum", 1}}},
          {"counts",
           {{"type", "object"},
            {"required", {"objects", "failures", "bound_exceeded"}},
            {"additionalProperties", {{"type", "integer"}, {"minimum", 0}}}}},
          {"forms", {{"type", "object"}, {"additionalProperties", {{"type", "integer"}}}}},
          {"max_gl_dim", {{"type", "integer"}}},
          {"verdict", {{"enum", {"pass", "fail"}}}},
          {"reproducer", {{"type", {"object", "null"}}}},
          {"objects", {{"type", "array"}, {"items", object}}},
          {"exchange",
           {{"type", "array"},
            {"items", {{"type", "array"}, {"items", {{"type", "integer"}}}, {"minItems", 2}, {"maxItems", 2}}}}}}},
        {"additionalProperties", false}};
    return s;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": invalid JSON: " + e.what());
    }
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw InputError("write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------------------------

Json algebra_to_json(const Presentation& p, const std::string& name) {
    Json j = Json::object();
    if (!name.empty()) j["name"] = name;
    j["vertices"] = p.vertices;
    j["arrows"] = Json::array();
    for (const auto& a : p.arrows) {
        Json x = {{"id", a.id}, {"source", p.vertices[a.source]}, {"target", p.vertices[a.target]}};
        if (a.grade != 0) x["grade"] = a.grade;
        j["arrows"].push_back(x);
    }
    j["relations"] = Json::array();
    for (auto [a, b] : p.relations) j["relations"].push_back({p.arrows[a].id, p.arrows[b].id});
    return j;
}

Presentation algebra_from_json(const Json& j) {
    require_valid(algebra_schema(), j, "algebra");
    Presentation p;
    const auto& vs = j["vertices"];
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto id = vs[i].get<std::string>();
        if (p.vertex_index(id) >= 0) throw SchemaError("/vertices/" + std::to_string(i), "duplicate vertex '" + id + "'");
        p.add_vertex(id);
    }
    const auto& as = j["arrows"];
    for (std::size_t i = 0; i < as.size(); ++i) {
        const std::string ptr = "/arrows/" + std::to_string(i);
        const auto id = as[i]["id"].get<std::string>();
        if (p.arrow_index(id) >= 0) throw SchemaError(ptr + "/id", "duplicate arrow '" + id + "'");
        for (const char* end : {"source", "target"})
            if (p.vertex_index(as[i][end].get<std::string>()) < 0)
                throw SchemaError(ptr + "/" + end, "unknown vertex '" + as[i][end].get<std::string>() + "'");
        p.add_arrow(id, as[i]["source"], as[i]["target"], as[i].value("grade", 0));
    }
    if (j.contains("relations")) {
        const auto& rs = j["relations"];
        for (std::size_t i = 0; i < rs.size(); ++i) {
            const std::string ptr = "/relations/" + std::to_string(i);
            for (int k = 0; k < 2; ++k)
                if (p.arrow_index(rs[i][k].get<std::string>()) < 0)
                    throw SchemaError(ptr + "/" + std::to_string(k), "unknown arrow '" + rs[i][k].get<std::string>() + "'");
            const int a = p.arrow_index(rs[i][0]), b = p.arrow_index(rs[i][1]);
            if (p.arrows[a].target != p.arrows[b].source) throw SchemaError(ptr, "relation arrows do not compose");
            if (p.is_relation(a, b)) throw SchemaError(ptr, "duplicate relation");
            p.relations.emplace_back(a, b);
        }
    }
    return p;
}

Json surface_to_json(const Surface& s) {
    Json j = Json::object();
    j["topology"] = topology_name(s.topology());
    auto extra = extra_points(s);
    j["boundary"] = Json::array();
    for (std::size_t c = 0; c < s.boundary.size(); ++c) {
        Json comp = Json::array();
        for (std::size_t i = 0; i < s.boundary[c].size(); ++i) {
            comp.push_back({{"color", "open"}, {"id", s.point_ids[s.boundary[c][i]]}});
            comp.push_back({{"color", "closed"},
                            {"id", closed_id(s, static_cast<int>(c), static_cast<int>(i))},
                            {"extra", static_cast<bool>(extra[c][i])}});
        }
        j["boundary"].push_back(comp);
    }
    j["unmarked"] = s.unmarked;
    j["arcs"] = Json::array();
    for (int a = 0; a < s.num_arcs(); ++a) {
        const auto& arc = s.arcs[a];
        j["arcs"].push_back({{"id", arc.id},
                             {"endpoints", {s.point_ids[arc.point[0]], s.point_ids[arc.point[1]]}},
                             {"fan", {s.fan_index({a, 0}), s.fan_index({a, 1})}},
                             {"winding", 0},
                             {"grade", 0}});
    }
    j["corners"] = Json::array();
    for (int p = 0; p < s.num_points(); ++p)
        for (std::size_t i = 0; i < s.corners[p].size(); ++i)
            j["corners"].push_back({{"point", s.point_ids[p]},
                                    {"from", s.arcs[s.fans[p][i].arc].id},
                                    {"to", s.arcs[s.fans[p][i + 1].arc].id},
                                    {"arrow", s.corners[p][i].arrow},
                                    {"grade", s.corners[p][i].grade}});
    auto polys = elementary_polygons(s);
    j["polygons"] = Json::array();
    for (const auto& poly : polys)
        j["polygons"].push_back({{"arc_edges", poly.arc_edges},
                                 {"boundary_edges", poly.boundary_edges},
                                 {"unmarked", poly.unmarked}});
    auto gd = global_dimension_geometric(s);
    j["gl_dim"] = gd ? Json(*gd) : Json("infinite");
    return j;
}

Json surfaces_to_json(const std::vector<Surface>& comps) {
    Json j = {{"components", Json::array()}};
    for (const auto& s : comps) j["components"].push_back(surface_to_json(s));
    return j;
}

Json string_to_json(const Presentation& p, const StringWalk& w) {
    Json j = {{"vertices", Json::array()}, {"letters", Json::array()}};
    for (int v : w.vertices) j["vertices"].push_back(p.vertices[v]);
    for (int i = 0; i < w.letters(); ++i)
        j["letters"].push_back({{"arrow", p.arrows[w.arrows[i]].id}, {"direct", static_cast<bool>(w.direct[i])}});
    return j;
}

namespace {

Json endpoint_json(const Geometry& g, LPoint x) {
    const Surface& s = g.surface();
    if (g.is_open(x)) return {{"kind", "marked"}, {"point", s.point_ids[g.open_point(x)]}};
    return {{"kind", "extra"}, {"point", closed_id(s, x.c, g.closed_index(x))}};
}

long long winding_of(const Geometry& g, const Chord& c) {
    if (!g.annulus()) return 0;
    const long long pa = 2LL * g.points_on(c.a.c);
    long long t = 0;
    const LPoint base{c.a.c, ((c.a.k % pa) + pa) % pa};
    g.translation_between(c.a, base, t);
    const LPoint b = g.translate(c.b, t);
    return floor_div(b.k, 2LL * g.points_on(b.c));
}

}  // namespace

Json curve_to_json(const GentleModel& m, const Chord& c) {
    const Geometry& g = m.geometry();
    const Presentation& p = m.algebra();
    Json j = Json::object();
    j["start"] = endpoint_json(g, c.a);
    j["crossings"] = Json::array();
    j["arrows"] = Json::array();
    if (auto w = string_of_curve(m, c)) {
        for (int v : w->vertices) j["crossings"].push_back(p.vertices[v]);
        for (int a : w->arrows) j["arrows"].push_back(p.arrows[a].id);
    }
    j["end"] = endpoint_json(g, c.b);
    j["winding"] = winding_of(g, c);
    return j;
}

Chord curve_from_json(const GentleModel& m, const Json& j) {
    require_valid(curve_schema(), j, "curve");
    const Presentation& p = m.algebra();
    StringWalk w;
    const auto& xs = j["crossings"];
    if (xs.empty()) throw SchemaError("/crossings", "a curve must cross at least one arc");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const int v = p.vertex_index(xs[i].get<std::string>());
        if (v < 0) throw SchemaError("/crossings/" + std::to_string(i), "unknown arc '" + xs[i].get<std::string>() + "'");
        w.vertices.push_back(v);
    }
    const bool given = j.contains("arrows");
    if (given && j["arrows"].size() + 1 != xs.size())
        throw SchemaError("/arrows", "needs one arrow per consecutive pair of crossings");
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        const int u = w.vertices[i], v = w.vertices[i + 1];
        std::vector<int> cand;
        if (given) {
            const int a = p.arrow_index(j["arrows"][i].get<std::string>());
            if (a < 0) throw SchemaError("/arrows/" + std::to_string(i), "unknown arrow");
            cand.push_back(a);
        } else {
            for (int a = 0; a < p.num_arrows(); ++a) {
                const auto& ar = p.arrows[a];
                if ((ar.source == u && ar.target == v) || (ar.source == v && ar.target == u)) cand.push_back(a);
            }
        }
        const std::string ptr = given ? "/arrows/" + std::to_string(i) : "/crossings/" + std::to_string(i + 1);
        if (cand.empty()) throw SchemaError(ptr, "consecutive arcs share no corner");
        if (cand.size() > 1) throw SchemaError(ptr, "several corners join these arcs; list them under \"arrows\"");
        const auto& ar = p.arrows[cand[0]];
        if (!((ar.source == u && ar.target == v) || (ar.source == v && ar.target == u)))
            throw SchemaError(ptr, "arrow does not join the consecutive arcs");
        w.arrows.push_back(cand[0]);
        w.direct.push_back(ar.source == u && ar.target == v);
    }
    if (auto c = check_string(p, w); !c) throw SchemaError("/crossings", "not permissible: " + c.violation);
    Chord chord = curve_of_string(m, w);
    const Geometry& g = m.geometry();
    for (const char* key : {"start", "end"}) {
        if (!j.contains(key)) continue;
        const Json want = endpoint_json(g, std::string(key) == "start" ? chord.a : chord.b);
        if (j[key] != want)
            throw SchemaError(std::string("/") + key, "endpoint does not match the crossings; expected " + want.dump());
    }
    return chord;
}

Json complex_to_json(const PathAlgebra& A, const TwoTermComplex& c) {
    const Presentation& p = A.presentation();
    Json j = Json::object();
    j["P1"] = Json::array();
    j["P0"] = Json::array();
    for (int v : c.P1) j["P1"].push_back(p.vertices[v]);
    for (int v : c.P0) j["P0"].push_back(p.vertices[v]);
    j["d"] = Json::array();
    for (std::size_t i = 0; i < c.P1.size(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < c.P0.size(); ++k) {
            Json terms = Json::array();
            for (const auto& t : c.d.entry[i][k]) terms.push_back({{"path", A.arrow_ids(t.path)}, {"coef", t.coef.str()}});
            row.push_back(terms);
        }
        j["d"].push_back(row);
    }
    return j;
}

TwoTermComplex complex_from_json(const PathAlgebra& A, const Json& j) {
    require_valid(complex_schema(), j, "complex");
    const Presentation& p = A.presentation();
    auto ids = [&](const char* key) {
        std::vector<int> out;
        for (std::size_t i = 0; i < j[key].size(); ++i) {
            const int v = p.vertex_index(j[key][i].get<std::string>());
            if (v < 0) throw SchemaError(std::string("/") + key + "/" + std::to_string(i), "unknown vertex");
            out.push_back(v);
        }
        return out;
    };
    TwoTermComplex c = TwoTermComplex::make(ids("P1"), ids("P0"));
    const auto& d = j["d"];
    if (d.size() != c.P1.size()) throw SchemaError("/d", "needs one row per P1 summand");
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i].size() != c.P0.size())
            throw SchemaError("/d/" + std::to_string(i), "needs one entry per P0 summand");
        for (std::size_t k = 0; k < d[i].size(); ++k)
            for (std::size_t t = 0; t < d[i][k].size(); ++t) {
                const std::string ptr = "/d/" + std::to_string(i) + "/" + std::to_string(k) + "/" + std::to_string(t);
                const Json& term = d[i][k][t];
                std::vector<int> arrows;
                for (const auto& a : term["path"]) {
                    const int ai = p.arrow_index(a.get<std::string>());
                    if (ai < 0) throw SchemaError(ptr + "/path", "unknown arrow '" + a.get<std::string>() + "'");
                    arrows.push_back(ai);
                }
                const int q = A.find(arrows, c.P0[k]);
                if (q < 0 || A.path(q).target != c.P1[i])
                    throw SchemaError(ptr + "/path", "not a nonzero path from the P0 vertex to the P1 vertex");
                Rational coef;
                try {
                    coef = term["coef"].is_string() ? Rational::parse(term["coef"].get<std::string>())
                                                    : Rational(term["coef"].get<std::int64_t>());
                } catch (const std::exception&) {
                    throw SchemaError(ptr + "/coef", "not a rational number");
                }
                add_term(c.d.entry[i][k], q, coef);
            }
    }
    return c;
}

Json homotopy_string_to_json(const PathAlgebra& A, const HomotopyString& h) {
    const Presentation& p = A.presentation();
    Json j = {{"vertices", Json::array()}, {"degrees", h.degrees}, {"letters", Json::array()}};
    for (int v : h.vertices) j["vertices"].push_back(p.vertices[v]);
    for (std::size_t i = 0; i < h.letters.size(); ++i)
        j["letters"].push_back({{"path", A.arrow_ids(h.letters[i])}, {"direct", static_cast<bool>(h.direct[i])}});
    return j;
}

Json pair_to_json(Catalogue& cat, const Pair& pair) {
    const Presentation& p = cat.algebra();
    Json j = {{"modules", Json::array()}, {"projectives", Json::array()}, {"labels", Json::array()}};
    for (int i : pair) {
        const Item& it = cat.item(i);
        j["labels"].push_back(it.label);
        if (it.shift) j["projectives"].push_back(p.vertices[it.vertex]);
        else j["modules"].push_back(string_to_json(p, it.string));
    }
    return j;
}

Json enumeration_to_json(Catalogue& cat, const EnumerationMode& mode, const Enumeration& en, const std::string& name) {
    Json j = Json::object();
    j["schema"] = "gentle-silt/pairs@1";
    j["algebra"] = name;
    j["type"] = cat.type().label();
    j["mode"] = mode.label();
    j["string_bound"] = mode.string_bound;
    j["count"] = en.pairs.size();
    j["bound_exceeded"] = en.bound_exceeded;
    j["pairs"] = Json::array();
    for (const auto& pr : en.pairs) j["pairs"].push_back(pair_to_json(cat, pr));
    j["exchange"] = Json::array();
    for (const auto& e : en.edges) j["exchange"].push_back({e.from, e.to});
    return j;
}

}  // namespace gentle
