#include "gentle/algebra.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace gentle {

namespace {

bool natural_less(const std::string& a, const std::string& b) {
    auto numeric = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (numeric(a) && numeric(b) && a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

}  // namespace

int Presentation::vertex_index(const std::string& id) const {
    for (int i = 0; i < num_vertices(); ++i)
        if (vertices[i] == id) return i;
    return -1;
}

int Presentation::arrow_index(const std::string& id) const {
    for (int i = 0; i < num_arrows(); ++i)
        if (arrows[i].id == id) return i;
    return -1;
}

bool Presentation::is_relation(int a, int b) const {
    for (const auto& r : relations)
        if (r.first == a && r.second == b) return true;
    return false;
}

std::vector<int> Presentation::arrows_out(int v) const {
    std::vector<int> r;
    for (int i = 0; i < num_arrows(); ++i)
        if (arrows[i].source == v) r.push_back(i);
    return r;
}

std::vector<int> Presentation::arrows_in(int v) const {
    std::vector<int> r;
    for (int i = 0; i < num_arrows(); ++i)
        if (arrows[i].target == v) r.push_back(i);
    return r;
}

int Presentation::add_vertex(const std::string& id) {
    if (vertex_index(id) >= 0) throw InputError("duplicate vertex id '" + id + "'");
    vertices.push_back(id);
    return num_vertices() - 1;
}

int Presentation::add_arrow(const std::string& id, const std::string& source, const std::string& target, int grade) {
    if (arrow_index(id) >= 0) throw InputError("duplicate arrow id '" + id + "'");
    int s = vertex_index(source), t = vertex_index(target);
    if (s < 0) throw InputError("arrow '" + id + "' has unknown source '" + source + "'");
    if (t < 0) throw InputError("arrow '" + id + "' has unknown target '" + target + "'");
    arrows.push_back({id, s, t, grade});
    return num_arrows() - 1;
}

void Presentation::add_relation(const std::string& first, const std::string& second) {
    int a = arrow_index(first), b = arrow_index(second);
    if (a < 0) throw InputError("relation references unknown arrow '" + first + "'");
    if (b < 0) throw InputError("relation references unknown arrow '" + second + "'");
    if (arrows[a].target != arrows[b].source)
        throw InputError("relation (" + first + "," + second + ") is not a composable path");
    if (!is_relation(a, b)) relations.emplace_back(a, b);
}

void Presentation::check_structure() const {
    std::set<std::string> seen;
    for (const auto& v : vertices)
        if (!seen.insert(v).second) throw InputError("duplicate vertex id '" + v + "'");
    seen.clear();
    for (const auto& a : arrows) {
        if (!seen.insert(a.id).second) throw InputError("duplicate arrow id '" + a.id + "'");
        if (a.source < 0 || a.source >= num_vertices() || a.target < 0 || a.target >= num_vertices())
            throw InputError("arrow '" + a.id + "' references a missing vertex");
    }
    std::set<std::pair<int, int>> rels;
    for (const auto& r : relations) {
        if (r.first < 0 || r.first >= num_arrows() || r.second < 0 || r.second >= num_arrows())
            throw InputError("relation references a missing arrow");
        if (arrows[r.first].target != arrows[r.second].source)
            throw InputError("relation (" + arrows[r.first].id + "," + arrows[r.second].id +
                             ") is not a composable path");
        if (!rels.insert(r).second)
            throw InputError("duplicate relation (" + arrows[r.first].id + "," + arrows[r.second].id + ")");
    }
}

Diagnostics validate_gentle(const Presentation& p) {
    p.check_structure();
    Diagnostics d;
    for (int v = 0; v < p.num_vertices(); ++v) {
        auto out = p.arrows_out(v).size(), in = p.arrows_in(v).size();
        if (out > 2)
            d.violations.push_back({"G1", "vertex " + p.vertices[v] + " is the source of " + std::to_string(out) + " arrows"});
        if (in > 2)
            d.violations.push_back({"G1", "vertex " + p.vertices[v] + " is the target of " + std::to_string(in) + " arrows"});
    }
    for (int a = 0; a < p.num_arrows(); ++a) {
        const auto& al = p.arrows[a];
        std::vector<std::string> after_in, after_out, before_in, before_out;
        for (int b : p.arrows_out(al.target))
            (p.is_relation(a, b) ? after_in : after_out).push_back(p.arrows[b].id);
        for (int b : p.arrows_in(al.source))
            (p.is_relation(b, a) ? before_in : before_out).push_back(p.arrows[b].id);
        auto join = [](const std::vector<std::string>& xs) {
            std::string s;
            for (const auto& x : xs) s += (s.empty() ? "" : ",") + x;
            return s;
        };
        if (after_in.size() > 1)
            d.violations.push_back({"G2", "arrow " + al.id + " composes into the ideal with " + join(after_in)});
        if (before_in.size() > 1)
            d.violations.push_back({"G2", "arrow " + al.id + " is preceded in the ideal by " + join(before_in)});
        if (after_out.size() > 1)
            d.violations.push_back({"G3", "at vertex " + p.vertices[al.target] + ": arrow " + al.id +
                                              " composes outside the ideal with " + join(after_out)});
        if (before_out.size() > 1)
            d.violations.push_back({"G3", "at vertex " + p.vertices[al.source] + ": arrow " + al.id +
                                              " is preceded outside the ideal by " + join(before_out)});
    }
    // Relations are stored as length-two paths, so the ideal is generated in length two by construction.
    // Finite dimensionality: no cycle of arrows whose consecutive compositions all avoid the ideal.
    const int m = p.num_arrows();
    std::vector<int> state(m, 0);
    std::vector<int> stack;
    std::function<bool(int)> dfs = [&](int a) -> bool {
        state[a] = 1;
        stack.push_back(a);
        for (int b : p.arrows_out(p.arrows[a].target)) {
            if (p.is_relation(a, b)) continue;
            if (state[b] == 1) {
                stack.push_back(b);
                return true;
            }
            if (state[b] == 0 && dfs(b)) return true;
        }
        state[a] = 2;
        stack.pop_back();
        return false;
    };
    for (int a = 0; a < m; ++a) {
        if (state[a] != 0) continue;
        stack.clear();
        if (dfs(a)) {
            std::string w;
            auto start = std::find(stack.begin(), stack.end(), stack.back());
            for (auto it = start; it != stack.end(); ++it) w += (w.empty() ? "" : " ") + p.arrows[*it].id;
            d.violations.push_back({"admissible", "cycle without relations: " + w});
            break;
        }
    }
    return d;
}

std::string HereditaryType::label() const {
    if (kind == Kind::A) return "A" + std::to_string(n) + (orientation.empty() ? "" : " " + orientation);
    return "Atilde(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

HereditaryType classify_hereditary_type(const Presentation& p) {
    auto diag = validate_gentle(p);
    if (!p.relations.empty()) throw NotHereditary("presentation has relations");
    if (!diag.ok()) {
        for (const auto& v : diag.violations)
            if (v.axiom == "admissible") throw NotFiniteDimensional(v.witness);
        throw PreconditionError("not gentle: " + diag.violations.front().axiom + " " + diag.violations.front().witness);
    }
    const int n = p.num_vertices();
    if (n == 0) throw NotHereditaryGentleType("empty quiver");
    if (!is_connected(p)) throw NotHereditaryGentleType("quiver is not connected");
    std::vector<int> deg(n, 0);
    for (const auto& a : p.arrows) {
        deg[a.source]++;
        deg[a.target]++;
    }
    auto by_name = [&](int a, int b) { return natural_less(p.vertices[a], p.vertices[b]); };
    HereditaryType h;
    h.n = n;
    const int m = p.num_arrows();
    if (m == n - 1) {
        for (int v = 0; v < n; ++v)
            if (deg[v] > 2) throw NotHereditaryGentleType("vertex " + p.vertices[v] + " has degree " + std::to_string(deg[v]));
        h.kind = HereditaryType::Kind::A;
        int start = 0;
        if (n > 1) {
            std::vector<int> ends;
            for (int v = 0; v < n; ++v)
                if (deg[v] == 1) ends.push_back(v);
            start = *std::min_element(ends.begin(), ends.end(), by_name);
        }
        std::vector<bool> used(m, false);
        int cur = start;
        h.path_order.push_back(cur);
        for (int step = 0; step + 1 < n; ++step) {
            for (int a = 0; a < m; ++a) {
                if (used[a]) continue;
                const auto& ar = p.arrows[a];
                if (ar.source == cur || ar.target == cur) {
                    used[a] = true;
                    bool fwd = ar.source == cur;
                    h.orientation += fwd ? "→" : "←";
                    cur = fwd ? ar.target : ar.source;
                    h.path_order.push_back(cur);
                    break;
                }
            }
        }
        return h;
    }
    if (m == n) {
        for (int v = 0; v < n; ++v)
            if (deg[v] != 2) throw NotHereditaryGentleType("vertex " + p.vertices[v] + " has degree " + std::to_string(deg[v]));
        h.kind = HereditaryType::Kind::ATilde;
        std::vector<int> verts(n);
        std::iota(verts.begin(), verts.end(), 0);
        int start = *std::min_element(verts.begin(), verts.end(), by_name);
        std::vector<bool> used(m, false);
        int cur = start, along = 0, against = 0;
        std::vector<int> order{start};
        for (int step = 0; step < n; ++step) {
            for (int a = 0; a < m; ++a) {
                if (used[a]) continue;
                const auto& ar = p.arrows[a];
                if (ar.source == cur || ar.target == cur) {
                    used[a] = true;
                    bool fwd = ar.source == cur;
                    (fwd ? along : against)++;
                    cur = fwd ? ar.target : ar.source;
                    if (step + 1 < n) order.push_back(cur);
                    break;
                }
            }
        }
        if (along == 0 || against == 0) throw NotFiniteDimensional("cycle is cyclically oriented");
        if (along < against) {
            std::swap(along, against);
            std::reverse(order.begin() + 1, order.end());
        }
        h.p = along;
        h.q = against;
        h.path_order = order;
        return h;
    }
    throw NotHereditaryGentleType("underlying graph is neither a path nor a cycle");
}

bool is_connected(const Presentation& p) { return connected_components(p).size() <= 1; }

std::vector<Presentation> connected_components(const Presentation& p) {
    const int n = p.num_vertices();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& a : p.arrows) parent[find(a.source)] = find(a.target);
    std::vector<int> comp_of(n, -1);
    std::vector<Presentation> comps;
    std::vector<int> root_comp(n, -1);
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (root_comp[r] < 0) {
            root_comp[r] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comp_of[v] = root_comp[r];
        comps[comp_of[v]].vertices.push_back(p.vertices[v]);
    }
    for (const auto& a : p.arrows) {
        auto& c = comps[comp_of[a.source]];
        c.add_arrow(a.id, p.vertices[a.source], p.vertices[a.target], a.grade);
    }
    for (const auto& r : p.relations) {
        auto& c = comps[comp_of[p.arrows[r.first].source]];
        c.add_relation(p.arrows[r.first].id, p.arrows[r.second].id);
    }
    return comps;
}

Presentation delete_nonzero_graded_arrows(const Presentation& p) {
    Presentation r;
    r.vertices = p.vertices;
    for (const auto& a : p.arrows)
        if (a.grade == 0) r.add_arrow(a.id, p.vertices[a.source], p.vertices[a.target], 0);
    for (const auto& rel : p.relations) {
        const auto& a = p.arrows[rel.first];
        const auto& b = p.arrows[rel.second];
        if (a.grade == 0 && b.grade == 0) r.add_relation(a.id, b.id);
    }
    if (!validate_gentle(r).ok()) throw ConsistencyError("degree-zero part is not gentle");
    return r;
}

Presentation with_zero_grades(Presentation p) {
    for (auto& a : p.arrows) a.grade = 0;
    return p;
}

namespace {

// Encoding of p under a vertex order, minimized over orderings of parallel arrows.
std::string encode_ordered(const Presentation& p, const std::vector<int>& pos) {
    struct Key {
        int s, t, g, idx;
    };
    std::vector<Key> keys;
    for (int a = 0; a < p.num_arrows(); ++a) keys.push_back({pos[p.arrows[a].source], pos[p.arrows[a].target], p.arrows[a].grade, a});
    std::sort(keys.begin(), keys.end(), [](const Key& x, const Key& y) {
        return std::tie(x.s, x.t, x.g, x.idx) < std::tie(y.s, y.t, y.g, y.idx);
    });
    std::ostringstream head;
    head << p.num_vertices() << '|';
    for (const auto& k : keys) head << k.s << ',' << k.t << ',' << k.g << ';';
    head << '|';
    // groups of parallel arrows with equal grade
    std::vector<std::pair<int, int>> groups;
    for (std::size_t i = 0; i < keys.size();) {
        std::size_t j = i;
        while (j < keys.size() && keys[j].s == keys[i].s && keys[j].t == keys[i].t && keys[j].g == keys[i].g) ++j;
        if (j - i > 1) groups.emplace_back(static_cast<int>(i), static_cast<int>(j));
        i = j;
    }
    std::vector<int> order(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) order[i] = keys[i].idx;
    std::string best;
    bool have = false;
    std::function<void(std::size_t)> rec = [&](std::size_t g) {
        if (g == groups.size()) {
            std::vector<int> rank(p.num_arrows());
            for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
            std::vector<std::pair<int, int>> rels;
            for (const auto& r : p.relations) rels.emplace_back(rank[r.first], rank[r.second]);
            std::sort(rels.begin(), rels.end());
            std::ostringstream os;
            for (const auto& r : rels) os << r.first << '.' << r.second << ';';
            std::string s = os.str();
            if (!have || s < best) {
                best = s;
                have = true;
            }
            return;
        }
        auto [lo, hi] = groups[g];
        std::sort(order.begin() + lo, order.begin() + hi);
        do {
            rec(g + 1);
        } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    rec(0);
    return head.str() + best;
}

std::vector<std::string> vertex_invariants(const Presentation& p) {
    const int n = p.num_vertices();
    std::vector<std::string> inv(n);
    for (int v = 0; v < n; ++v) {
        std::vector<std::string> parts;
        for (int a : p.arrows_out(v)) {
            int rin = 0, rout = 0;
            for (const auto& r : p.relations) {
                if (r.first == a) rout++;
                if (r.second == a) rin++;
            }
            parts.push_back("o" + std::to_string(p.arrows[a].grade) + ":" + std::to_string(rin) + std::to_string(rout) +
                            (p.arrows[a].target == v ? "L" : ""));
        }
        for (int a : p.arrows_in(v)) {
            int rin = 0, rout = 0;
            for (const auto& r : p.relations) {
                if (r.first == a) rout++;
                if (r.second == a) rin++;
            }
            parts.push_back("i" + std::to_string(p.arrows[a].grade) + ":" + std::to_string(rin) + std::to_string(rout));
        }
        std::sort(parts.begin(), parts.end());
        for (const auto& s : parts) inv[v] += s + ",";
    }
    // two rounds of neighbourhood refinement
    for (int round = 0; round < 2; ++round) {
        std::vector<std::string> next(n);
        for (int v = 0; v < n; ++v) {
            std::vector<std::string> nb;
            for (int a : p.arrows_out(v)) nb.push_back(">" + inv[p.arrows[a].target]);
            for (int a : p.arrows_in(v)) nb.push_back("<" + inv[p.arrows[a].source]);
            std::sort(nb.begin(), nb.end());
            next[v] = inv[v] + "[";
            for (const auto& s : nb) next[v] += s + "|";
            next[v] += "]";
        }
        // compress to keep strings short
        std::vector<std::string> sorted = next;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            inv[v] = "#" + std::to_string(std::lower_bound(sorted.begin(), sorted.end(), next[v]) - sorted.begin()) + "~" +
                     next[v].substr(0, next[v].find('['));
    }
    return inv;
}

}  // namespace

std::string canonical_form(const Presentation& p) {
    const int n = p.num_vertices();
    auto inv = vertex_invariants(p);
    std::vector<int> verts(n);
    std::iota(verts.begin(), verts.end(), 0);
    std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) { return inv[a] < inv[b]; });
    // cells of equal invariant; positions are assigned cell by cell
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && inv[verts[j]] == inv[verts[i]]) ++j;
        cells.emplace_back(i, j);
        i = j;
    }
    std::string invariant_prefix;
    for (int v : verts) invariant_prefix += inv[v] + "/";
    std::string best;
    bool have = false;
    std::vector<int> order = verts;
    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == cells.size()) {
            std::vector<int> pos(n);
            for (int i = 0; i < n; ++i) pos[order[i]] = i;
            std::string s = encode_ordered(p, pos);
            if (!have || s < best) {
                best = s;
                have = true;
            }
            return;
        }
        auto [lo, hi] = cells[c];
        std::sort(order.begin() + lo, order.begin() + hi);
        do {
            rec(c + 1);
        } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    rec(0);
    return invariant_prefix + "=" + best;
}

bool isomorphic(const Presentation& a, const Presentation& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_arrows() != b.num_arrows() ||
        a.relations.size() != b.relations.size())
        return false;
    return canonical_form(a) == canonical_form(b);
}

bool isomorphic_with_vertex_map(const Presentation& a, const Presentation& b, const std::vector<int>& vmap) {
    if (a.num_vertices() != b.num_vertices() || a.num_arrows() != b.num_arrows() ||
        a.relations.size() != b.relations.size() || static_cast<int>(vmap.size()) != a.num_vertices())
        return false;
    const int m = a.num_arrows();
    std::vector<int> amap(m, -1);
    std::vector<bool> used(m, false);
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == m) {
            for (const auto& r : a.relations)
                if (!b.is_relation(amap[r.first], amap[r.second])) return false;
            return true;
        }
        const auto& x = a.arrows[i];
        for (int j = 0; j < m; ++j) {
            if (used[j]) continue;
            const auto& y = b.arrows[j];
            if (y.source != vmap[x.source] || y.target != vmap[x.target] || y.grade != x.grade) continue;
            used[j] = true;
            amap[i] = j;
            if (rec(i + 1)) return true;
            used[j] = false;
        }
        return false;
    };
    return rec(0);
}

Presentation type_a(const std::vector<bool>& forward) {
    Presentation p;
    const int n = static_cast<int>(forward.size()) + 1;
    for (int i = 1; i <= n; ++i) p.add_vertex(std::to_string(i));
    for (int i = 1; i < n; ++i) {
        std::string a = "a" + std::to_string(i);
        if (forward[i - 1])
            p.add_arrow(a, std::to_string(i), std::to_string(i + 1));
        else
            p.add_arrow(a, std::to_string(i + 1), std::to_string(i));
    }
    return p;
}

Presentation type_a(const std::string& word) {
    std::vector<bool> fwd;
    for (std::size_t i = 0; i < word.size();) {
        unsigned char c = word[i];
        if (c == '>' || c == 'r' || c == 'R') {
            fwd.push_back(true);
            ++i;
        } else if (c == '<' || c == 'l' || c == 'L') {
            fwd.push_back(false);
            ++i;
        } else if (word.compare(i, 3, "→") == 0) {
            fwd.push_back(true);
            i += 3;
        } else if (word.compare(i, 3, "←") == 0) {
            fwd.push_back(false);
            i += 3;
        } else {
            throw InputError("bad orientation word '" + word + "'");
        }
    }
    return type_a(fwd);
}

Presentation type_atilde(int p, int q) {
    if (p < 1 || q < 1) throw PreconditionError("Atilde needs p >= 1 and q >= 1");
    const int n = p + q;
    Presentation r;
    for (int i = 1; i <= n; ++i) r.add_vertex(std::to_string(i));
    for (int i = 1; i <= n; ++i) {
        int j = i % n + 1;
        std::string id = "a" + std::to_string(i);
        if (i <= p)
            r.add_arrow(id, std::to_string(i), std::to_string(j));
        else
            r.add_arrow(id, std::to_string(j), std::to_string(i));
    }
    return r;
}

std::vector<std::vector<bool>> type_a_orientations_up_to_reflection(int n) {
    std::vector<std::vector<bool>> out;
    const int len = n - 1;
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
        std::vector<bool> w(len), refl(len);
        for (int i = 0; i < len; ++i) w[i] = (mask >> (len - 1 - i)) & 1u;
        for (int i = 0; i < len; ++i) refl[i] = !w[len - 1 - i];
        if (refl < w) continue;
        out.push_back(w);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return b < a; });
    return out;
}

std::string orientation_word(const std::vector<bool>& forward) {
    std::string s;
    for (bool f : forward) s += f ? '>' : '<';
    return s;
}

}  // namespace gentle
