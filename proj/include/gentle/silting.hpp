#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gentle/embed.hpp"

namespace gentle {

class ClassificationViolation : public ConsistencyError {
public:
    using ConsistencyError::ConsistencyError;
};

class BoundExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool is_tau_rigid_pair(const PathAlgebra& A, const std::vector<Representation>& M, const std::vector<int>& P);

struct EnumerationMode {
    bool exhaustive = true;
    int depth = 8;
    int string_bound = 12;  // letters

    // "exhaustive" or "depth:<d>"
    static EnumerationMode parse(const std::string& text, int string_bound);
    std::string label() const;
};

// Indecomposable summand of a support τ-tilting pair: a string module or a shifted projective.
struct Item {
    bool shift = false;
    int vertex = -1;     // shifted projective P(vertex)[1]
    StringWalk string;   // module
    std::string label;
};

// Sorted item indices of a catalogue.
using Pair = std::vector<int>;

// Items over a connected hereditary gentle algebra with cached homological data.
// Not thread safe.
class Catalogue {
public:
    Catalogue(Presentation a, int string_bound);

    const Presentation& algebra() const { return model_->algebra(); }
    const GentleModel& model() const { return *model_; }
    const PathAlgebra& paths() const { return model_->paths(); }
    const HereditaryType& type() const { return type_; }
    int rank() const { return algebra().num_vertices(); }
    int string_bound() const { return bound_; }

    int size() const { return static_cast<int>(items_.size()); }
    const Item& item(int i) const { return items_[i]; }
    int shift_item(int v) const { return shift_item_[v]; }
    std::optional<int> find_string(const StringWalk& w) const;
    std::optional<int> find_module(const Representation& M);

    const Representation& module(int i);
    const Representation& tau(int i);
    bool tau_rigid(int i);
    // Summands i and j may lie in one support τ-tilting pair.
    bool compatible(int i, int j);
    const TwoTermComplex& complex(int i);
    const AdmissibleCurve& admissible(int i);
    // Module curve, or the open arc standing for a shifted projective.
    const Chord& curve(int i) const { return curves_[i]; }
    // cokernel and curve round trips of a single item
    bool item_round_trip(int i);

    const HomK& hom(int i, int j);
    std::size_t hom_shift1(int i, int j);
    // Composition Hom(i,j) x Hom(j,k) -> Hom(i,k) in homotopy coordinates:
    // result[a][b] = coordinates of (g_b after f_a).
    const std::vector<std::vector<Vector>>& composition(int i, int j, int k);

    bool curves_cross(int i, int j);

    std::optional<int> gl_dim_cached(const Presentation& b);
    std::optional<int> geometric_gl_dim_cached(const Presentation& b);

private:
    std::unique_ptr<GentleModel> model_;
    HereditaryType type_;
    int bound_;
    std::vector<Item> items_;
    std::vector<Chord> curves_;
    std::vector<int> shift_item_;
    std::map<std::vector<int>, int> by_encoding_;
    std::vector<std::optional<Representation>> module_, tau_;
    std::vector<signed char> rigid_, round_trip_;
    std::vector<std::optional<TwoTermComplex>> complex_;
    std::vector<std::optional<AdmissibleCurve>> admissible_;
    std::unordered_map<long long, signed char> compat_, cross_;
    std::unordered_map<long long, std::unique_ptr<HomK>> hom_;
    std::unordered_map<long long, std::size_t> hom1_;
    std::unordered_map<long long, std::vector<std::vector<Vector>>> comp_;
    std::unordered_map<std::string, std::optional<int>> gldim_, geo_gldim_;
    long long key(int i, int j) const { return static_cast<long long>(i) * 1000003LL + j; }
};

// Exchange graph edge between two pair indices.
struct Exchange {
    int from, to;
};

struct Enumeration {
    std::vector<Pair> pairs;
    std::vector<Exchange> edges;
    int bound_exceeded = 0;
};

Enumeration enumerate_stau_tilt(Catalogue& cat, const EnumerationMode& mode);
// Other completion after removing pair[slot]; BoundExceeded when it is not within the string bound.
Pair mutate_pair(Catalogue& cat, const Pair& pair, int slot);
bool is_support_tau_tilting(Catalogue& cat, const Pair& pair);

std::vector<TwoTermComplex> silting_of_pair(Catalogue& cat, const Pair& pair);
Pair h0_of_silting(Catalogue& cat, const std::vector<TwoTermComplex>& summands);
bool is_2term_silting(const PathAlgebra& A, const std::vector<TwoTermComplex>& summands);

struct Triangulation {
    std::vector<Chord> curves;   // module curves
    std::vector<int> coarcs;     // vertices standing for the projective part
};
Triangulation triangulation_of_pair(Catalogue& cat, const Pair& pair);
Pair pair_of_triangulation(Catalogue& cat, const Triangulation& t);

// Rotated module curves and graded open arcs, in pair order.
std::vector<AdmissibleCurve> ffas_rotate(Catalogue& cat, const Pair& pair);

struct EndoGeometric {
    Surface surface;
    Presentation graded;
    Presentation h0;
    std::vector<ElementaryPolygon> polygons;
    FfasCheck ffas;
    int max_arc_edges = 0;
    int max_total_edges = 0;
    // Ambient bound max C - 1, nothing if some polygon is unmarked.
    std::optional<int> gl_dim_bound;
};
// Vertex i of the result is curve i, named "X1".."Xn".
EndoGeometric endo_geometric(const GentleModel& m, const std::vector<AdmissibleCurve>& curves);

struct EndoResult {
    Presentation algebra;
    bool ok = true;
    std::string problem;
};
EndoResult endo_algebraic(const PathAlgebra& A, const std::vector<TwoTermComplex>& summands);
EndoResult endo_algebraic(Catalogue& cat, const Pair& pair);

struct ComponentShape {
    bool annulus = false;
    int size = 0;
};
struct Classification {
    int form = 0;
    std::vector<ComponentShape> components;
    std::string tag() const;
};
// Throws ClassificationViolation when b fits none of the forms.
Classification classify_silted(const Presentation& b, const HereditaryType& ambient);

struct ObjectRecord {
    std::vector<std::string> summands;
    Presentation endo;
    std::optional<int> gl_dim;            // linear oracle
    std::optional<int> gl_dim_bound;      // max C(Γ^↺) - 1
    std::optional<int> gl_dim_geometric;  // formula applied to the surface of the endo algebra
    int max_total_edges = 0;
    int max_arc_edges = 0;
    int form = 0;
    std::string form_tag;
    std::vector<std::string> failures;
};

struct VerificationReport {
    std::string algebra_id;
    std::string type_label;
    EnumerationMode mode;
    int rank = 0;
    std::vector<ObjectRecord> objects;
    std::vector<Exchange> edges;
    int bound_exceeded = 0;
    std::map<std::string, int> form_counts;
    int max_gl_dim = 0;
    int failures = 0;
    bool pass = false;
};

VerificationReport verify_no_strictly_shod(const Presentation& a, const EnumerationMode& mode,
                                           const std::string& algebra_id, int jobs = 1);
// One record of the verification pipeline.
ObjectRecord verify_pair(Catalogue& cat, const Pair& pair);

}  // namespace gentle
