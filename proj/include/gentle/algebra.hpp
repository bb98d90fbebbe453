#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gentle {

// Malformed input: dangling references, duplicate ids, schema problems.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Violation of a mathematical precondition that is not an input-format problem.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Internal consistency failure. Seeing one means a bug, not bad input.
class ConsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Arrow {
    std::string id;
    int source = 0;
    int target = 0;
    int grade = 0;
};

// Quiver with length-two monomial relations and integer arrow grades.
// Relations are ordered pairs (a, b) of arrow indices meaning "a then b".
struct Presentation {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<std::pair<int, int>> relations;

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_arrows() const { return static_cast<int>(arrows.size()); }
    int vertex_index(const std::string& id) const;
    int arrow_index(const std::string& id) const;
    bool is_relation(int a, int b) const;
    std::vector<int> arrows_out(int v) const;
    std::vector<int> arrows_in(int v) const;

    int add_vertex(const std::string& id);
    int add_arrow(const std::string& id, const std::string& source, const std::string& target, int grade = 0);
    void add_relation(const std::string& first, const std::string& second);

    // Structural checks only: ids unique, references resolve, relations composable.
    void check_structure() const;
};

struct Violation {
    std::string axiom;  // "G1".."G4" or "admissible"
    std::string witness;
};

struct Diagnostics {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Throws InputError for structural problems; axiom failures are reported in the result.
Diagnostics validate_gentle(const Presentation& p);

struct HereditaryType {
    enum class Kind { A, ATilde };
    Kind kind = Kind::A;
    int n = 0;                      // number of vertices
    std::string orientation;        // TypeA: word over {"→","←"} along the path
    int p = 0;                      // TypeATilde: arrows along the chosen sense
    int q = 0;                      // TypeATilde: arrows against it (p >= q)
    std::vector<int> path_order;    // vertex indices along the path or cycle
    std::string label() const;
};

class NotHereditary : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};
class NotHereditaryGentleType : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};
class NotFiniteDimensional : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

HereditaryType classify_hereditary_type(const Presentation& p);

std::vector<Presentation> connected_components(const Presentation& p);
bool is_connected(const Presentation& p);

Presentation delete_nonzero_graded_arrows(const Presentation& p);
Presentation with_zero_grades(Presentation p);

// Minimal encoding over all relabelings; equal strings iff isomorphic presentations (grades included).
std::string canonical_form(const Presentation& p);
bool isomorphic(const Presentation& a, const Presentation& b);
// Isomorphism that must send vertex i of a to vertex vmap[i] of b.
bool isomorphic_with_vertex_map(const Presentation& a, const Presentation& b, const std::vector<int>& vmap);

// Fixture builders. Vertices are named "1".."n".
// forward[i] true means an arrow i+1 -> i+2.
Presentation type_a(const std::vector<bool>& forward);
Presentation type_a(const std::string& word);  // word over '>' '<' (or r/l)
Presentation type_atilde(int p, int q);
std::vector<std::vector<bool>> type_a_orientations_up_to_reflection(int n);
std::string orientation_word(const std::vector<bool>& forward);

}  // namespace gentle
