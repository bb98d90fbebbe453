#pragma once

#include <optional>
#include <vector>

#include "gentle/complex.hpp"
#include "gentle/linalg.hpp"
#include "gentle/paths.hpp"

namespace gentle {

// Arrow a : s -> t acts by maps[a] : M_s -> M_t, a dims[t] x dims[s] matrix.
struct Representation {
    std::vector<int> dims;
    std::vector<Matrix> maps;

    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
};

// Natural transformation: one matrix per vertex, N_v x M_v.
using RepMorphism = std::vector<Matrix>;

Representation zero_representation(const Presentation& p);
Representation simple_representation(const Presentation& p, int v);
Representation projective_representation(const PathAlgebra& A, int v);
Representation injective_representation(const PathAlgebra& A, int v);
Representation direct_sum(const std::vector<Representation>& parts);
// Matrix of the action of a path.
Matrix path_action(const PathAlgebra& A, const Representation& M, int path);

void check_representation(const Presentation& p, const Representation& M);
bool satisfies_relations(const Presentation& p, const Representation& M);

std::vector<RepMorphism> hom_space(const Presentation& p, const Representation& M, const Representation& N);
std::size_t hom_dim(const Presentation& p, const Representation& M, const Representation& N);
bool is_isomorphic(const Presentation& p, const Representation& M, const Representation& N);

std::vector<int> radical_dims(const Presentation& p, const Representation& M);
std::vector<int> top_dims(const Presentation& p, const Representation& M);
std::vector<int> socle_dims(const Presentation& p, const Representation& M);

struct Subrepresentation {
    Representation rep;
    std::vector<Matrix> inclusion;  // per vertex, columns = basis of the subspace
};
Subrepresentation kernel(const Presentation& p, const Representation& M, const Representation& N, const RepMorphism& f);
// Quotient of M by the subrepresentation spanned (per vertex) by the given columns.
Representation quotient(const Presentation& p, const Representation& M, const std::vector<Matrix>& spans);

struct ProjectiveCover {
    std::vector<int> vertices;          // one indecomposable projective per entry
    std::vector<Vector> generators;     // image of each generator in M_{vertices[i]}
    Representation cover;               // ⊕ P(vertices[i])
    RepMorphism map;                    // cover -> M
    Subrepresentation kernel;
};
ProjectiveCover projective_cover(const PathAlgebra& A, const Representation& M);

// Minimal projective presentation P1 -> P0 of M.
TwoTermComplex min_projective_presentation(const PathAlgebra& A, const Representation& M);
// Cokernel of P1 -> P0 as a representation.
Representation cokernel(const PathAlgebra& A, const TwoTermComplex& c);

Representation ar_translate(const PathAlgebra& A, const Representation& M);
std::size_t ext1(const PathAlgebra& A, const Representation& M, const Representation& N);

// Projective dimension, or nothing when it exceeds cap.
std::optional<int> projective_dimension(const PathAlgebra& A, const Representation& M, int cap = 10);
std::optional<int> global_dimension_linear(const Presentation& B, int cap = 10);

}  // namespace gentle
