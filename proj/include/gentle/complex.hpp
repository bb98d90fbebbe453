#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gentle/paths.hpp"

namespace gentle {

// P1 -> P0 in degrees -1 and 0; d.entry[i][j] maps P(P1[i]) to P(P0[j]).
struct TwoTermComplex {
    std::vector<int> P1;
    std::vector<int> P0;
    ProjMap d;

    static TwoTermComplex stalk(int v, int degree);  // degree 0 or -1
    static TwoTermComplex make(std::vector<int> p1, std::vector<int> p0);
    bool is_zero() const { return P1.empty() && P0.empty(); }
    // No entry of d has a nonzero coefficient on a trivial path.
    bool is_minimal(const PathAlgebra& A) const;
    int num_terms() const { return static_cast<int>(P1.size() + P0.size()); }
};

TwoTermComplex direct_sum(const std::vector<TwoTermComplex>& parts);

// Chain maps X -> Y[shift] modulo null-homotopic maps.
// Representatives live in coordinates of chain_space(): for shift 0 the pair (f0, f1),
// for shift 1 the component X1 -> Y0, for shift -1 the component X0 -> Y1.
class HomK {
public:
    HomK(const PathAlgebra& A, const TwoTermComplex& X, const TwoTermComplex& Y, int shift);

    std::size_t dim() const { return reps_.size(); }
    int shift() const { return shift_; }
    const std::vector<Vector>& representatives() const { return reps_; }
    // Coordinates of a chain map (given in chain coordinates) modulo homotopy.
    Vector reduce(const Vector& chain) const;
    bool is_null_homotopic(const Vector& chain) const;
    std::size_t chain_dim() const { return chain_dim_; }

    // shift 0 helpers
    Vector chain_coords(const ProjMap& f0, const ProjMap& f1) const;
    std::pair<ProjMap, ProjMap> chain_maps(const Vector& chain) const;
    const std::vector<Vector>& cycles() const { return cycles_; }
    const std::vector<Vector>& boundaries() const { return boundaries_; }

private:
    const PathAlgebra* A_;
    int shift_;
    std::vector<ProjHomSpace> spaces_;  // shift 0: {X0->Y0, X1->Y1}; others: one space
    std::size_t chain_dim_ = 0;
    std::vector<Vector> cycles_;
    std::vector<Vector> boundaries_;
    std::vector<Vector> reps_;
    std::optional<LinearSolver> solver_;  // over columns [reps | boundaries]
};

std::size_t hom_complexes_upto_homotopy(const PathAlgebra& A, const TwoTermComplex& X, const TwoTermComplex& Y,
                                        int shift);

bool complexes_isomorphic(const PathAlgebra& A, const TwoTermComplex& X, const TwoTermComplex& Y);

// Letters of a homotopy string: each is a nonzero path between consecutive positions.
// A direct letter goes from vertices[i] to vertices[i+1]; an inverse one the other way.
struct HomotopyString {
    std::vector<int> vertices;
    std::vector<int> letters;     // path indices
    std::vector<bool> direct;
    std::vector<int> degrees;     // one per position
    bool is_two_term() const;
};

TwoTermComplex complex_of_homotopy_string(const PathAlgebra& A, const HomotopyString& h);

}  // namespace gentle
