#pragma once

#include <map>
#include <vector>

#include "gentle/algebra.hpp"
#include "gentle/linalg.hpp"

namespace gentle {

struct Path {
    int source = 0;
    int target = 0;
    std::vector<int> arrows;  // empty for the trivial path at source == target
};

struct PathTerm {
    int path = 0;
    Rational coef;
};
// Sparse linear combination of paths sharing source and target, sorted by path index.
using PathComb = std::vector<PathTerm>;

// Basis of nonzero paths of a finite-dimensional monomial algebra with composition table.
class PathAlgebra {
public:
    explicit PathAlgebra(Presentation p);

    const Presentation& presentation() const { return p_; }
    int num_vertices() const { return p_.num_vertices(); }
    int num_paths() const { return static_cast<int>(paths_.size()); }
    int dimension() const { return num_paths(); }
    const Path& path(int i) const { return paths_[i]; }
    int trivial(int v) const { return trivial_[v]; }
    // Paths from `from` to `to`, in a fixed order.
    const std::vector<int>& between(int from, int to) const { return between_[from * n_ + to]; }
    // Position of path i inside between(source, target).
    int rank_in_block(int i) const { return rank_[i]; }
    // Path p followed by q, or -1 when the product vanishes or is not composable.
    int concat(int p, int q) const { return concat_[static_cast<std::size_t>(p) * paths_.size() + q]; }
    int find(const std::vector<int>& arrows, int source) const;
    int arrow_path(int arrow) const { return arrow_path_[arrow]; }
    std::vector<std::string> arrow_ids(int path) const;
    std::string path_label(int path) const;

private:
    Presentation p_;
    int n_ = 0;
    std::vector<Path> paths_;
    std::vector<int> trivial_;
    std::vector<int> arrow_path_;
    std::vector<std::vector<int>> between_;
    std::vector<int> rank_;
    std::vector<int> concat_;
    std::map<std::pair<int, std::vector<int>>, int> index_;
};

void add_term(PathComb& c, int path, const Rational& coef);
PathComb combine(const PathComb& a, const PathComb& b, const Rational& scale_b = 1);
// c1 then c2 (paths c1 followed by paths c2).
PathComb concat(const PathAlgebra& A, const PathComb& c1, const PathComb& c2);

// Morphism  ⊕ P(src[i]) -> ⊕ P(dst[j]); entry[i][j] is a combination of paths from dst[j] to src[i].
struct ProjMap {
    std::vector<int> src;
    std::vector<int> dst;
    std::vector<std::vector<PathComb>> entry;

    static ProjMap zero(std::vector<int> src, std::vector<int> dst);
    static ProjMap identity(const PathAlgebra& A, const std::vector<int>& objs);
    bool is_zero() const;
};

ProjMap compose(const PathAlgebra& A, const ProjMap& g, const ProjMap& f);  // g after f
ProjMap add(const ProjMap& a, const ProjMap& b, const Rational& scale_b = 1);

// Coordinates for Hom(⊕P(src), ⊕P(dst)) with the path basis.
class ProjHomSpace {
public:
    ProjHomSpace(const PathAlgebra& A, std::vector<int> src, std::vector<int> dst);
    std::size_t dim() const { return dim_; }
    std::size_t index(int i, int j, int path) const;
    Vector coords(const ProjMap& f) const;
    ProjMap element(const Vector& v) const;
    // Basis element number k as (i, j, path).
    struct Slot {
        int i, j, path;
    };
    const std::vector<Slot>& slots() const { return slots_; }
    const std::vector<int>& src() const { return src_; }
    const std::vector<int>& dst() const { return dst_; }

private:
    const PathAlgebra* A_;
    std::vector<int> src_, dst_;
    std::vector<std::size_t> offset_;  // per (i, j)
    std::vector<Slot> slots_;
    std::size_t dim_ = 0;
};

}  // namespace gentle
