#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gentle/complex.hpp"
#include "gentle/curves.hpp"

namespace gentle {

enum class EndCase { I, II, III };
std::string end_case_name(EndCase c);

// which = 0 for the start c.a, 1 for the end c.b.
EndCase end_segment_case(const GentleModel& m, const Chord& c, int which);
Chord rotate_curve(const GentleModel& m, const Chord& c);

struct CurveCover {
    std::vector<int> cover;  // vertices of top arcs, in walk order
    std::optional<int> q_left, q_right;
    std::vector<int> q_core;
    std::vector<int> kernel() const;
};
CurveCover projective_cover_curve(const GentleModel& m, const Chord& c);
TwoTermComplex projective_presentation_curve(const GentleModel& m, const Chord& c);

// Graded curve: one degree per crossing with the closed dissection.
struct AdmissibleCurve {
    Chord chord;
    std::vector<int> degrees;
};

// Homotopy letters read from the closed-arc crossings, degrees normalized to top degree 0.
HomotopyString homotopy_string_of_curve(const GentleModel& m, const Chord& c);
HomotopyString homotopy_string_of(const GentleModel& m, const AdmissibleCurve& c);
TwoTermComplex complex_of_admissible(const GentleModel& m, const AdmissibleCurve& c);
AdmissibleCurve embed_curve(const GentleModel& m, const Chord& c);
// The open arc of v graded so that its complex is P(v) placed in the given degree.
AdmissibleCurve arc_curve(const GentleModel& m, int v, int degree);
// Degree of the closed-arc crossing nearest to the given end (0 = chord.a).
int end_degree(const GentleModel& m, const AdmissibleCurve& c, int which);

}  // namespace gentle
