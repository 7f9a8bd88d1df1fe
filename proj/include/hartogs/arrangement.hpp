#pragma once

#include "hartogs/cones.hpp"

#include <vector>

namespace hartogs {

// One nonempty face of a central hyperplane arrangement restricted to a cone V:
// the set of points of V with a fixed sign pattern against every hyperplane.
struct ArrangementFace {
    std::vector<int> signs;  // one entry per hyperplane, in {-1, 0, +1}
    Cone closure;            // topological closure, a polyhedral cone inside V
    RatVec relint_point;     // exact witness in the relative interior (0 for the origin)
    std::size_t dim = 0;
};

struct Arrangement {
    RatMat hyperplanes;                  // canonical normals, lex-sorted, unique
    std::vector<ArrangementFace> faces;  // all nonempty faces, sorted by sign vector
};

// Face partial order: f is a face of (lies in the closure of) g iff every
// coordinate of f's sign vector is either 0 or equal to g's.
bool sign_leq(const std::vector<int>& f, const std::vector<int>& g);

// Enumerates every nonempty face of the arrangement inside V by refining sign
// vectors one hyperplane at a time; emptiness is decided exactly via the double
// description of each candidate closure. The `parallel` flag switches between
// the serial reference loop and the OpenMP kernel; both return identical,
// deterministically sorted output.
Arrangement enumerate_faces(const Cone& V, RatMat hyperplanes, bool parallel);

}  // namespace hartogs
