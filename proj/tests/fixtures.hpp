#pragma once

// In-memory fan fixtures shared by the test binaries. The rank-2 fans list all
// colored faces explicitly; the rank-3 fans are face-completed on construction.

#include "hartogs/coloredfan.hpp"

namespace fixtures {

using hartogs::ColoredFan;

// V = R^2, color D12 at (1,0); support is the right halfplane, gap {x < 0}.
ColoredFan c2xp1();
// V = R^2, color D12 at (1,0); support is the lower halfplane, gap {y > 0}.
ColoredFan p2xc();
// V = R^2, color D12 at (1,0); complete fan of nine colored cones.
ColoredFan p2xp1();
// V = R^2, no colors; the first quadrant with its faces.
ColoredFan toric_c2();
// V = R^rank, Sigma = {(0, {})}.
ColoredFan homogeneous(std::size_t rank);
// V = first quadrant, Sigma = {(0, {})}.
ColoredFan quadrant_homogeneous();
// V = R^3; the three quadrant walls bounding the first octant. The open octant
// is separated from the rest of the complement, so it is disconnected.
ColoredFan corner_three_walls();
// V = R^3; two of those walls. The complement is connected.
ColoredFan corner_two_walls();
// V = R^3; four alternating octants. Every gap octant touches the others only
// along support rays, so the complement has four components.
ColoredFan checkerboard_rank3();

}  // namespace fixtures
