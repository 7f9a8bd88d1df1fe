#pragma once

#include "hartogs/cones.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hartogs {

// A color D with its image a_D = rho(D) in the colattice N. The image may be
// zero (such a color can never belong to a colored cone's color set).
struct Color {
    std::string name;
    RatVec point;
};

// Name-unique list of colors. Distinct colors may share the same point.
class ColorTable {
public:
    void add(std::string name, RatVec point);  // throws DuplicateColor
    std::size_t size() const { return colors_.size(); }
    const Color& at(std::size_t i) const { return colors_.at(i); }
    std::optional<std::size_t> index_of(const std::string& name) const;
    const std::vector<Color>& entries() const { return colors_; }

private:
    std::vector<Color> colors_;
};

// A colored cone (sigma, F): sigma is generated by the points of the colors in
// F together with the v-generators, which are required to lie in the valuation
// cone. color_refs indexes the fan's color table and is sorted and unique.
struct ColoredCone {
    Cone sigma;
    std::vector<std::size_t> color_refs;
    RatMat v_generators;  // canonical: primitive, lex-sorted, unique, nonzero
};

ColoredCone make_colored_cone(std::size_t rank, const ColorTable& table,
                              const std::vector<std::string>& color_names,
                              RatMat v_generators);  // throws UnknownColor

// The combinatorial datum of a spherical embedding: ambient colattice rank, the
// valuation cone V (full-dimensional), the color table, and the colored cones.
struct ColoredFan {
    std::size_t ambient_rank = 0;
    Cone valuation_cone;
    ColorTable color_table;
    std::vector<ColoredCone> cones;
};

// relint(sigma) meets V. Exact: relint(sigma) ∩ V is nonempty iff the canonical
// relative interior point of sigma ∩ V is strict on every non-equality
// inequality of sigma. True for the zero cone.
bool relint_meets_valuation(const Cone& sigma, const Cone& V);

// Axioms of a single colored cone, reported as human-readable violations:
// no line, colors in F have nonzero points, v-generators lie in V, and the
// relative interior meets V. `index` only labels the messages.
std::vector<std::string> validate_colored_cone(const ColoredFan& fan, const ColoredCone& cc,
                                               std::size_t index);

struct FanValidation {
    bool valid = false;
    std::vector<std::string> violations;
    ColoredFan completed;  // the input, plus appended faces when auto-completion is on
};

// Full fan validation: per-cone axioms, closure under colored faces (a face
// sigma' of a member with relint(sigma') ∩ V != {} must be a member with colors
// {D in F : a_D in sigma'}), relint-uniqueness inside V, no duplicates, V
// full-dimensional, nonempty cone list. With auto_complete_faces, missing faces
// are appended instead of reported.
FanValidation validate_fan(const ColoredFan& fan, bool auto_complete_faces);

// v lies in the support |Sigma|.
bool support_contains(const ColoredFan& fan, const RatVec& v);

// Canonical normals of every member cone's minimal H-representation together
// with V's own: the central arrangement that carves V into cells each lying
// inside or outside the support.
RatMat support_hyperplanes(const ColoredFan& fan);

// Every full-dimensional cell of the decomposition of V lies in the support
// (the variety is compact). Pre: valid fan. Throws RankTooLarge beyond the
// cell-enumeration limit. Defined with the gap analysis.
bool is_complete(const ColoredFan& fan);
bool is_complete(const ColoredFan& fan, std::size_t max_rank, bool parallel);

}  // namespace hartogs
