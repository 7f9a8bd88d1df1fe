#include "fixtures.hpp"

#include <stdexcept>

namespace fixtures {

using namespace hartogs;

namespace {

using Names = std::vector<std::string>;

ColoredFan wholeplane_d12() {
    ColoredFan fan;
    fan.ambient_rank = 2;
    fan.valuation_cone = Cone::from_inequalities(2, {});
    fan.color_table.add("D12", {Rat(1), Rat(0)});
    return fan;
}

void add_cone(ColoredFan& fan, const Names& colors, RatMat vgens) {
    fan.cones.push_back(
        make_colored_cone(fan.ambient_rank, fan.color_table, colors, std::move(vgens)));
}

ColoredFan complete_faces(ColoredFan fan) {
    FanValidation v = validate_fan(fan, true);
    if (!v.valid) throw std::logic_error("fixture fan failed validation");
    return std::move(v.completed);
}

}  // namespace

ColoredFan c2xp1() {
    ColoredFan fan = wholeplane_d12();
    add_cone(fan, {"D12"}, {{Rat(0), Rat(1)}});
    add_cone(fan, {"D12"}, {{Rat(0), Rat(-1)}});
    add_cone(fan, {"D12"}, {});
    add_cone(fan, {}, {{Rat(0), Rat(1)}});
    add_cone(fan, {}, {{Rat(0), Rat(-1)}});
    add_cone(fan, {}, {});
    return fan;
}

ColoredFan p2xc() {
    ColoredFan fan = wholeplane_d12();
    add_cone(fan, {"D12"}, {{Rat(0), Rat(-1)}});
    add_cone(fan, {}, {{Rat(-1), Rat(0)}, {Rat(0), Rat(-1)}});
    add_cone(fan, {"D12"}, {});
    add_cone(fan, {}, {{Rat(0), Rat(-1)}});
    add_cone(fan, {}, {{Rat(-1), Rat(0)}});
    add_cone(fan, {}, {});
    return fan;
}

ColoredFan p2xp1() {
    ColoredFan fan = wholeplane_d12();
    add_cone(fan, {"D12"}, {{Rat(0), Rat(1)}});
    add_cone(fan, {"D12"}, {{Rat(0), Rat(-1)}});
    add_cone(fan, {}, {{Rat(-1), Rat(0)}, {Rat(0), Rat(1)}});
    add_cone(fan, {}, {{Rat(-1), Rat(0)}, {Rat(0), Rat(-1)}});
    add_cone(fan, {"D12"}, {});
    add_cone(fan, {}, {{Rat(0), Rat(1)}});
    add_cone(fan, {}, {{Rat(0), Rat(-1)}});
    add_cone(fan, {}, {{Rat(-1), Rat(0)}});
    add_cone(fan, {}, {});
    return fan;
}

ColoredFan toric_c2() {
    ColoredFan fan;
    fan.ambient_rank = 2;
    fan.valuation_cone = Cone::from_inequalities(2, {});
    add_cone(fan, {}, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
    add_cone(fan, {}, {{Rat(1), Rat(0)}});
    add_cone(fan, {}, {{Rat(0), Rat(1)}});
    add_cone(fan, {}, {});
    return fan;
}

ColoredFan homogeneous(std::size_t rank) {
    ColoredFan fan;
    fan.ambient_rank = rank;
    fan.valuation_cone = Cone::from_inequalities(rank, {});
    add_cone(fan, {}, {});
    return fan;
}

ColoredFan quadrant_homogeneous() {
    ColoredFan fan;
    fan.ambient_rank = 2;
    fan.valuation_cone = Cone::from_generators(2, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
    add_cone(fan, {}, {});
    return fan;
}

namespace {

RatVec e(int i, int sign) {
    RatVec v(3, Rat(0));
    v[static_cast<std::size_t>(i)] = sign;
    return v;
}

ColoredFan rank3_shell(const std::vector<RatMat>& maximal) {
    ColoredFan fan;
    fan.ambient_rank = 3;
    fan.valuation_cone = Cone::from_inequalities(3, {});
    for (const auto& gens : maximal) add_cone(fan, {}, gens);
    return complete_faces(std::move(fan));
}

}  // namespace

ColoredFan corner_three_walls() {
    return rank3_shell({{e(0, 1), e(2, 1)}, {e(1, 1), e(2, 1)}, {e(0, 1), e(1, 1)}});
}

ColoredFan corner_two_walls() {
    return rank3_shell({{e(0, 1), e(2, 1)}, {e(1, 1), e(2, 1)}});
}

ColoredFan checkerboard_rank3() {
    return rank3_shell({{e(0, 1), e(1, 1), e(2, 1)},
                        {e(0, -1), e(1, -1), e(2, 1)},
                        {e(0, 1), e(1, -1), e(2, -1)},
                        {e(0, -1), e(1, 1), e(2, -1)}});
}

}  // namespace fixtures
