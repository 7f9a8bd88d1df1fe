#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "hartogs/coloredfan.hpp"
#include "oracles.hpp"

#include <random>

using namespace hartogs;

namespace {

RatVec rv(std::initializer_list<Rat> xs) { return RatVec(xs); }

bool any_contains(const std::vector<std::string>& messages, const std::string& needle) {
    for (const auto& m : messages) {
        if (m.find(needle) != std::string::npos) return true;
    }
    return false;
}

ColoredFan single_cone_fan(Cone V, ColorTable table, const std::vector<std::string>& colors,
                           RatMat vgens) {
    ColoredFan fan;
    fan.ambient_rank = V.ambient_rank();
    fan.valuation_cone = std::move(V);
    fan.color_table = std::move(table);
    fan.cones.push_back(make_colored_cone(fan.ambient_rank, fan.color_table, colors,
                                          std::move(vgens)));
    return fan;
}

}  // namespace

TEST_CASE("colored cone axioms on fixed instances") {
    ColorTable d12;
    d12.add("D12", rv({1, 0}));

    SUBCASE("valid colored ray") {
        const ColoredFan fan = single_cone_fan(Cone::from_inequalities(2, {}), d12, {"D12"}, {});
        CHECK(validate_colored_cone(fan, fan.cones[0], 0).empty());
    }
    SUBCASE("line-containing cone") {
        const ColoredFan fan = single_cone_fan(Cone::from_inequalities(2, {}), d12, {},
                                               {rv({1, 0}), rv({-1, 0})});
        const auto violations = validate_colored_cone(fan, fan.cones[0], 0);
        REQUIRE(violations.size() == 1);
        CHECK(any_contains(violations, "contains a line"));
    }
    SUBCASE("relative interior misses V") {
        ColorTable table;
        table.add("E", rv({0, 1}));
        const Cone lower = Cone::from_inequalities(2, {rv({0, -1})});
        const ColoredFan fan = single_cone_fan(lower, table, {"E"}, {});
        const auto violations = validate_colored_cone(fan, fan.cones[0], 0);
        REQUIRE(violations.size() == 1);
        CHECK(any_contains(violations, "relative interior misses V"));
    }
    SUBCASE("zero color point cannot lie in F") {
        ColorTable table;
        table.add("Z", rv({0, 0}));
        const ColoredFan fan =
            single_cone_fan(Cone::from_inequalities(2, {}), table, {"Z"}, {rv({1, 0})});
        CHECK(any_contains(validate_colored_cone(fan, fan.cones[0], 0), "zero image"));
    }
    SUBCASE("v-generator outside the valuation cone") {
        const Cone lower = Cone::from_inequalities(2, {rv({0, -1})});
        const ColoredFan fan = single_cone_fan(lower, ColorTable{}, {}, {rv({0, 1})});
        CHECK(any_contains(validate_colored_cone(fan, fan.cones[0], 0),
                           "outside the valuation cone"));
    }
    SUBCASE("unknown color name throws") {
        CHECK_THROWS_AS(make_colored_cone(2, d12, {"D99"}, {}), UnknownColor);
    }
    SUBCASE("duplicate color name throws") {
        ColorTable table;
        table.add("D", rv({1, 0}));
        CHECK_THROWS_AS(table.add("D", rv({0, 1})), DuplicateColor);
    }
}

TEST_CASE("relint_meets_valuation on fixed instances") {
    const Cone lower = Cone::from_inequalities(2, {rv({0, -1})});
    CHECK(relint_meets_valuation(Cone::from_generators(2, {}), lower));
    CHECK(relint_meets_valuation(Cone::from_generators(2, {rv({1, 0})}), lower));
    CHECK(!relint_meets_valuation(Cone::from_generators(2, {rv({0, 1})}), lower));
    // the first quadrant touches {y <= 0} only along its boundary ray
    CHECK(!relint_meets_valuation(Cone::from_generators(2, {rv({1, 0}), rv({0, 1})}), lower));
    CHECK(relint_meets_valuation(Cone::from_generators(2, {rv({1, 0}), rv({0, -1})}), lower));
}

TEST_CASE("the worked fixtures validate") {
    const auto check = [](const ColoredFan& fan, std::size_t cones) {
        const FanValidation v = validate_fan(fan, false);
        CHECK(v.violations.empty());
        CHECK(v.valid);
        CHECK(fan.cones.size() == cones);
    };
    check(fixtures::c2xp1(), 6);
    check(fixtures::p2xc(), 6);
    check(fixtures::p2xp1(), 9);
    check(fixtures::toric_c2(), 4);
    check(fixtures::homogeneous(2), 1);
    check(fixtures::quadrant_homogeneous(), 1);
    check(fixtures::corner_three_walls(), 7);
    check(fixtures::corner_two_walls(), 6);
    check(fixtures::checkerboard_rank3(), 23);
}

TEST_CASE("missing colored face is reported by name") {
    ColoredFan fan = fixtures::p2xp1();
    // drop the colored ray ((1,0), {D12}), the face of both right quadrants
    fan.cones.erase(fan.cones.begin() + 4);
    const FanValidation v = validate_fan(fan, false);
    CHECK(!v.valid);
    CHECK(any_contains(v.violations, "missing colored face"));
    CHECK(any_contains(v.violations, "D12"));

    const FanValidation completed = validate_fan(fan, true);
    CHECK(completed.valid);
    REQUIRE(completed.completed.cones.size() == 9);
    const ColoredCone& appended = completed.completed.cones.back();
    CHECK(appended.sigma == Cone::from_generators(2, {rv({1, 0})}));
    REQUIRE(appended.color_refs.size() == 1);
    CHECK(completed.completed.color_table.at(appended.color_refs[0]).name == "D12");
}

TEST_CASE("a face kept with the wrong color set is still missing") {
    ColoredFan fan = fixtures::p2xp1();
    // strip the color from the ray ((1,0), {D12}): the colored face proper is gone
    fan.cones[4].color_refs.clear();
    const FanValidation v = validate_fan(fan, false);
    CHECK(!v.valid);
    CHECK(any_contains(v.violations, "missing colored face"));
}

TEST_CASE("overlapping relative interiors are rejected") {
    ColoredFan fan;
    fan.ambient_rank = 2;
    fan.valuation_cone = Cone::from_inequalities(2, {});
    fan.cones.push_back(
        make_colored_cone(2, fan.color_table, {}, {rv({1, 0}), rv({0, 1})}));
    fan.cones.push_back(
        make_colored_cone(2, fan.color_table, {}, {rv({1, 1}), rv({2, 1})}));
    const FanValidation v = validate_fan(fan, true);
    CHECK(!v.valid);
    CHECK(any_contains(v.violations, "relative interiors overlap"));
}

TEST_CASE("duplicate colored cones are rejected") {
    ColoredFan fan = fixtures::toric_c2();
    fan.cones.push_back(fan.cones.back());
    const FanValidation v = validate_fan(fan, false);
    CHECK(!v.valid);
    CHECK(any_contains(v.violations, "duplicate colored cone"));
}

TEST_CASE("degenerate valuation cones and empty fans are rejected") {
    ColoredFan fan = fixtures::toric_c2();
    fan.valuation_cone = Cone::from_generators(2, {rv({1, 0})});
    CHECK(any_contains(validate_fan(fan, false).violations, "not full-dimensional"));

    ColoredFan empty;
    empty.ambient_rank = 2;
    empty.valuation_cone = Cone::from_inequalities(2, {});
    CHECK(any_contains(validate_fan(empty, false).violations, "empty fan"));
}

TEST_CASE("single-axiom mutations of valid fixtures are rejected") {
    const auto mutated_invalid = [](ColoredFan fan, auto&& mutate) {
        mutate(fan);
        return !validate_fan(fan, false).valid;
    };

    for (const ColoredFan& base :
         {fixtures::c2xp1(), fixtures::p2xc(), fixtures::p2xp1(), fixtures::toric_c2()}) {
        CHECK(mutated_invalid(base, [](ColoredFan& f) {
            f.cones.push_back(make_colored_cone(
                2, f.color_table, {}, {rv({1, 2}), rv({-1, -2})}));  // a line
        }));
        CHECK(mutated_invalid(base, [](ColoredFan& f) {
            f.cones.push_back(f.cones.front());  // duplicate
        }));
        CHECK(mutated_invalid(base, [](ColoredFan& f) {
            f.cones.pop_back();  // the zero cone is a face of every member
        }));
        CHECK(mutated_invalid(base, [](ColoredFan& f) {
            f.valuation_cone = Cone::from_generators(2, {rv({1, 0})});
        }));
        CHECK(mutated_invalid(base, [](ColoredFan& f) {
            // a second maximal cone overlapping the first in its interior
            const RatVec p = f.cones.front().sigma.relative_interior_point();
            f.cones.push_back(make_colored_cone(2, f.color_table, {}, {p, vec_scale(Rat(2), p)}));
        }));
    }
}

TEST_CASE("support queries on the fixtures") {
    const ColoredFan c2 = fixtures::c2xp1();
    CHECK(support_contains(c2, rv({1, 1})));
    CHECK(support_contains(c2, rv({1, -5})));
    CHECK(support_contains(c2, rv({0, 7})));
    CHECK(!support_contains(c2, rv({-1, 0})));
    CHECK(!support_contains(c2, rv({-1, 3})));
    CHECK(support_contains(c2, rv({0, 0})));

    const ColoredFan p2 = fixtures::p2xc();
    CHECK(support_contains(p2, rv({2, -1})));
    CHECK(support_contains(p2, rv({-2, -1})));
    CHECK(!support_contains(p2, rv({0, 1})));

    std::mt19937_64 rng(41);
    const ColoredFan complete = fixtures::p2xp1();
    for (int i = 0; i < 50; ++i) {
        CHECK(support_contains(complete, oracle::random_vec(rng, 2, -9, 9)));
    }
}

TEST_CASE("member generators lie in the support") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        const ColoredFan fan = oracle::random_rank2_fan(rng);
        for (const auto& cc : fan.cones) {
            for (const auto& g : cc.sigma.generators()) {
                CHECK(support_contains(fan, g));
            }
        }
    }
}

TEST_CASE("support hyperplanes cover every member facet") {
    const ColoredFan fan = fixtures::p2xc();
    const RatMat hyps = support_hyperplanes(fan);
    CHECK(hyps == RatMat{rv({0, 1}), rv({1, 0})});

    ColoredFan clipped = fixtures::quadrant_homogeneous();
    const RatMat qhyps = support_hyperplanes(clipped);
    // zero cone contributes the coordinate normals; V's facets coincide with them
    CHECK(qhyps == RatMat{rv({0, 1}), rv({1, 0})});
}

TEST_CASE("completeness of the fixtures") {
    CHECK(is_complete(fixtures::p2xp1()));
    CHECK(!is_complete(fixtures::c2xp1()));
    CHECK(!is_complete(fixtures::p2xc()));
    CHECK(!is_complete(fixtures::toric_c2()));
    CHECK(!is_complete(fixtures::homogeneous(2)));
    CHECK(!is_complete(fixtures::quadrant_homogeneous()));
}

TEST_CASE("random rank-2 fans validate and agree with the sweep on completeness") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const ColoredFan fan = oracle::random_rank2_fan(rng);
        CHECK(validate_fan(fan, false).valid);
        CHECK(is_complete(fan) == oracle::sweep_components(fan).complete);
    }
}
