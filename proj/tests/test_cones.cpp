#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hartogs/cones.hpp"
#include "oracles.hpp"

#include <random>

using namespace hartogs;

namespace {

RatVec rv(std::initializer_list<Rat> xs) { return RatVec(xs); }

Cone quadrant() { return Cone::from_generators(2, {rv({1, 0}), rv({0, 1})}); }

// {x : A x >= 0} and {x : B x >= 0} agree iff each row of one lies in the conic
// hull of the rows of the other (Farkas), decided by the exact simplex.
bool same_solution_set(std::size_t rank, const RatMat& a, const RatMat& b) {
    (void)rank;
    for (const auto& row : a) {
        if (!nonnegative_combination(b, row)) return false;
    }
    for (const auto& row : b) {
        if (!nonnegative_combination(a, row)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("cone construction on fixed inputs") {
    const Cone q = quadrant();
    CHECK(q.generators() == RatMat{rv({0, 1}), rv({1, 0})});
    CHECK(q.inequalities() == RatMat{rv({0, 1}), rv({1, 0})});

    const Cone zero = Cone::from_generators(2, {});
    CHECK(zero.is_zero());
    CHECK(zero.inequalities() ==
          RatMat{rv({-1, 0}), rv({0, -1}), rv({0, 1}), rv({1, 0})});

    const Cone ray = Cone::from_generators(2, {rv({2, 0}), rv({1, 0})});
    CHECK(ray.generators() == RatMat{rv({1, 0})});

    // zero vectors among the generators are dropped
    const Cone ray2 = Cone::from_generators(2, {rv({0, 0}), rv({3, 0})});
    CHECK(ray2.generators() == RatMat{rv({1, 0})});
}

TEST_CASE("dual cones on fixed inputs") {
    CHECK(quadrant().dual() == quadrant());

    const Cone plane =
        Cone::from_generators(2, {rv({1, 0}), rv({-1, 0}), rv({0, 1}), rv({0, -1})});
    CHECK(plane.dual().is_zero());

    const Cone ray = Cone::from_generators(2, {rv({1, 0})});
    const RatMat expected{rv({0, -1}), rv({0, 1}), rv({1, 0})};
    CHECK(ray.dual().generators() == expected);
    // frozen value agrees with the Fourier-Motzkin elimination of
    // {x = l*(1,0), l >= 0}, which here is already minimal
    CHECK(oracle::fm_dual_inequalities(2, {rv({1, 0})}) == expected);

    const Cone zero = Cone::from_generators(2, {});
    CHECK(zero.dual().is_whole_space());
}

TEST_CASE("is_whole_space on fixed inputs") {
    CHECK(Cone::from_generators(2, {rv({1, 0}), rv({-1, 0}), rv({0, 1}), rv({0, -1})})
              .is_whole_space());
    CHECK(!quadrant().is_whole_space());

    const RatMat gens{rv({1, 0}), rv({-1, 1}), rv({-1, -1})};
    const Cone c = Cone::from_generators(2, gens);
    CHECK(c.is_whole_space());
    CHECK(c.dual().is_zero());
    CHECK(oracle::fm_dual_inequalities(2, gens).empty());
}

TEST_CASE("membership on fixed inputs") {
    CHECK(quadrant().contains(rv({1, 1})));
    CHECK(!quadrant().contains(rv({-1, 0})));
    const Cone upper = Cone::from_inequalities(2, {rv({0, 1})});
    CHECK(upper.contains(rv({5, 0})));
    CHECK(upper.contains(rv({-5, 0})));
    CHECK(!upper.contains(rv({0, -1})));
}

TEST_CASE("dimension and lineality") {
    const Cone ray = Cone::from_generators(2, {rv({1, 0})});
    CHECK(ray.dim() == 1);
    CHECK(ray.lineality_dim() == 0);

    const Cone line = Cone::from_generators(2, {rv({1, 0}), rv({-1, 0})});
    CHECK(line.dim() == 1);
    CHECK(line.lineality_dim() == 1);

    const Cone zero = Cone::from_generators(2, {});
    CHECK(zero.dim() == 0);
    CHECK(zero.lineality_dim() == 0);

    CHECK(quadrant().dim() == 2);
    CHECK(quadrant().lineality_dim() == 0);
    CHECK(Cone::from_inequalities(2, {}).lineality_dim() == 2);
}

TEST_CASE("relative interior points") {
    CHECK(quadrant().relative_interior_point() == rv({1, 1}));
    CHECK(Cone::from_generators(2, {rv({1, 0})}).relative_interior_point() == rv({1, 0}));

    const Cone fat = Cone::from_generators(2, {rv({1, 0}), rv({1, 1}), rv({0, 1})});
    const RatVec p = fat.relative_interior_point();
    CHECK(p == rv({2, 2}));
    for (const auto& h : fat.inequalities()) CHECK(dot(h, p) > 0);

    CHECK_THROWS_AS(Cone::from_generators(2, {}).relative_interior_point(), ZeroCone);
}

TEST_CASE("intersection on fixed inputs") {
    const Cone left = Cone::from_inequalities(2, {rv({-1, 0})});
    const Cone meet = intersect(quadrant(), left);
    CHECK(meet.generators() == RatMat{rv({0, 1})});

    const Cone q3 = Cone::from_generators(2, {rv({-1, 0}), rv({0, -1})});
    CHECK(intersect(quadrant(), q3).is_zero());
    CHECK(intersect(quadrant(), quadrant()) == quadrant());
}

TEST_CASE("faces on fixed inputs") {
    const Cone q = quadrant();
    CHECK(is_face(Cone::from_generators(2, {rv({1, 0})}), q));
    CHECK(!is_face(Cone::from_generators(2, {rv({1, 1})}), q));
    CHECK(is_face(Cone::from_generators(2, {}), q));
    CHECK(is_face(q, q));
    // a face must be contained: the left ray is not a face of the quadrant
    CHECK(!is_face(Cone::from_generators(2, {rv({-1, 0})}), q));

    const auto facets = proper_facets(q);
    REQUIRE(facets.size() == 2);
    for (const auto& f : facets) {
        CHECK(f.dim() == 1);
        CHECK(is_face(f, q));
    }

    const auto faces = all_faces(q);
    CHECK(faces.size() == 4);  // {0}, two rays, the quadrant
    for (const auto& f : faces) CHECK(is_face(f, q));
}

TEST_CASE("duality is involutive on random cones") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = 2 + rng() % 3;
        const Cone c = oracle::random_cone(rng, r);
        CHECK(c.dual().dual() == c);
        CHECK((c.dual().is_zero() == c.is_whole_space()));
    }
}

TEST_CASE("double description agrees with Fourier-Motzkin elimination") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t r = 2 + rng() % 2;
        RatMat gens;
        const std::size_t n = 1 + rng() % 5;
        for (std::size_t i = 0; i < n; ++i) gens.push_back(oracle::random_vec(rng, r, -4, 4));

        const Cone c = Cone::from_generators(r, gens);
        const RatMat fm = oracle::fm_dual_inequalities(r, gens);
        for (const auto& g : gens) {
            for (const auto& h : fm) CHECK(dot(h, g) >= 0);
        }
        CHECK(same_solution_set(r, c.inequalities(), fm));
    }
}

TEST_CASE("whole-space test matches sampled membership") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t r = 2 + rng() % 3;
        const Cone c = oracle::random_cone(rng, r);
        bool sampled = true;
        for (std::size_t i = 0; i < r && sampled; ++i) {
            sampled = c.contains(unit_vec(r, i)) && c.contains(vec_neg(unit_vec(r, i)));
        }
        if (sampled) {
            for (int k = 0; k < 4; ++k) {
                RatVec v = zero_vec(r);
                for (std::size_t i = 0; i < r; ++i) {
                    const Rat coef(static_cast<int>(rng() % 9) - 4);
                    v = vec_add(v, vec_scale(coef, unit_vec(r, i)));
                }
                CHECK(c.contains(v));
            }
        }
        CHECK(c.is_whole_space() == sampled);
        CHECK(c.is_whole_space() == c.dual().is_zero());
    }
}

TEST_CASE("generators satisfy their cone's inequalities") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 200; ++trial) {
        const Cone c = oracle::random_cone(rng, 2 + rng() % 3);
        for (const auto& g : c.generators()) {
            CHECK(c.contains(g));
            for (const auto& h : c.inequalities()) CHECK(dot(h, g) >= 0);
        }
    }
}

TEST_CASE("round-trip conversion is the identity") {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t r = 2 + rng() % 3;
        const Cone c = oracle::random_cone(rng, r);
        CHECK(Cone::from_generators(r, c.generators()) == c);
        CHECK(Cone::from_inequalities(r, c.inequalities()) == c);
    }
}

TEST_CASE("intersection is commutative, associative, idempotent") {
    std::mt19937_64 rng(26);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t r = 2 + rng() % 2;
        const Cone a = oracle::random_cone(rng, r);
        const Cone b = oracle::random_cone(rng, r);
        const Cone c = oracle::random_cone(rng, r);
        CHECK(intersect(a, b) == intersect(b, a));
        CHECK(intersect(intersect(a, b), c) == intersect(a, intersect(b, c)));
        CHECK(intersect(a, a) == a);
        const Cone m = intersect(a, b);
        for (const auto& g : m.generators()) {
            CHECK(a.contains(g));
            CHECK(b.contains(g));
        }
    }
}
