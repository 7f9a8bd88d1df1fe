#include "hartogs/horospherical.hpp"

#include <algorithm>

namespace hartogs {

RootDatum make_root_datum(std::size_t torus_rank, RatMat simple_roots, RatMat simple_coroots,
                          std::vector<std::string> root_names) {
    if (simple_roots.size() != simple_coroots.size()) {
        throw InvalidRootDatum("number of simple roots and coroots differ");
    }
    for (const auto& r : simple_roots) {
        if (r.size() != torus_rank) throw InvalidRootDatum("simple root of wrong length");
    }
    for (const auto& c : simple_coroots) {
        if (c.size() != torus_rank) throw InvalidRootDatum("simple coroot of wrong length");
    }
    if (root_names.empty()) {
        for (std::size_t i = 0; i < simple_roots.size(); ++i) {
            root_names.push_back("alpha" + std::to_string(i + 1));
        }
    }
    if (root_names.size() != simple_roots.size()) {
        throw InvalidRootDatum("number of root names and simple roots differ");
    }
    // Cartan pairings: <alpha_i^vee, alpha_j>
    const std::size_t n = simple_roots.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Rat p = dot(simple_coroots[i], simple_roots[j]);
            if (i == j) {
                if (p != 2) {
                    throw InvalidRootDatum("<" + root_names[i] + "^vee, " + root_names[i] +
                                           "> = " + rat_to_string(p) + ", expected 2");
                }
                continue;
            }
            if (denominator(p) != 1 || p > 0 || p < -3) {
                throw InvalidRootDatum("<" + root_names[i] + "^vee, " + root_names[j] + "> = " +
                                       rat_to_string(p) + ", expected an integer in [-3, 0]");
            }
            const Rat q = dot(simple_coroots[j], simple_roots[i]);
            if ((p == 0) != (q == 0)) {
                throw InvalidRootDatum("Cartan pairings of " + root_names[i] + " and " +
                                       root_names[j] + " vanish asymmetrically");
            }
        }
    }
    RootDatum d;
    d.torus_rank = torus_rank;
    d.simple_roots = std::move(simple_roots);
    d.simple_coroots = std::move(simple_coroots);
    d.root_names = std::move(root_names);
    return d;
}

RootDatum root_datum_a1() {
    return make_root_datum(1, {{Rat(2)}}, {{Rat(1)}});
}

RootDatum root_datum_a2() {
    return make_root_datum(2, {{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}},
                           {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});
}

RootDatum root_datum_a1_torus() {
    return make_root_datum(2, {{Rat(2), Rat(0)}}, {{Rat(1), Rat(0)}}, {"a12"});
}

HorosphericalDatum make_horospherical_datum(RootDatum roots, std::vector<std::size_t> parabolic_I,
                                            RatMat M_basis) {
    std::sort(parabolic_I.begin(), parabolic_I.end());
    parabolic_I.erase(std::unique(parabolic_I.begin(), parabolic_I.end()), parabolic_I.end());
    for (const auto i : parabolic_I) {
        if (i >= roots.simple_roots.size()) {
            throw InvalidRootDatum("parabolic index " + std::to_string(i) +
                                   " out of range (only " +
                                   std::to_string(roots.simple_roots.size()) + " simple roots)");
        }
    }
    if (M_basis.empty()) throw InvalidRootDatum("M_basis must have at least one row");
    for (const auto& row : M_basis) {
        if (row.size() != roots.torus_rank) {
            throw InvalidRootDatum("M_basis row of wrong length");
        }
        for (const auto& x : row) {
            if (denominator(x) != 1) {
                throw InvalidRootDatum("M_basis must have integer entries");
            }
        }
    }
    if (rank(M_basis) != M_basis.size()) {
        throw InvalidRootDatum("M_basis rows are linearly dependent");
    }
    HorosphericalDatum d;
    d.roots = std::move(roots);
    d.parabolic_I = std::move(parabolic_I);
    d.M_basis = std::move(M_basis);
    return d;
}

std::size_t lattice_rank(const HorosphericalDatum& d) { return d.M_basis.size(); }

RatVec iota_star(const HorosphericalDatum& d, const RatVec& u) {
    if (u.size() != d.roots.torus_rank) {
        throw DimensionMismatch("iota_star: vector length " + std::to_string(u.size()) +
                                ", torus rank " + std::to_string(d.roots.torus_rank));
    }
    RatVec out(d.M_basis.size());
    for (std::size_t i = 0; i < d.M_basis.size(); ++i) out[i] = dot(u, d.M_basis[i]);
    return out;
}

ColorTable colors_from_roots(const HorosphericalDatum& d) {
    ColorTable table;
    for (std::size_t i = 0; i < d.roots.simple_roots.size(); ++i) {
        if (std::binary_search(d.parabolic_I.begin(), d.parabolic_I.end(), i)) continue;
        table.add("D_" + d.roots.root_names[i], iota_star(d, d.roots.simple_coroots[i]));
    }
    return table;
}

Cone valuation_cone_horospherical(const HorosphericalDatum& d) {
    return Cone::from_inequalities(lattice_rank(d), {});
}

ColoredFan homogeneous_fan(const HorosphericalDatum& d) {
    ColoredFan fan;
    fan.ambient_rank = lattice_rank(d);
    fan.valuation_cone = valuation_cone_horospherical(d);
    fan.color_table = colors_from_roots(d);
    ColoredCone trivial;
    trivial.sigma = Cone::from_generators(fan.ambient_rank, {});
    fan.cones.push_back(std::move(trivial));
    return fan;
}

ColoredFan build_fan_input(const HorosphericalDatum& d, const std::vector<ConeSpec>& cones) {
    if (cones.empty()) return homogeneous_fan(d);
    ColoredFan fan;
    fan.ambient_rank = lattice_rank(d);
    fan.valuation_cone = valuation_cone_horospherical(d);
    fan.color_table = colors_from_roots(d);
    for (const auto& spec : cones) {
        fan.cones.push_back(
            make_colored_cone(fan.ambient_rank, fan.color_table, spec.colors, spec.v_generators));
    }
    return fan;
}

namespace {

// First color with nonzero point, in table order.
std::optional<RatVec> first_nonzero_color(const HorosphericalDatum& d) {
    const ColorTable table = colors_from_roots(d);
    for (const auto& color : table.entries()) {
        if (!is_zero(color.point)) return color.point;
    }
    return std::nullopt;
}

}  // namespace

RatMat homogeneous_hartogs_generators(const HorosphericalDatum& d, const CheckOptions& opts) {
    const std::size_t r = lattice_rank(d);
    if (r > 1) return hartogs_generators(homogeneous_fan(d), opts);
    RatMat gens;
    if (const auto u = first_nonzero_color(d)) {
        // gap closure of the auxiliary embedding with the single colored ray on u
        gens.push_back(vec_neg(primitive(*u)));
        const ColorTable table = colors_from_roots(d);
        for (const auto& color : table.entries()) {
            if (!is_zero(color.point)) gens.push_back(color.point);
        }
        sort_unique(gens);
    }
    return gens;
}

HartogsReport homogeneous_verdict(const HorosphericalDatum& d, const CheckOptions& opts) {
    const std::size_t r = lattice_rank(d);
    if (r > 1) {
        HartogsReport report = check_hartogs(homogeneous_fan(d), opts);
        report.notes.push_back("homogeneous case: Sigma = {(0, {})}, rank " + std::to_string(r) +
                               " > 1 decides via the generic criterion");
        return report;
    }

    HartogsReport report;
    report.rank = 1;
    report.fan_valid = true;
    report.complete = false;
    report.compactifiable_10 = false;  // V \ |Sigma| = R \ {0} has two components
    const RatMat gens = homogeneous_hartogs_generators(d, opts);
    const Cone c = Cone::from_generators(1, gens);
    const Cone l = c.dual();
    report.hartogs_cone = c;
    report.weight_cone = l;
    if (!gens.empty()) {
        report.hartogs = true;
        report.verdict = "hartogs";
        report.certificate.kind = Certificate::Kind::whole_space_witness;
        for (const int s : {1, -1}) {
            Certificate::Combination combo;
            combo.target = {Rat(s)};
            const auto coeffs = nonnegative_combination(gens, combo.target);
            if (!coeffs) throw Error("auxiliary witness infeasible despite nonzero color");
            for (std::size_t j = 0; j < gens.size(); ++j) {
                if ((*coeffs)[j] != 0) {
                    combo.terms.push_back(Certificate::Term{(*coeffs)[j], gens[j]});
                }
            }
            report.certificate.combinations.push_back(std::move(combo));
        }
        report.interpretation = {
            "some color has nonzero image: C = N_R for a (1,0)-compactifiable auxiliary "
            "embedding with one colored ray",
            "Lambda_+(Y) = {0}",
            "C[Y] = C",
            "H^1_c(X, O) = 0",
            "the homogeneous space admits the Hartogs phenomenon",
        };
        report.notes.push_back(
            "rank-one homogeneous case with a nonzero color: decided through an auxiliary "
            "embedding, although Omega itself is not (1,0)-compactifiable");
    } else {
        report.hartogs = false;
        report.verdict = "no_hartogs";
        report.certificate.kind = Certificate::Kind::nonzero_functional;
        report.certificate.lambda = l.generators().front();
        report.interpretation = {
            "every color has zero image: Omega = C* x G/P^-",
            "L != {0}: lambda = " + vec_to_string(report.certificate.lambda) +
                " is a nonzero element of Lambda_+(Y)",
            "C[Y] != C",
            "H^1_c(X, O) != 0",
            "the homogeneous space does not admit the Hartogs phenomenon",
        };
        report.notes.push_back(
            "rank-one homogeneous case with all colors of zero image: the C* factor splits off");
    }
    return report;
}

}  // namespace hartogs
