#include "hartogs/hartogs.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace hartogs {

namespace {

bool strictly_inside(const Cone& full_dim, const RatVec& p) {
    for (const auto& h : full_dim.inequalities()) {
        if (dot(h, p) <= 0) return false;
    }
    return true;
}

struct GapGroup {
    std::vector<std::size_t> members;  // arrangement cell indices
    Cone closure;
};

struct GapAnalysis {
    Arrangement arr;
    std::vector<char> face_in_support;
    CellComplex complex;
    bool any_gap = false;
    bool gap_connected = true;
    RatMat gap_generators;
};

// The unique hyperplane normal through a face of dimension rank-1.
RatVec facet_normal(const Cone& facet_closure, std::size_t rank) {
    const RatMat perp = nullspace(facet_closure.generators(), rank);
    return canonical_normal(perp.front());
}

// Merging two adjacent convex gap groups is sound iff their union is convex
// (U cut by the shared facet hyperplane reproduces both halves exactly) and the
// interior of the union stays clear of the support. Under these tests every
// group remains a union of arrangement cells with boundary inside the
// arrangement, so relint-point sign checks decide all containments exactly.
bool try_merge(const GapAnalysis& ga, const std::vector<std::size_t>& cell_faces,
               const GapGroup& a, const GapGroup& b, std::size_t rank, GapGroup& merged) {
    for (std::size_t fi = 0; fi < ga.arr.faces.size(); ++fi) {
        const auto& f = ga.arr.faces[fi];
        if (f.dim + 1 != rank || ga.face_in_support[fi]) continue;
        const auto touches = [&](const std::vector<std::size_t>& members) {
            return std::any_of(members.begin(), members.end(), [&](std::size_t ci) {
                return sign_leq(f.signs, ga.arr.faces[cell_faces[ci]].signs);
            });
        };
        if (!touches(a.members) || !touches(b.members)) continue;

        RatVec h = facet_normal(f.closure, rank);
        const int sa = sgn(dot(h, a.closure.relative_interior_point()));
        if (sa == 0) continue;
        if (sa < 0) h = vec_neg(h);
        if (sgn(dot(h, b.closure.relative_interior_point())) >= 0) continue;

        RatMat gens = a.closure.generators();
        gens.insert(gens.end(), b.closure.generators().begin(), b.closure.generators().end());
        const Cone u = Cone::from_generators(rank, std::move(gens));
        if (intersect(u, Cone::from_inequalities(rank, {h})) != a.closure) continue;
        if (intersect(u, Cone::from_inequalities(rank, {vec_neg(h)})) != b.closure) continue;

        bool interior_clear = true;
        for (std::size_t gi = 0; gi < ga.arr.faces.size(); ++gi) {
            const auto& g = ga.arr.faces[gi];
            if (g.dim >= rank) continue;
            if (strictly_inside(u, g.relint_point) && ga.face_in_support[gi]) {
                interior_clear = false;
                break;
            }
        }
        if (!interior_clear) continue;

        merged.members = a.members;
        merged.members.insert(merged.members.end(), b.members.begin(), b.members.end());
        std::sort(merged.members.begin(), merged.members.end());
        merged.closure = Cone::from_inequalities(rank, u.inequalities());
        return true;
    }
    return false;
}

GapAnalysis analyze(const ColoredFan& fan, const CheckOptions& opts) {
    if (fan.ambient_rank > opts.max_rank) throw RankTooLarge(fan.ambient_rank, opts.max_rank);
    const std::size_t n = fan.ambient_rank;

    GapAnalysis ga;
    ga.arr = enumerate_faces(fan.valuation_cone, support_hyperplanes(fan), opts.parallel);
    ga.face_in_support.resize(ga.arr.faces.size());
    std::vector<std::size_t> cell_faces;  // arrangement indices of full-dimensional faces
    for (std::size_t i = 0; i < ga.arr.faces.size(); ++i) {
        ga.face_in_support[i] = support_contains(fan, ga.arr.faces[i].relint_point);
        if (ga.arr.faces[i].dim == n) cell_faces.push_back(i);
    }

    // connectivity of V \ |Sigma| over the gap faces of dimension >= 1, joined
    // along facet-of relations (chains realize every face-of pair)
    {
        std::vector<std::size_t> gap_faces;
        for (std::size_t i = 0; i < ga.arr.faces.size(); ++i) {
            if (!ga.face_in_support[i] && ga.arr.faces[i].dim >= 1) gap_faces.push_back(i);
        }
        std::vector<std::size_t> parent(gap_faces.size());
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        const std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (std::size_t i = 0; i < gap_faces.size(); ++i) {
            for (std::size_t j = 0; j < gap_faces.size(); ++j) {
                const auto& fi = ga.arr.faces[gap_faces[i]];
                const auto& fj = ga.arr.faces[gap_faces[j]];
                if (fi.dim + 1 == fj.dim && sign_leq(fi.signs, fj.signs)) {
                    parent[find(i)] = find(j);
                }
            }
        }
        std::size_t components = 0;
        for (std::size_t i = 0; i < gap_faces.size(); ++i) {
            if (find(i) == i) ++components;
        }
        ga.gap_connected = components <= 1;
    }

    // initial groups: one per gap cell, then greedy pairwise coarsening
    std::vector<GapGroup> groups;
    std::vector<std::size_t> support_cells;
    for (std::size_t ci = 0; ci < cell_faces.size(); ++ci) {
        if (ga.face_in_support[cell_faces[ci]]) {
            support_cells.push_back(ci);
        } else {
            groups.push_back(GapGroup{{ci}, ga.arr.faces[cell_faces[ci]].closure});
        }
    }
    ga.any_gap = !groups.empty();
    for (bool changed = true; changed;) {
        changed = false;
        std::sort(groups.begin(), groups.end(), [](const GapGroup& x, const GapGroup& y) {
            return cone_less(x.closure, y.closure);
        });
        for (std::size_t i = 0; i < groups.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < groups.size() && !changed; ++j) {
                GapGroup merged;
                if (try_merge(ga, cell_faces, groups[i], groups[j], n, merged)) {
                    groups[i] = std::move(merged);
                    groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(j));
                    changed = true;
                }
            }
        }
    }

    // assemble the cell complex: support cells verbatim, gap groups coarsened
    struct Final {
        Cone closure;
        bool in_support;
        std::vector<std::size_t> members;
    };
    std::vector<Final> finals;
    for (const auto ci : support_cells) {
        finals.push_back(Final{ga.arr.faces[cell_faces[ci]].closure, true, {ci}});
    }
    for (auto& g : groups) {
        finals.push_back(Final{std::move(g.closure), false, std::move(g.members)});
    }
    std::sort(finals.begin(), finals.end(),
              [](const Final& x, const Final& y) { return cone_less(x.closure, y.closure); });

    for (const auto& f : finals) {
        ga.complex.cells.push_back(CellComplex::Cell{f.closure, f.in_support});
        if (!f.in_support) {
            for (const auto& g : f.closure.generators()) ga.gap_generators.push_back(g);
        }
    }
    sort_unique(ga.gap_generators);

    for (std::size_t i = 0; i < finals.size(); ++i) {
        for (std::size_t j = i + 1; j < finals.size(); ++j) {
            bool adjacent = false;
            bool all_shared_in_support = true;
            for (std::size_t fi = 0; fi < ga.arr.faces.size(); ++fi) {
                const auto& f = ga.arr.faces[fi];
                if (f.dim + 1 != n) continue;
                const auto touches = [&](const Final& fin) {
                    return std::any_of(fin.members.begin(), fin.members.end(),
                                       [&](std::size_t ci) {
                                           return sign_leq(f.signs,
                                                           ga.arr.faces[cell_faces[ci]].signs);
                                       });
                };
                if (touches(finals[i]) && touches(finals[j])) {
                    adjacent = true;
                    if (!ga.face_in_support[fi]) all_shared_in_support = false;
                }
            }
            if (adjacent) {
                ga.complex.edges.push_back(CellComplex::Edge{i, j, all_shared_in_support});
            }
        }
    }
    return ga;
}

GapAnalysis analyze_valid(const ColoredFan& fan, const CheckOptions& opts) {
    const FanValidation v = validate_fan(fan, opts.auto_complete_faces);
    if (!v.valid) {
        throw PreconditionViolated("invalid colored fan: " + v.violations.front());
    }
    return analyze(v.completed, opts);
}

RatMat generator_list(const ColoredFan& fan, const GapAnalysis& ga) {
    RatMat gens = ga.gap_generators;
    for (const auto& color : fan.color_table.entries()) {
        if (!is_zero(color.point)) gens.push_back(color.point);
    }
    sort_unique(gens);
    return gens;
}

}  // namespace

CheckOptions default_check_options() {
    CheckOptions opts;
    if (const char* env = std::getenv("HARTOGS_MAX_RANK")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) opts.max_rank = static_cast<std::size_t>(v);
    }
    return opts;
}

CellComplex gap_regions(const ColoredFan& fan, const CheckOptions& opts) {
    return analyze_valid(fan, opts).complex;
}

bool is_compactifiable_10(const ColoredFan& fan, const CheckOptions& opts) {
    const GapAnalysis ga = analyze_valid(fan, opts);
    if (!ga.any_gap) throw IsCompact();
    return ga.gap_connected;
}

RatMat hartogs_generators(const ColoredFan& fan, const CheckOptions& opts) {
    const GapAnalysis ga = analyze_valid(fan, opts);
    if (!ga.any_gap) throw IsCompact();
    return generator_list(fan, ga);
}

Cone hartogs_cone(const ColoredFan& fan, const CheckOptions& opts) {
    return Cone::from_generators(fan.ambient_rank, hartogs_generators(fan, opts));
}

Cone weight_cone(const ColoredFan& fan, const CheckOptions& opts) {
    return hartogs_cone(fan, opts).dual();
}

bool is_complete(const ColoredFan& fan, std::size_t max_rank, bool parallel) {
    CheckOptions opts = default_check_options();
    opts.max_rank = max_rank;
    opts.parallel = parallel;
    return !analyze_valid(fan, opts).any_gap;
}

bool is_complete(const ColoredFan& fan) {
    const CheckOptions opts = default_check_options();
    return is_complete(fan, opts.max_rank, opts.parallel);
}

namespace {

Certificate build_certificate(bool hartogs_holds, std::size_t rank, const RatMat& gens,
                              const Cone& weight) {
    Certificate cert;
    if (!hartogs_holds) {
        cert.kind = Certificate::Kind::nonzero_functional;
        cert.lambda = weight.generators().front();  // L != {0}: lex-least generator
        return cert;
    }
    cert.kind = Certificate::Kind::whole_space_witness;
    for (std::size_t i = 0; i < rank; ++i) {
        for (const int s : {1, -1}) {
            Certificate::Combination combo;
            combo.target = unit_vec(rank, i);
            if (s < 0) combo.target = vec_neg(combo.target);
            const auto coeffs = nonnegative_combination(gens, combo.target);
            if (!coeffs) throw Error("whole-space witness infeasible despite C = N_R");
            for (std::size_t j = 0; j < gens.size(); ++j) {
                if ((*coeffs)[j] != 0) {
                    combo.terms.push_back(Certificate::Term{(*coeffs)[j], gens[j]});
                }
            }
            cert.combinations.push_back(std::move(combo));
        }
    }
    return cert;
}

}  // namespace

HartogsReport check_hartogs(const ColoredFan& fan, const CheckOptions& opts) {
    HartogsReport report;
    report.rank = fan.ambient_rank;

    const FanValidation validation = validate_fan(fan, opts.auto_complete_faces);
    report.fan_valid = validation.valid;
    report.violations = validation.violations;
    if (!validation.valid) {
        report.verdict = "invalid_fan";
        report.notes.push_back("fan axioms violated: the criterion is not applicable");
        return report;
    }

    const GapAnalysis ga = analyze(validation.completed, opts);
    report.gap_complex = ga.complex;
    report.complete = !ga.any_gap;
    if (!ga.any_gap) {
        report.verdict = "not_applicable_compact";
        report.notes.push_back("not applicable: complete fan (compact variety)");
        return report;
    }

    report.compactifiable_10 = ga.gap_connected;
    if (!ga.gap_connected) {
        report.verdict = "not_applicable_disconnected";
        report.notes.push_back(
            "not decided: V \\ |Sigma| has multiple connected components (b > 1), so the "
            "embedding admits no (1,0)-compactification");
        return report;
    }

    const RatMat gens = generator_list(validation.completed, ga);
    const Cone c = Cone::from_generators(fan.ambient_rank, gens);
    const Cone l = c.dual();
    report.hartogs_cone = c;
    report.weight_cone = l;
    const bool yes = c.is_whole_space();
    report.hartogs = yes;
    report.certificate = build_certificate(yes, fan.ambient_rank, gens, l);
    if (yes) {
        report.verdict = "hartogs";
        report.interpretation = {
            "C = N_R: the gap region and the colors positively span the colattice",
            "Lambda_+(Y) = {0}",
            "C[Y] = C",
            "H^1_c(X, O) = 0",
            "the pair (X, Y) admits the Hartogs phenomenon",
        };
    } else {
        report.verdict = "no_hartogs";
        report.interpretation = {
            "L != {0}: lambda = " + vec_to_string(report.certificate.lambda) +
                " is a nonzero element of Lambda_+(Y)",
            "C[Y] != C",
            "H^1_c(X, O) != 0",
            "the pair (X, Y) does not admit the Hartogs phenomenon",
        };
    }
    return report;
}

bool recheck_certificate(const Certificate& cert, bool hartogs, std::size_t rank,
                         const RatMat& generators) {
    if (!hartogs) {
        if (cert.kind != Certificate::Kind::nonzero_functional) return false;
        if (cert.lambda.size() != rank || is_zero(cert.lambda)) return false;
        for (const auto& g : generators) {
            if (dot(g, cert.lambda) < 0) return false;
        }
        return true;
    }
    if (cert.kind != Certificate::Kind::whole_space_witness) return false;
    RatMat targets;
    for (std::size_t i = 0; i < rank; ++i) {
        targets.push_back(unit_vec(rank, i));
        targets.push_back(vec_neg(unit_vec(rank, i)));
    }
    sort_unique(targets);
    RatMat seen;
    for (const auto& combo : cert.combinations) {
        if (combo.target.size() != rank) return false;
        seen.push_back(combo.target);
        RatVec sum = zero_vec(rank);
        for (const auto& term : combo.terms) {
            if (term.coefficient < 0) return false;
            if (!std::binary_search(generators.begin(), generators.end(), term.generator,
                                    lex_less)) {
                return false;
            }
            sum = vec_add(sum, vec_scale(term.coefficient, term.generator));
        }
        if (sum != combo.target) return false;
    }
    sort_unique(seen);
    return seen == targets;
}

bool verify_certificate(const HartogsReport& report, const ColoredFan& fan,
                        const CheckOptions& opts) {
    if (!report.hartogs.has_value()) return false;
    const RatMat gens = hartogs_generators(fan, opts);
    return recheck_certificate(report.certificate, *report.hartogs, fan.ambient_rank, gens);
}

}  // namespace hartogs
