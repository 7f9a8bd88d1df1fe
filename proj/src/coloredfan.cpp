#include "hartogs/coloredfan.hpp"

#include <algorithm>

namespace hartogs {

void ColorTable::add(std::string name, RatVec point) {
    if (index_of(name)) throw DuplicateColor(name);
    colors_.push_back(Color{std::move(name), std::move(point)});
}

std::optional<std::size_t> ColorTable::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < colors_.size(); ++i) {
        if (colors_[i].name == name) return i;
    }
    return std::nullopt;
}

ColoredCone make_colored_cone(std::size_t rank, const ColorTable& table,
                              const std::vector<std::string>& color_names,
                              RatMat v_generators) {
    ColoredCone cc;
    for (const auto& name : color_names) {
        const auto idx = table.index_of(name);
        if (!idx) throw UnknownColor(name);
        cc.color_refs.push_back(*idx);
    }
    std::sort(cc.color_refs.begin(), cc.color_refs.end());
    cc.color_refs.erase(std::unique(cc.color_refs.begin(), cc.color_refs.end()),
                        cc.color_refs.end());
    for (const auto& v : v_generators) {
        if (v.size() != rank) {
            throw DimensionMismatch("make_colored_cone: v-generator length " +
                                    std::to_string(v.size()) + " in ambient rank " +
                                    std::to_string(rank));
        }
        if (!is_zero(v)) cc.v_generators.push_back(primitive(v));
    }
    sort_unique(cc.v_generators);
    RatMat gens = cc.v_generators;
    for (const auto ref : cc.color_refs) gens.push_back(table.at(ref).point);
    cc.sigma = Cone::from_generators(rank, std::move(gens));
    return cc;
}

bool relint_meets_valuation(const Cone& sigma, const Cone& V) {
    if (sigma.is_zero()) return true;  // relint({0}) = {0} and 0 lies in V
    const Cone meet = intersect(sigma, V);
    if (meet.is_zero()) return false;
    return sigma.contains_relint(meet.relative_interior_point());
}

std::vector<std::string> validate_colored_cone(const ColoredFan& fan, const ColoredCone& cc,
                                               std::size_t index) {
    std::vector<std::string> out;
    const std::string label = "cone " + std::to_string(index);
    if (cc.sigma.lineality_dim() > 0) {
        out.push_back(label + ": contains a line");
    }
    for (const auto ref : cc.color_refs) {
        const Color& color = fan.color_table.at(ref);
        if (is_zero(color.point)) {
            out.push_back(label + ": color '" + color.name +
                          "' has zero image and cannot lie in F");
        }
    }
    for (const auto& v : cc.v_generators) {
        if (!fan.valuation_cone.contains(v)) {
            out.push_back(label + ": v-generator " + vec_to_string(v) +
                          " outside the valuation cone");
        }
    }
    if (!relint_meets_valuation(cc.sigma, fan.valuation_cone)) {
        out.push_back(label + ": relative interior misses V");
    }
    return out;
}

namespace {

std::string color_set_to_string(const ColoredFan& fan, const std::vector<std::size_t>& refs) {
    std::string s = "{";
    for (std::size_t i = 0; i < refs.size(); ++i) {
        if (i) s += ", ";
        s += fan.color_table.at(refs[i]).name;
    }
    return s + "}";
}

}  // namespace

FanValidation validate_fan(const ColoredFan& fan, bool auto_complete_faces) {
    FanValidation result;
    result.completed = fan;
    auto& cones = result.completed.cones;
    auto& violations = result.violations;

    if (rank(fan.valuation_cone.generators()) != fan.ambient_rank) {
        violations.push_back("valuation cone is not full-dimensional");
    }
    if (cones.empty()) {
        violations.push_back("empty fan: a colored fan must contain the trivial colored cone (0, {})");
    }

    // per-cone axioms and closure under colored faces; the list may grow, so
    // appended faces are validated by the same loop
    for (std::size_t i = 0; i < cones.size(); ++i) {
        const auto own = validate_colored_cone(result.completed, cones[i], i);
        violations.insert(violations.end(), own.begin(), own.end());
        if (!own.empty()) continue;  // face closure of a broken cone is noise

        for (const auto& face : all_faces(cones[i].sigma)) {
            if (face == cones[i].sigma) continue;
            if (!relint_meets_valuation(face, fan.valuation_cone)) continue;
            std::vector<std::size_t> face_refs;
            for (const auto ref : cones[i].color_refs) {
                if (face.contains(fan.color_table.at(ref).point)) face_refs.push_back(ref);
            }
            RatMat face_vgens;
            for (const auto& v : cones[i].v_generators) {
                if (face.contains(v)) face_vgens.push_back(v);
            }
            const bool present = std::any_of(
                cones.begin(), cones.end(), [&](const ColoredCone& other) {
                    return other.sigma == face && other.color_refs == face_refs;
                });
            if (present) continue;
            if (auto_complete_faces) {
                ColoredCone appended;
                appended.sigma = face;
                appended.color_refs = face_refs;
                appended.v_generators = std::move(face_vgens);
                cones.push_back(std::move(appended));
            } else {
                violations.push_back("cone " + std::to_string(i) + ": missing colored face " +
                                     cone_to_string(face) + " with colors " +
                                     color_set_to_string(result.completed, face_refs));
            }
        }
    }

    for (std::size_t i = 0; i < cones.size(); ++i) {
        for (std::size_t j = i + 1; j < cones.size(); ++j) {
            if (cones[i].sigma == cones[j].sigma && cones[i].color_refs == cones[j].color_refs) {
                violations.push_back("cones " + std::to_string(i) + " and " +
                                     std::to_string(j) + ": duplicate colored cone");
                continue;
            }
            // relint-uniqueness: relative interiors must be disjoint inside V
            const Cone meet =
                intersect(intersect(cones[i].sigma, cones[j].sigma), fan.valuation_cone);
            if (meet.is_zero()) continue;
            const RatVec p = meet.relative_interior_point();
            if (cones[i].sigma.contains_relint(p) && cones[j].sigma.contains_relint(p)) {
                violations.push_back("cones " + std::to_string(i) + " and " +
                                     std::to_string(j) +
                                     ": relative interiors overlap inside the valuation cone "
                                     "(relint-uniqueness fails)");
            }
        }
    }

    result.valid = violations.empty();
    return result;
}

bool support_contains(const ColoredFan& fan, const RatVec& v) {
    return std::any_of(fan.cones.begin(), fan.cones.end(),
                       [&](const ColoredCone& cc) { return cc.sigma.contains(v); });
}

RatMat support_hyperplanes(const ColoredFan& fan) {
    RatMat out;
    for (const auto& cc : fan.cones) {
        for (const auto& h : cc.sigma.inequalities()) out.push_back(canonical_normal(h));
    }
    for (const auto& h : fan.valuation_cone.inequalities()) out.push_back(canonical_normal(h));
    sort_unique(out);
    return out;
}

}  // namespace hartogs
