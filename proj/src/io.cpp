#include "hartogs/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace hartogs {

using nlohmann::json;

namespace {

const json& require_field(const json& doc, const char* key) {
    const auto it = doc.find(key);
    if (it == doc.end()) throw ParseError(std::string("missing field '") + key + "'");
    return *it;
}

std::size_t to_size(const json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
        throw ParseError(std::string(what) + " must be a nonnegative integer");
    }
    return j.get<std::size_t>();
}

RatVec json_to_vec(const json& j, std::size_t expect, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
    RatVec v;
    v.reserve(j.size());
    for (const auto& x : j) v.push_back(json_to_rat(x));
    if (v.size() != expect) {
        throw ParseError(std::string(what) + " has length " + std::to_string(v.size()) +
                         ", expected " + std::to_string(expect));
    }
    return v;
}

RatMat json_to_mat(const json& j, std::size_t expect, const char* what) {
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of vectors");
    RatMat m;
    m.reserve(j.size());
    for (const auto& row : j) m.push_back(json_to_vec(row, expect, what));
    return m;
}

json vec_to_json(const RatVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(rat_to_json(x));
    return a;
}

json mat_to_json(const RatMat& m) {
    json a = json::array();
    for (const auto& row : m) a.push_back(vec_to_json(row));
    return a;
}

void parse_options(const json& doc, ParsedInput& input) {
    const auto it = doc.find("options");
    if (it == doc.end()) return;
    if (!it->is_object()) throw ParseError("options must be an object");
    for (const auto& [key, value] : it->items()) {
        if (key == "auto_complete_faces") {
            if (!value.is_boolean()) throw ParseError("options.auto_complete_faces must be a boolean");
            input.auto_complete_faces = value.get<bool>();
        } else if (key == "max_rank") {
            input.max_rank = to_size(value, "options.max_rank");
        } else {
            throw ParseError("unknown option '" + key + "'");
        }
    }
}

Cone parse_valuation_cone(const json& j, std::size_t rank) {
    if (j.is_string()) {
        if (j.get<std::string>() != "whole_space") {
            throw ParseError("valuation_cone string must be \"whole_space\"");
        }
        return Cone::from_inequalities(rank, {});
    }
    if (j.is_object()) {
        return Cone::from_generators(
            rank, json_to_mat(require_field(j, "generators"), rank, "valuation_cone generator"));
    }
    throw ParseError("valuation_cone must be \"whole_space\" or {\"generators\": [...]}");
}

std::vector<ConeSpec> parse_cone_specs(const json& doc, std::size_t rank) {
    std::vector<ConeSpec> specs;
    const json& cones = require_field(doc, "cones");
    if (!cones.is_array()) throw ParseError("cones must be an array");
    for (const auto& c : cones) {
        if (!c.is_object()) throw ParseError("each cone must be an object");
        ConeSpec spec;
        if (const auto it = c.find("colors"); it != c.end()) {
            if (!it->is_array()) throw ParseError("cone colors must be an array of names");
            for (const auto& name : *it) {
                if (!name.is_string()) throw ParseError("cone colors must be strings");
                spec.colors.push_back(name.get<std::string>());
            }
        }
        const auto vgens = c.find("v_generators");
        const auto alias = c.find("generators_from_V");  // accepted spelling
        if (vgens != c.end() && alias != c.end()) {
            throw ParseError("give v_generators or generators_from_V, not both");
        }
        if (vgens != c.end()) spec.v_generators = json_to_mat(*vgens, rank, "v-generator");
        if (alias != c.end()) spec.v_generators = json_to_mat(*alias, rank, "v-generator");
        specs.push_back(std::move(spec));
    }
    return specs;
}

ParsedInput parse_colored_fan(const json& doc) {
    ParsedInput input;
    input.kind = "colored_fan";
    const std::size_t rank = to_size(require_field(doc, "rank"), "rank");
    input.fan.ambient_rank = rank;
    input.fan.valuation_cone = parse_valuation_cone(require_field(doc, "valuation_cone"), rank);
    if (const auto it = doc.find("colors"); it != doc.end()) {
        if (!it->is_array()) throw ParseError("colors must be an array");
        for (const auto& c : *it) {
            if (!c.is_object()) throw ParseError("each color must be an object");
            const json& name = require_field(c, "name");
            if (!name.is_string()) throw ParseError("color name must be a string");
            try {
                input.fan.color_table.add(name.get<std::string>(),
                                          json_to_vec(require_field(c, "point"), rank, "color point"));
            } catch (const DuplicateColor& e) {
                throw ParseError(e.what());
            }
        }
    }
    for (const auto& spec : parse_cone_specs(doc, rank)) {
        try {
            input.fan.cones.push_back(
                make_colored_cone(rank, input.fan.color_table, spec.colors, spec.v_generators));
        } catch (const UnknownColor& e) {
            throw ParseError(e.what());
        }
    }
    parse_options(doc, input);
    return input;
}

ParsedInput parse_horospherical(const json& doc) {
    ParsedInput input;
    input.kind = "horospherical";
    const std::size_t torus_rank = to_size(require_field(doc, "torus_rank"), "torus_rank");
    RatMat roots = json_to_mat(require_field(doc, "simple_roots"), torus_rank, "simple root");
    RatMat coroots =
        json_to_mat(require_field(doc, "simple_coroots"), torus_rank, "simple coroot");
    std::vector<std::string> names;
    if (const auto it = doc.find("root_names"); it != doc.end()) {
        if (!it->is_array()) throw ParseError("root_names must be an array of strings");
        for (const auto& n : *it) {
            if (!n.is_string()) throw ParseError("root_names must be strings");
            names.push_back(n.get<std::string>());
        }
    }
    std::vector<std::size_t> parabolic;
    const auto pi = doc.find("parabolic_I");
    const auto pi_alias = doc.find("I");  // accepted spelling
    if (pi != doc.end() && pi_alias != doc.end()) {
        throw ParseError("give parabolic_I or I, not both");
    }
    const auto pit = pi != doc.end() ? pi : pi_alias;
    if (pit != doc.end()) {
        if (!pit->is_array()) throw ParseError("parabolic_I must be an array of indices");
        for (const auto& idx : *pit) parabolic.push_back(to_size(idx, "parabolic_I index"));
    }
    RatMat m_basis = json_to_mat(require_field(doc, "M_basis"), torus_rank, "M_basis row");

    try {
        RootDatum rd = make_root_datum(torus_rank, std::move(roots), std::move(coroots),
                                       std::move(names));
        input.datum = make_horospherical_datum(std::move(rd), std::move(parabolic),
                                               std::move(m_basis));
    } catch (const InvalidRootDatum& e) {
        throw SemanticError(e.what());
    }

    const std::size_t rank = lattice_rank(*input.datum);
    std::vector<ConeSpec> specs = parse_cone_specs(doc, rank);
    input.homogeneous = specs.empty();
    try {
        input.fan = build_fan_input(*input.datum, specs);
    } catch (const UnknownColor& e) {
        throw ParseError(e.what());
    }
    parse_options(doc, input);
    return input;
}

}  // namespace

Rat json_to_rat(const json& j) {
    if (j.is_number_float()) {
        throw ParseError("floating-point numbers are not accepted; use integers or \"p/q\"");
    }
    if (j.is_number_integer() || j.is_number_unsigned()) {
        return Rat(Int(j.dump()));  // dump renders the full-precision integer literal
    }
    if (j.is_string()) {
        try {
            return rat_from_string(j.get<std::string>());
        } catch (const Error& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("expected a rational (integer or \"p/q\" string), got " + j.dump());
}

json rat_to_json(const Rat& q) {
    if (denominator(q) == 1) {
        const Int num = numerator(q);
        if (num >= std::numeric_limits<std::int64_t>::min() &&
            num <= std::numeric_limits<std::int64_t>::max()) {
            return json(num.convert_to<std::int64_t>());
        }
    }
    return json(rat_to_string(q));
}

ParsedInput parse_input_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("input document must be a JSON object");
    const json& kind = require_field(doc, "kind");
    if (!kind.is_string()) throw ParseError("kind must be a string");
    const std::string k = kind.get<std::string>();
    if (k == "colored_fan") return parse_colored_fan(doc);
    if (k == "horospherical") return parse_horospherical(doc);
    throw ParseError("unknown kind '" + k + "' (expected colored_fan or horospherical)");
}

ParsedInput parse_input_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return parse_input_json(doc);
}

namespace {

json certificate_to_json(const Certificate& cert) {
    switch (cert.kind) {
        case Certificate::Kind::none:
            return json();
        case Certificate::Kind::nonzero_functional: {
            json c;
            c["kind"] = "nonzero_functional";
            c["lambda"] = vec_to_json(cert.lambda);
            return c;
        }
        case Certificate::Kind::whole_space_witness: {
            json c;
            c["kind"] = "whole_space_witness";
            json combos = json::array();
            for (const auto& combo : cert.combinations) {
                json jc;
                jc["target"] = vec_to_json(combo.target);
                json terms = json::array();
                for (const auto& term : combo.terms) {
                    json jt;
                    jt["coefficient"] = rat_to_json(term.coefficient);
                    jt["generator"] = vec_to_json(term.generator);
                    terms.push_back(std::move(jt));
                }
                jc["terms"] = std::move(terms);
                combos.push_back(std::move(jc));
            }
            c["combinations"] = std::move(combos);
            return c;
        }
    }
    return json();
}

Certificate certificate_from_json(const json& j) {
    Certificate cert;
    if (j.is_null()) return cert;
    if (!j.is_object()) throw ParseError("certificate must be an object or null");
    const json& kind = require_field(j, "kind");
    if (kind == "nonzero_functional") {
        cert.kind = Certificate::Kind::nonzero_functional;
        const json& lambda = require_field(j, "lambda");
        if (!lambda.is_array()) throw ParseError("certificate lambda must be an array");
        for (const auto& x : lambda) cert.lambda.push_back(json_to_rat(x));
        return cert;
    }
    if (kind == "whole_space_witness") {
        cert.kind = Certificate::Kind::whole_space_witness;
        const json& combos = require_field(j, "combinations");
        if (!combos.is_array()) throw ParseError("certificate combinations must be an array");
        for (const auto& jc : combos) {
            Certificate::Combination combo;
            const json& target = require_field(jc, "target");
            if (!target.is_array()) throw ParseError("combination target must be an array");
            for (const auto& x : target) combo.target.push_back(json_to_rat(x));
            const json& terms = require_field(jc, "terms");
            if (!terms.is_array()) throw ParseError("combination terms must be an array");
            for (const auto& jt : terms) {
                Certificate::Term term;
                term.coefficient = json_to_rat(require_field(jt, "coefficient"));
                const json& gen = require_field(jt, "generator");
                if (!gen.is_array()) throw ParseError("term generator must be an array");
                for (const auto& x : gen) term.generator.push_back(json_to_rat(x));
                combo.terms.push_back(std::move(term));
            }
            cert.combinations.push_back(std::move(combo));
        }
        return cert;
    }
    throw ParseError("unknown certificate kind " + kind.dump());
}

}  // namespace

json report_to_json(const HartogsReport& report, const std::string& kind) {
    json doc;
    doc["format"] = "hartogs-report";
    doc["version"] = 1;
    doc["kind"] = kind;
    doc["rank"] = report.rank;
    doc["fan_valid"] = report.fan_valid;
    doc["violations"] = report.violations;
    doc["complete"] = report.complete ? json(*report.complete) : json();
    doc["compactifiable_10"] =
        report.compactifiable_10 ? json(*report.compactifiable_10) : json();
    doc["hartogs"] = report.hartogs ? json(*report.hartogs) : json();
    doc["verdict"] = report.verdict;
    doc["hartogs_cone_generators"] =
        report.hartogs_cone ? mat_to_json(report.hartogs_cone->generators()) : json();
    doc["weight_cone_generators"] =
        report.weight_cone ? mat_to_json(report.weight_cone->generators()) : json();
    doc["certificate"] = certificate_to_json(report.certificate);
    if (report.gap_complex) {
        json cells = json::array();
        for (const auto& cell : report.gap_complex->cells) {
            json jc;
            jc["generators"] = mat_to_json(cell.closure.generators());
            jc["in_support"] = cell.in_support;
            cells.push_back(std::move(jc));
        }
        doc["cells"] = std::move(cells);
        json edges = json::array();
        for (const auto& e : report.gap_complex->edges) {
            json je;
            je["a"] = e.a;
            je["b"] = e.b;
            je["facet_in_support"] = e.facet_in_support;
            edges.push_back(std::move(je));
        }
        doc["adjacency"] = std::move(edges);
    } else {
        doc["cells"] = json();
        doc["adjacency"] = json();
    }
    doc["interpretation"] = report.interpretation;
    doc["notes"] = report.notes;
    return doc;
}

StoredReport report_from_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("report must be a JSON object");
    StoredReport stored;
    stored.rank = to_size(require_field(doc, "rank"), "rank");
    const json& h = require_field(doc, "hartogs");
    if (h.is_boolean()) {
        stored.hartogs = h.get<bool>();
    } else if (!h.is_null()) {
        throw ParseError("hartogs must be a boolean or null");
    }
    stored.certificate = certificate_from_json(require_field(doc, "certificate"));
    return stored;
}

StoredReport load_report_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return report_from_json(doc);
}

std::string report_to_text(const HartogsReport& report, bool explain) {
    std::ostringstream out;
    out << "fan: " << (report.fan_valid ? "valid" : "INVALID") << "\n";
    for (const auto& v : report.violations) out << "  - " << v << "\n";
    out << "rank: " << report.rank << "\n";
    const auto tri = [](const std::optional<bool>& b) {
        return !b ? std::string("-") : (*b ? std::string("yes") : std::string("no"));
    };
    out << "complete: " << tri(report.complete) << "\n";
    out << "(1,0)-compactifiable: " << tri(report.compactifiable_10) << "\n";
    if (report.verdict == "hartogs") {
        out << "HARTOGS: yes\n";
    } else if (report.verdict == "no_hartogs") {
        out << "HARTOGS: no\n";
    } else if (report.verdict == "not_applicable_compact") {
        out << "HARTOGS: not applicable: complete fan (compact variety)\n";
    } else if (report.verdict == "not_applicable_disconnected") {
        out << "HARTOGS: not applicable: V \\ |Sigma| is disconnected\n";
    } else {
        out << "HARTOGS: not applicable: invalid fan\n";
    }
    switch (report.certificate.kind) {
        case Certificate::Kind::none:
            break;
        case Certificate::Kind::nonzero_functional:
            out << "certificate: nonzero functional lambda = "
                << vec_to_string(report.certificate.lambda) << "\n";
            break;
        case Certificate::Kind::whole_space_witness:
            out << "certificate: whole-space witness ("
                << report.certificate.combinations.size() << " nonnegative combinations)\n";
            break;
    }
    if (!report.interpretation.empty()) {
        out << "interpretation:\n";
        for (const auto& line : report.interpretation) out << "  - " << line << "\n";
    }
    if (!report.notes.empty()) {
        out << "notes:\n";
        for (const auto& line : report.notes) out << "  - " << line << "\n";
    }
    if (explain) {
        if (report.gap_complex) {
            out << "cells:\n";
            for (std::size_t i = 0; i < report.gap_complex->cells.size(); ++i) {
                const auto& cell = report.gap_complex->cells[i];
                out << "  [" << i << "] " << cone_to_string(cell.closure)
                    << (cell.in_support ? " support" : " gap") << "\n";
            }
            if (!report.gap_complex->edges.empty()) {
                out << "adjacency:\n";
                for (const auto& e : report.gap_complex->edges) {
                    out << "  cells " << e.a << " and " << e.b << " share a facet ("
                        << (e.facet_in_support ? "in support" : "gap") << ")\n";
                }
            }
        }
        if (report.hartogs_cone) {
            out << "C generators:";
            for (const auto& g : report.hartogs_cone->generators()) out << " " << vec_to_string(g);
            out << "\n";
        }
        if (report.weight_cone) {
            out << "L generators:";
            for (const auto& g : report.weight_cone->generators()) out << " " << vec_to_string(g);
            out << "\n";
        }
        if (report.certificate.kind == Certificate::Kind::whole_space_witness) {
            out << "witness detail:\n";
            for (const auto& combo : report.certificate.combinations) {
                out << "  " << vec_to_string(combo.target) << " =";
                bool first = true;
                for (const auto& term : combo.terms) {
                    out << (first ? " " : " + ") << rat_to_string(term.coefficient) << " * "
                        << vec_to_string(term.generator);
                    first = false;
                }
                out << "\n";
            }
        }
    }
    return out.str();
}

}  // namespace hartogs
