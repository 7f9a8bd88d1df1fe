#pragma once

#include "hartogs/hartogs.hpp"
#include "hartogs/horospherical.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace hartogs {

// Structurally malformed input: bad JSON, wrong types, unknown kind, bad
// rational literals, wrong vector lengths, unknown color references.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Structurally well-formed input whose mathematical data is inadmissible
// (Cartan pairing violations, dependent M_basis rows).
struct SemanticError : Error {
    explicit SemanticError(const std::string& what) : Error(what) {}
};

// A parsed input document: either a raw colored fan ("colored_fan") or a fan
// derived from root data ("horospherical"). An empty horospherical cone list
// denotes the homogeneous space itself.
struct ParsedInput {
    std::string kind;
    ColoredFan fan;
    std::optional<HorosphericalDatum> datum;
    bool homogeneous = false;
    std::optional<std::size_t> max_rank;  // from the document's options block
    bool auto_complete_faces = false;
};

ParsedInput parse_input_file(const std::string& path);
ParsedInput parse_input_json(const nlohmann::json& doc);

// Rationals render as JSON integers when the denominator is 1 and the value
// fits int64, as canonical "p/q" strings otherwise; parsing accepts both and
// rejects floating-point numbers.
nlohmann::json rat_to_json(const Rat& q);
Rat json_to_rat(const nlohmann::json& j);

// Deterministic serialization: nlohmann objects keep keys sorted, vectors and
// cells are canonical, so equal reports produce identical bytes.
nlohmann::json report_to_json(const HartogsReport& report, const std::string& kind);
std::string report_to_text(const HartogsReport& report, bool explain);

// The fields verify needs back from a serialized report: rank, the decided
// verdict and the certificate. Throws ParseError on malformed documents.
struct StoredReport {
    std::size_t rank = 0;
    std::optional<bool> hartogs;
    Certificate certificate;
};

StoredReport report_from_json(const nlohmann::json& doc);
StoredReport load_report_file(const std::string& path);

}  // namespace hartogs
