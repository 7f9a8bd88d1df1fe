#pragma once

#include "hartogs/arrangement.hpp"
#include "hartogs/coloredfan.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hartogs {

// The decomposition of the valuation cone induced by the support hyperplanes,
// coarsened so that maximal connected gap regions appear as single cells.
// Invariants: cell closures tile V (their union is V, relative interiors are
// disjoint); every cell lies inside or outside |Sigma| as flagged; adjacency
// lists cells sharing a facet, flagged by whether every shared facet lies in
// the support (a gap-to-gap crossing exists iff some shared facet is outside).
struct CellComplex {
    struct Cell {
        Cone closure;
        bool in_support = false;
    };
    struct Edge {
        std::size_t a = 0;
        std::size_t b = 0;
        bool facet_in_support = false;
    };
    std::vector<Cell> cells;  // sorted canonically
    std::vector<Edge> edges;  // a < b, sorted
};

// Exact certificate attached to a Hartogs verdict. For a negative verdict: a
// nonzero functional lambda in L = C^dual, nonnegative on every generator fed
// into C. For a positive verdict: for each signed unit vector a nonnegative
// combination of those generators, witnessing C = N_R.
struct Certificate {
    enum class Kind { none, nonzero_functional, whole_space_witness };
    struct Term {
        Rat coefficient;
        RatVec generator;
    };
    struct Combination {
        RatVec target;
        std::vector<Term> terms;
    };
    Kind kind = Kind::none;
    RatVec lambda;                          // nonzero_functional
    std::vector<Combination> combinations;  // whole_space_witness
};

struct HartogsReport {
    std::size_t rank = 0;
    bool fan_valid = false;
    std::vector<std::string> violations;
    std::optional<bool> complete;
    std::optional<bool> compactifiable_10;
    std::optional<bool> hartogs;           // absent when the criterion does not apply
    std::optional<Cone> hartogs_cone;      // C
    std::optional<Cone> weight_cone;       // L = C^dual; hartogs iff L = {0}
    Certificate certificate;
    std::vector<std::string> interpretation;
    std::vector<std::string> notes;
    std::optional<CellComplex> gap_complex;
    std::string verdict;  // hartogs | no_hartogs | not_applicable_compact |
                          // not_applicable_disconnected | invalid_fan
};

struct CheckOptions {
    std::size_t max_rank = 4;  // cell-enumeration limit; see default_check_options()
    bool parallel = true;
    bool auto_complete_faces = false;
};

// max_rank from HARTOGS_MAX_RANK when set, 4 otherwise.
CheckOptions default_check_options();

// The cell decomposition of V with gap regions coarsened to maximal connected
// pieces. Pre: valid fan (throws PreconditionViolated otherwise); throws
// RankTooLarge above the limit.
CellComplex gap_regions(const ColoredFan& fan, const CheckOptions& opts = default_check_options());

// The complement V \ |Sigma| is connected, i.e. the embedding admits a
// (1,0)-compactification. Throws IsCompact when the fan is complete.
bool is_compactifiable_10(const ColoredFan& fan, const CheckOptions& opts = default_check_options());

// Generators fed into the Hartogs cone C: the canonical generators of every gap
// cell closure together with every nonzero color point of the table.
RatMat hartogs_generators(const ColoredFan& fan, const CheckOptions& opts = default_check_options());

// C = cone(cl(V \ |Sigma|) generators, color points). Throws IsCompact when complete.
Cone hartogs_cone(const ColoredFan& fan, const CheckOptions& opts = default_check_options());

// L = C^dual; the variety admits the Hartogs phenomenon iff L = {0}.
Cone weight_cone(const ColoredFan& fan, const CheckOptions& opts = default_check_options());

// Full pipeline: validate, decompose, decide connectivity, decide C = N_R and
// attach an exactly checkable certificate. Mathematical outcomes are reported
// in the result, never thrown.
HartogsReport check_hartogs(const ColoredFan& fan, const CheckOptions& opts = default_check_options());

// Pure-arithmetic certificate recheck against a generator set: no cone duality
// is recomputed, only sign conditions and exact linear combinations.
bool recheck_certificate(const Certificate& cert, bool hartogs, std::size_t rank,
                         const RatMat& generators);

// Recomputes the generator set from the fan and rechecks the report's
// certificate. Pre: the report carries a decided verdict.
bool verify_certificate(const HartogsReport& report, const ColoredFan& fan,
                        const CheckOptions& opts = default_check_options());

}  // namespace hartogs
