#pragma once

#include <stdexcept>
#include <string>

namespace hartogs {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Vector/matrix sizes disagree with the ambient rank.
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

// Primitive normalization of the zero vector was requested.
struct ZeroVector : Error {
    ZeroVector() : Error("primitive: zero vector has no primitive representative") {}
};

// Relative interior point of the zero cone was requested.
struct ZeroCone : Error {
    ZeroCone() : Error("relative_interior_point: the zero cone has an empty list of generators") {}
};

// A colored cone referenced a color name absent from the color table.
struct UnknownColor : Error {
    explicit UnknownColor(const std::string& name)
        : Error("unknown color '" + name + "'") {}
};

// A color name was inserted twice into a color table.
struct DuplicateColor : Error {
    explicit DuplicateColor(const std::string& name)
        : Error("duplicate color '" + name + "'") {}
};

// An operation that needs a non-compact variety was applied to a complete fan.
struct IsCompact : Error {
    IsCompact() : Error("the fan is complete: the variety is compact") {}
};

// Ambient rank exceeds the configured enumeration limit.
struct RankTooLarge : Error {
    RankTooLarge(std::size_t rank, std::size_t limit)
        : Error("ambient rank " + std::to_string(rank) +
                " exceeds the cell-enumeration limit " + std::to_string(limit) +
                " (raise with --max-rank or HARTOGS_MAX_RANK)") {}
};

// Root-datum or lattice data violates its defining pairing conditions.
struct InvalidRootDatum : Error {
    explicit InvalidRootDatum(const std::string& what) : Error(what) {}
};

// A precondition of an operation was violated (e.g. invalid fan fed to gap_regions).
struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

}  // namespace hartogs
