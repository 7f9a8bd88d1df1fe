#pragma once

#include "hartogs/exactlin.hpp"

#include <vector>

namespace hartogs {

// Generators of the dual of {x : <row, x> >= 0 for every row}, computed by the
// double description method with the lineality space split off first. The result
// is canonical: primitive vectors, lex-sorted, duplicate-free. It is minimal as
// a generating set: extreme rays of the pointed part plus a +/- basis of the
// lineality space. rank 0 constraints (empty or all-zero rows) yield +/- e_i.
RatMat dual_generators(std::size_t rank, RatMat rows);

// A rational convex polyhedral cone in N_R = Q^rank, kept in double description:
// a generator list (the input generators, canonicalized but possibly redundant)
// and the canonical minimal inequality list. Two cones are equal iff their
// inequality lists coincide, so equality is independent of how the generators
// were presented.
class Cone {
public:
    Cone() : rank_(0) {}  // the zero cone in the zero lattice; a placeholder value
    static Cone from_generators(std::size_t rank, RatMat gens);
    static Cone from_inequalities(std::size_t rank, RatMat ineqs);

    std::size_t ambient_rank() const { return rank_; }
    // canonical form of the defining generators: primitive, lex-sorted, unique
    const RatMat& generators() const { return gens_; }
    // canonical minimal H-representation; empty iff the cone is the whole space
    const RatMat& inequalities() const { return ineqs_; }

    Cone dual() const;
    bool contains(const RatVec& v) const;
    // strict on every non-equality inequality; v must also lie in the span
    bool contains_relint(const RatVec& v) const;

    bool is_zero() const { return gens_.empty(); }
    bool is_whole_space() const { return ineqs_.empty(); }
    std::size_t dim() const;            // rank of the generator matrix
    std::size_t lineality_dim() const;  // dim of the largest linear subspace inside
    // sum of the canonical generators; throws ZeroCone on the zero cone
    RatVec relative_interior_point() const;

    bool operator==(const Cone& other) const;
    bool operator!=(const Cone& other) const { return !(*this == other); }

private:
    Cone(std::size_t rank, RatMat gens, RatMat ineqs);
    std::size_t rank_;
    RatMat gens_;
    RatMat ineqs_;
};

Cone intersect(const Cone& a, const Cone& b);

// Whether f = c n h-perp for some valid inequality h of c (h = 0 included, so
// is_face(c, c) holds). Decided exactly from the canonical representations.
bool is_face(const Cone& f, const Cone& c);

// The facets (faces of codimension one inside c). Empty for the minimal face.
std::vector<Cone> proper_facets(const Cone& c);

// Every face of c including c itself and its minimal face, sorted by
// (dim, generators). Computed by closing proper_facets under iteration.
std::vector<Cone> all_faces(const Cone& c);

// h is an inequality of c with -h also an inequality, i.e. c lies in h-perp.
bool is_equality_constraint(const Cone& c, const RatVec& h);

// Total order on cones of equal ambient rank via (dim, generator list); the
// canonical order used for sorted face and cell listings.
bool cone_less(const Cone& a, const Cone& b);

std::string cone_to_string(const Cone& c);

}  // namespace hartogs
