#pragma once

#include "hartogs/errors.hpp"
#include "hartogs/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace hartogs {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;  // row-major; each row is one vector

// -- elementwise helpers ------------------------------------------------------

bool is_zero(const RatVec& v);
Rat dot(const RatVec& a, const RatVec& b);  // throws DimensionMismatch
RatVec vec_add(const RatVec& a, const RatVec& b);
RatVec vec_sub(const RatVec& a, const RatVec& b);
RatVec vec_neg(const RatVec& a);
RatVec vec_scale(const Rat& c, const RatVec& a);
RatVec zero_vec(std::size_t n);
RatVec unit_vec(std::size_t n, std::size_t i);

// Strict lexicographic order on equal-length vectors; the canonical order used
// for every sorted generator list in the library.
bool lex_less(const RatVec& a, const RatVec& b);

// Lex-sorts rows and removes exact duplicates, in place.
void sort_unique(RatMat& rows);

std::string vec_to_string(const RatVec& v);  // "(a, b, ...)" with canonical rationals

// -- exact Gaussian elimination ----------------------------------------------

// Rank of the row span. Rows may be empty.
std::size_t rank(const RatMat& rows);

// Reduced row echelon form with zero rows dropped. The result is the canonical
// basis of the row space: pivot entries 1, pivot columns otherwise zero.
RatMat rref(RatMat rows);

// Canonical basis of {x : rows * x = 0} in ambient dimension ncols, one row per
// free column in increasing column order, each row primitive.
RatMat nullspace(const RatMat& rows, std::size_t ncols);

// -- canonical forms -----------------------------------------------------------

// The unique positive multiple of v with coprime integer entries. Direction is
// preserved: primitive((-2, 0)) = (-1, 0). Throws ZeroVector on v = 0.
RatVec primitive(const RatVec& v);

// Primitive representative of the line through v with positive leading nonzero
// entry; identifies h with -h when hyperplanes are collected.
RatVec canonical_normal(const RatVec& v);

// -- linear and conic solves ----------------------------------------------------

// Coefficients c with sum_i c_i * basis[i] = v, free coordinates set to 0;
// nullopt when v is outside the row span. Deterministic via RREF.
std::optional<RatVec> solve_membership(const RatMat& basis, const RatVec& v);

// Nonnegative coefficients c with sum_i c_i * gens[i] = target, or nullopt when
// target is outside the conic hull. Exact phase-1 simplex with Bland's rule, so
// the result is deterministic and the search always terminates.
std::optional<RatVec> nonnegative_combination(const RatMat& gens, const RatVec& target);

}  // namespace hartogs
