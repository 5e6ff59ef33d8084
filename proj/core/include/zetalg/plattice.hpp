#pragma once

#include "zetalg/numeric.hpp"

#include <cstdint>
#include <vector>

namespace zetalg {

// Full Z_p-lattice in Q_p^r, always held in canonical p-local Hermite normal
// form: rows upper triangular, row i pivot exactly p^{a_i} (a_i may be
// negative), every entry above a pivot reduced to its canonical residue
// m * p^v with m in [0, p^{a_j - v}) modulo the column pivot p^{a_j}.
// Coordinates are idempotent coordinates of the ambient split algebra, so the
// algebra acts diagonally; the lattice type itself is algebra-agnostic.
class PLattice {
public:
    // Reduces an arbitrary spanning set (>= rank rows) to canonical form.
    // Throws Singular if the rows do not span a full lattice.
    static PLattice from_rows(int64_t p, int rank, std::vector<Rat> rows);

    // Trusted fast path: rows already in canonical form (not re-checked
    // beyond debug assertions).  Used by enumerators that generate canonical
    // matrices directly.
    static PLattice from_canonical(int64_t p, int rank, std::vector<Rat> rows);

    int64_t p() const { return p_; }
    int rank() const { return rank_; }
    const Rat& entry(int i, int j) const { return rows_[static_cast<size_t>(i) * rank_ + j]; }
    const std::vector<Rat>& rows() const { return rows_; }
    int64_t pivot_exponent(int i) const;
    int64_t pivot_exponent_sum() const;

    bool contains(const std::vector<Rat>& vec) const;
    bool contains(const PLattice& other) const; // other subseteq this

    bool operator==(const PLattice& o) const {
        return p_ == o.p_ && rank_ == o.rank_ && rows_ == o.rows_;
    }
    bool operator!=(const PLattice& o) const { return !(*this == o); }
    // Lexicographic on (pivot exponents, entries); any total order works for
    // deterministic sorting.
    bool operator<(const PLattice& o) const;

private:
    PLattice(int64_t p, int rank, std::vector<Rat> rows)
        : p_(p), rank_(rank), rows_(std::move(rows)) {}
    int64_t p_ = 0;
    int rank_ = 0;
    std::vector<Rat> rows_;
};

// Sign convention: index(L, N) = sum of pivot exponents of N minus those of
// L, i.e. (L : N) = p^{exponent} as a generalized index; positive when N is
// inside L with finite index.
struct PIndex {
    int64_t exponent = 0;
};

// Isomorphism invariants read off the normal form: pivot exponents plus, per
// row, the number of consecutive zero entries immediately after the pivot
// (only the leading run is invariant under diagonal unit scaling).
struct DiagonalInvariant {
    std::vector<int64_t> pivot_exponents;
    std::vector<int> zero_runs;
    bool operator==(const DiagonalInvariant&) const = default;
};

// Haar measure of the unit group of the multiplier ring {M : M}, normalized
// so the maximal order's units have measure 1.
struct UnitMeasure {
    Rat value;
};

PLattice identity_lattice(int64_t p, int rank); // Lambda_0 = Z_p^r

PIndex index(const PLattice& L, const PLattice& N);
PLattice sum(const PLattice& L, const PLattice& N);
PLattice intersect(const PLattice& L, const PLattice& N);

// Conductor {M : L} = {x in Q_p^r : M x subseteq L} under the diagonal action.
PLattice conductor(const PLattice& M, const PLattice& L);

// Multiplicatively closed and unital, i.e. an order of the split algebra.
bool is_order(const PLattice& M);

// All Lambda-stable lattices N with Lambda subseteq N subseteq Lambda_0,
// sorted by descending index over Lambda (maximal order first), ties broken
// lexicographically.  Lambda must be an order inside Lambda_0.
std::vector<PLattice> overlattices(const PLattice& lambda);

// Scales each coordinate by p^{-min valuation} so every column touches
// valuation 0.
PLattice normalize(const PLattice& N);

// Lexicographically minimal lattice in the orbit of N under diagonal unit
// scaling; two normalized lattices are isomorphic as modules over any common
// order iff their canonical forms are equal.  Units are enumerated modulo
// p^P where P is the smallest precision at which p^P Lambda_0 lands in the
// multiplier ring {N : N}; scalings congruent mod p^P differ by a unit of
// {N : N} and give the same image, so the finite scan covers the orbit.
PLattice canonical_form(const PLattice& N);

DiagonalInvariant diagonal_invariant(const PLattice& N);

// Counts unit residues of {M : M} at two precisions and cross-checks the
// scaling; throws PrecisionUnstable if the two counts disagree.
UnitMeasure unit_measure(const PLattice& M);

// Column rescaling by diagonal (c_0..c_{r-1}), all nonzero: the image lattice
// N * diag(c).  Re-reduces to canonical form.
PLattice scale_coordinates(const PLattice& N, const std::vector<Rat>& c);

} // namespace zetalg
