#pragma once

// Internal glue between the brute-force enumerator and the genus pipeline.
// Not installed; everything here may change without notice.

#include "zetalg/zeta.hpp"

#include <cstdint>
#include <vector>

namespace zetalg {
namespace detail {

// One closed sublattice found by the enumerator: HNF rows (row-major int64)
// over the basis coordinates, of index p^k.
struct ClosedHit {
    std::vector<int64_t> rows;
    int k = 0;
};

// All A_j-closed HNF sublattices of Z_p^r with pivot exponent sum <= kmax,
// in deterministic order (by pivot composition, then digit order).  Checks
// the cell budget up front and throws ResourceBudgetExceeded if the full
// candidate census does not fit.
std::vector<ClosedHit> enumerate_closed(const LocalOrder& L, int kmax,
                                        const EnumerationBudget& budget);

// Number of HNF candidate matrices with pivot sum exactly k, i.e. the
// coefficient of t^k in prod_{j<r} 1/(1 - p^j t).
Int hnf_census(int rank, int64_t p, int k);

// Largest c <= kmax whose cumulative candidate census fits in max_cells.
int feasible_kmax(int rank, int64_t p, int kmax, uint64_t max_cells);

// Genus series of M over lambda with the unit measure already in hand, so
// callers that loop over classes pay for the residue census only once.
PowerSeriesZ genus_integral(const PLattice& lambda, const PLattice& M, int kmax,
                            const Rat& measure);

// All lambda-stable integral lattices with every pivot exponent <= cap, not
// required to contain lambda (implemented in plattice.cpp).  With cap large
// enough that p^cap Lambda_0 sits inside lambda this reaches a representative
// of every genus class: a normalized stable lattice N contains p^cap e_j for
// each j (pick x in N with unit j-th coordinate and multiply by p^cap e_j),
// so its pivots divide p^cap.
std::vector<PLattice> stable_census(const PLattice& lambda, int64_t cap);

} // namespace detail
} // namespace zetalg
