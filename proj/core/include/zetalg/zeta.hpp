#pragma once

#include "zetalg/character.hpp"
#include "zetalg/plattice.hpp"
#include "zetalg/series.hpp"
#include "zetalg/table_algebra.hpp"

#include <cstdint>
#include <vector>

namespace zetalg {

struct EnumerationBudget {
    uint64_t max_cells = 100000000ull; // HNF cells visited before giving up
    int threads = 0;                   // 0 = hardware concurrency / env
};

// Embedding data for one relevant prime: Lambda = Z_pB in idempotent
// coordinates plus the integer action matrices of the basis on b-coordinates.
struct LocalOrder {
    int64_t p = 0;
    PLattice lambda;
    std::vector<std::vector<Int>> actions; // A_1..A_{r-1} (A_0 is identity)
};

LocalOrder local_order(const TableAlgebra& T, const IdempotentBasis& E, int64_t p);

// Brute-force engine: counts full ZB-sublattices (= Lambda-stable sublattices
// of index p^k, k <= kmax) by enumerating Hermite normal forms over the
// lattice basis and checking closure under the regular representation.
// Throws ResourceBudgetExceeded when the cell budget runs out, see
// EnumerationBudget.
PowerSeriesZ count_ideals(const TableAlgebra& T, int64_t p, int kmax,
                          const EnumerationBudget& budget = {});

// One genus class of full Lambda-lattices, keyed by its canonical form.
struct GenusClass {
    PLattice representative;       // between Lambda and Lambda_0 when the
                                   // class has such a member, else the
                                   // normalized census lattice
    PLattice canonical;            // canonical_form(representative)
    int64_t index_exponent = 0;    // (representative : Lambda) = p^this
    Rat measure;                   // mu({M : M}^x)
    bool order = false;
    PowerSeriesZ by_integral;      // Z(Lambda, M) via the zeta integral
    PowerSeriesZ by_counting;      // same series by enumeration (engine both)
};

struct GenusDecomposition {
    int64_t p = 0;
    int rank = 0;
    PLattice lambda;
    std::vector<GenusClass> classes;
    PowerSeriesZ total; // sum over classes = full local counting series
};

std::vector<PLattice> genus_representatives(const LocalOrder& L);

// Genus zeta of the class of M by direct enumeration + canonical-form
// matching.
PowerSeriesZ genus_zeta_by_counting(const TableAlgebra& T, int64_t p,
                                    const PLattice& M, int kmax,
                                    const EnumerationBudget& budget = {});

// Exact measure of {x in S : |x| = p^{-k}} stratified by valuation vectors;
// coefficient k is (1-1/p)^{-r} p^k vol(S cap {sum v_i = k}).
PowerSeriesQ zeta_integral_series(const PLattice& S, int kmax);

// Z(Lambda, M) assembled per the zeta-integral formula:
// mu({M:M}^x)^{-1} * t^{(Lambda:M) exponent} * integral over {M : Lambda}.
// Coefficients must come out as nonnegative integers; anything else is a
// CrossCheckFailure (tripwire, not user error).
PowerSeriesZ genus_zeta_by_integral(const TableAlgebra& T, int64_t p,
                                    const PLattice& M, int kmax);

enum class Engine { counting, genus, both };

// Full decomposition at one prime.  engine=counting fills by_counting only,
// genus fills by_integral only, both fills and cross-checks them classwise
// (CrossCheckFailure on any mismatch).
GenusDecomposition genus_decomposition(const TableAlgebra& T, int64_t p,
                                       int kmax, Engine engine,
                                       const EnumerationBudget& budget = {});

// Local factor with adaptive truncation: starts at 2 (Lambda_0 : Lambda)
// exponent + max(3, r) and doubles while reconstruction reports
// NotStabilized.  Non-relevant primes short-circuit to g = 1.
LocalZeta local_zeta(const TableAlgebra& T, int64_t p, Engine engine = Engine::both,
                     const EnumerationBudget& budget = {});

GlobalZeta global_zeta(const TableAlgebra& T, Engine engine = Engine::both,
                       const EnumerationBudget& budget = {});

// First N Dirichlet coefficients a_1..a_N of the assembled Euler product;
// non-relevant primes contribute binomial(k + r - 1, r - 1) at p^k.
std::vector<Int> expand_dirichlet(const GlobalZeta& Z, int64_t N);

} // namespace zetalg
