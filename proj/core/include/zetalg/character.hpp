#pragma once

#include "zetalg/table_algebra.hpp"

#include <vector>

namespace zetalg {

// Irreducible characters of a split commutative table algebra.  Row 0 is the
// degree map; the remaining rows are sorted lexicographically by value
// vector, so output is deterministic.  values[i*r+j] = chi_i(b_j).
struct CharacterTable {
    int rank = 0;
    std::vector<Int> values;          // r x r, integral because split
    std::vector<Rat> multiplicities;  // m_i > 0, m_0 = 1
};

// Primitive idempotents e_i = (m_i/n) sum_j chi_i(b_j*)/k_j b_j.
// coeff[i*r+j] is the coefficient of b_j in e_i; basis_rows[j*r+i] = chi_i(b_j)
// expresses b_j in idempotent coordinates (the seed for every local lattice).
struct IdempotentBasis {
    int rank = 0;
    std::vector<Rat> coeff;        // r x r, e_i over the b_j
    std::vector<Int> basis_rows;   // r x r, b_j over the e_i
};

struct RelevantPrimes {
    Int f;                        // lcm of idempotent denominators
    std::vector<int64_t> primes;  // prime divisors of f, ascending
};

// Throws NotSplit (reporting a non-linear factor) when some basis element has
// an irrational eigenvalue; AxiomViolation if multiplicities fail to be
// positive.
CharacterTable character_table(const TableAlgebra& T);

IdempotentBasis idempotents(const TableAlgebra& T, const CharacterTable& C);

// n^r * k_1...k_{r-1} / (m_1...m_{r-1}); throws NonIntegralFrameNumber if the
// quotient is not an integer.
Int frame_number(const TableAlgebra& T, const CharacterTable& C);

// f | frame number always holds (checked); the primes of f are exactly the
// primes where Z_pB is not the maximal order.
RelevantPrimes relevant_primes(const TableAlgebra& T, const IdempotentBasis& E);

} // namespace zetalg
