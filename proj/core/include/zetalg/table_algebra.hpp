#pragma once

#include "zetalg/numeric.hpp"

#include <vector>

namespace zetalg {

// Standard basis b_0..b_{r-1} of a commutative integral table algebra:
// b_i b_j = sum_k lambda(i,j,k) b_k with nonnegative integer structure
// constants, b_0 the identity, * an involution fixing 0, and degrees
// k_i = lambda(i,i*,0) defining the order n = sum k_i.
class TableAlgebra {
public:
    // Checks every defining axiom and throws (NonCommutative,
    // NegativeStructureConstant, AxiomViolation) naming the failing identity.
    static TableAlgebra validate(int rank, std::vector<Int> tensor,
                                 std::vector<int> involution);

    int rank() const { return rank_; }
    const Int& lambda(int i, int j, int k) const {
        return tensor_[(static_cast<size_t>(i) * rank_ + j) * rank_ + k];
    }
    int star(int i) const { return involution_[i]; }
    const Int& degree(int i) const { return degrees_[i]; }
    const std::vector<Int>& degrees() const { return degrees_; }
    const Int& order() const { return order_; }

    // Row-major r x r matrix A_j of right multiplication by b_j on
    // coordinate row vectors: (x b_j)_k = sum_c x_c A_j[c][k],
    // A_j[c*r+k] = lambda(j, c, k).
    std::vector<Int> action_matrix(int j) const;

private:
    TableAlgebra() = default;
    int rank_ = 0;
    std::vector<Int> tensor_;     // r^3, row-major [i][j][k]
    std::vector<int> involution_;
    std::vector<Int> degrees_;
    Int order_;
};

// P-polynomial style input: column vector b_1 acts tridiagonally with
// superdiagonal b[0..d-1], subdiagonal c[1..d] and row sums b[0].
struct IntersectionArray {
    std::vector<Int> b; // length d
    std::vector<Int> c; // length d
};

// Generates the full basis via the three-term recurrence; throws NotIntegral
// if any structure constant comes out fractional or negative.
TableAlgebra from_intersection_array(const IntersectionArray& arr);

} // namespace zetalg
