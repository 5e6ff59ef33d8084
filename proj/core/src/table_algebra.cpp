#include "zetalg/table_algebra.hpp"

#include "zetalg/errors.hpp"

#include <sstream>

namespace zetalg {

namespace {

std::string at(int i, int j, int k) {
    std::ostringstream os;
    os << "(" << i << "," << j << "," << k << ")";
    return os.str();
}

} // namespace

TableAlgebra TableAlgebra::validate(int rank, std::vector<Int> tensor,
                                    std::vector<int> involution) {
    if (rank < 1)
        throw BadInput("rank must be >= 1");
    const size_t r = static_cast<size_t>(rank);
    if (tensor.size() != r * r * r)
        throw BadInput("tensor must have rank^3 entries");
    if (involution.size() != r)
        throw BadInput("involution must have rank entries");

    auto lam = [&](int i, int j, int k) -> const Int& {
        return tensor[(static_cast<size_t>(i) * r + j) * r + k];
    };

    for (size_t idx = 0; idx < tensor.size(); ++idx)
        if (tensor[idx] < 0) {
            size_t k = idx % r, j = (idx / r) % r, i = idx / (r * r);
            throw NegativeStructureConstant("lambda" + at(int(i), int(j), int(k)) +
                                            " = " + tensor[idx].str());
        }

    // involution: a permutation fixing 0, equal to its own inverse
    std::vector<int> seen(r, 0);
    for (int i = 0; i < rank; ++i) {
        int s = involution[i];
        if (s < 0 || s >= rank)
            throw BadInput("involution entry out of range at " + std::to_string(i));
        seen[s] += 1;
    }
    for (int i = 0; i < rank; ++i)
        if (seen[i] != 1)
            throw BadInput("involution is not a permutation");
    if (involution[0] != 0)
        throw AxiomViolation("involution must fix the identity index 0");
    for (int i = 0; i < rank; ++i)
        if (involution[involution[i]] != i)
            throw AxiomViolation("involution is not an involution at index " +
                                 std::to_string(i));

    // b_0 is a two-sided identity
    for (int j = 0; j < rank; ++j)
        for (int k = 0; k < rank; ++k) {
            Int expect = (j == k) ? 1 : 0;
            if (lam(0, j, k) != expect)
                throw AxiomViolation("identity axiom fails: lambda" + at(0, j, k) +
                                     " = " + lam(0, j, k).str());
            if (lam(j, 0, k) != expect)
                throw AxiomViolation("identity axiom fails: lambda" + at(j, 0, k) +
                                     " = " + lam(j, 0, k).str());
        }

    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            for (int k = 0; k < rank; ++k)
                if (lam(i, j, k) != lam(j, i, k))
                    throw NonCommutative("lambda" + at(i, j, k) + " != lambda" +
                                         at(j, i, k));

    // coefficient of b_0 in b_i b_j: positive exactly when j = i*
    std::vector<Int> degrees(r);
    for (int i = 0; i < rank; ++i) {
        degrees[i] = lam(i, involution[i], 0);
        if (degrees[i] <= 0)
            throw AxiomViolation("degree of b_" + std::to_string(i) +
                                 " is not positive");
    }
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            bool should = (j == involution[i]);
            if (should != (lam(i, j, 0) > 0))
                throw AxiomViolation("identity-coefficient axiom fails at lambda" +
                                     at(i, j, 0));
        }

    // involution compatibility
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            for (int k = 0; k < rank; ++k)
                if (lam(i, j, k) != lam(involution[j], involution[i], involution[k]))
                    throw AxiomViolation("involution compatibility fails at lambda" +
                                         at(i, j, k));

    // the degree map is an algebra homomorphism
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            Int s = 0;
            for (int k = 0; k < rank; ++k)
                s += lam(i, j, k) * degrees[k];
            if (s != degrees[i] * degrees[j])
                throw AxiomViolation("degree homomorphism fails at (" +
                                     std::to_string(i) + "," + std::to_string(j) +
                                     ")");
        }

    // associativity: (b_i b_j) b_l = b_i (b_j b_l)
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            for (int l = 0; l < rank; ++l)
                for (int k = 0; k < rank; ++k) {
                    Int lhs = 0, rhs = 0;
                    for (int m = 0; m < rank; ++m) {
                        lhs += lam(i, j, m) * lam(m, l, k);
                        rhs += lam(j, l, m) * lam(i, m, k);
                    }
                    if (lhs != rhs)
                        throw AxiomViolation("associativity fails at (i,j,l,k)=(" +
                                             std::to_string(i) + "," + std::to_string(j) +
                                             "," + std::to_string(l) + "," +
                                             std::to_string(k) + ")");
                }

    TableAlgebra T;
    T.rank_ = rank;
    T.tensor_ = std::move(tensor);
    T.involution_ = std::move(involution);
    T.order_ = 0;
    for (const Int& d : degrees)
        T.order_ += d;
    T.degrees_ = std::move(degrees);
    return T;
}

std::vector<Int> TableAlgebra::action_matrix(int j) const {
    std::vector<Int> A(static_cast<size_t>(rank_) * rank_);
    for (int c = 0; c < rank_; ++c)
        for (int k = 0; k < rank_; ++k)
            A[static_cast<size_t>(c) * rank_ + k] = lambda(j, c, k);
    return A;
}

TableAlgebra from_intersection_array(const IntersectionArray& arr) {
    const size_t d = arr.b.size();
    if (d == 0 || arr.c.size() != d)
        throw BadInput("intersection array needs equal nonempty b and c lists");
    for (size_t i = 0; i < d; ++i) {
        if (arr.b[i] <= 0)
            throw BadInput("intersection array entry b[" + std::to_string(i) +
                           "] must be positive");
        if (arr.c[i] <= 0)
            throw BadInput("intersection array entry c[" + std::to_string(i) +
                           "] must be positive");
    }

    const int rank = static_cast<int>(d) + 1;
    const Int k1 = arr.b[0];

    // M1[k][j] = coefficient of b_k in b_1 b_j; tridiagonal, row sums k1.
    auto idx = [rank](int i, int j) { return static_cast<size_t>(i) * rank + j; };
    std::vector<Rat> M1(static_cast<size_t>(rank) * rank, Rat(0));
    for (int i = 0; i < rank; ++i) {
        Int bi = (i < rank - 1) ? arr.b[i] : Int(0);
        Int ci = (i > 0) ? arr.c[i - 1] : Int(0);
        Int ai = k1 - bi - ci;
        if (ai < 0)
            throw NotIntegral("diagonal entry a_" + std::to_string(i) +
                              " = " + ai.str() + " is negative");
        if (i < rank - 1)
            M1[idx(i, i + 1)] = Rat(bi);
        if (i > 0)
            M1[idx(i, i - 1)] = Rat(ci);
        M1[idx(i, i)] = Rat(ai);
    }

    // three-term recurrence on the regular matrices:
    // b_1 b_i = b[i-1] b_{i-1} + a_i b_i + c[i] b_{i+1}
    std::vector<std::vector<Rat>> B(d + 1);
    B[0].assign(static_cast<size_t>(rank) * rank, Rat(0));
    for (int i = 0; i < rank; ++i)
        B[0][idx(i, i)] = 1;
    B[1] = M1;
    for (size_t i = 1; i < d; ++i) {
        std::vector<Rat> next(static_cast<size_t>(rank) * rank, Rat(0));
        Rat ai = M1[idx(static_cast<int>(i), static_cast<int>(i))];
        Rat bprev = arr.b[i - 1];
        Rat ci = arr.c[i];
        for (int row = 0; row < rank; ++row)
            for (int col = 0; col < rank; ++col) {
                Rat prod = 0;
                for (int m = 0; m < rank; ++m)
                    prod += M1[idx(row, m)] * B[i][idx(m, col)];
                next[idx(row, col)] =
                    (prod - ai * B[i][idx(row, col)] - bprev * B[i - 1][idx(row, col)]) / ci;
            }
        B[i + 1] = std::move(next);
    }

    std::vector<Int> tensor(static_cast<size_t>(rank) * rank * rank);
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            for (int k = 0; k < rank; ++k) {
                const Rat& v = B[i][idx(k, j)];
                if (!is_integer(v) || v < 0)
                    throw NotIntegral("structure constant lambda(" + std::to_string(i) +
                                      "," + std::to_string(j) + "," + std::to_string(k) +
                                      ") = " + numerator_of(v).str() + "/" +
                                      denominator_of(v).str());
                tensor[(static_cast<size_t>(i) * rank + j) * rank + k] = numerator_of(v);
            }

    std::vector<int> involution(rank);
    for (int i = 0; i < rank; ++i)
        involution[i] = i; // P-polynomial bases are symmetric
    return TableAlgebra::validate(rank, std::move(tensor), std::move(involution));
}

} // namespace zetalg
