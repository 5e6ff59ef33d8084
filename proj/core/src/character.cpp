#include "zetalg/character.hpp"

#include "zetalg/errors.hpp"

#include <algorithm>
#include <sstream>

namespace zetalg {

namespace {

using Vec = std::vector<Rat>;
using Mat = std::vector<Rat>; // row-major square

Vec mul_row(const Vec& v, const std::vector<Int>& A, int r) {
    Vec out(r, Rat(0));
    for (int c = 0; c < r; ++c) {
        if (v[c] == 0)
            continue;
        for (int k = 0; k < r; ++k)
            out[k] += v[c] * Rat(A[static_cast<size_t>(c) * r + k]);
    }
    return out;
}

// Incremental row reduction used for the Krylov loop: rows kept reduced with
// recorded combinations over the inserted vectors.
struct RowSpan {
    int r;
    std::vector<Vec> rows;
    std::vector<int> lead;
    std::vector<Vec> combos;

    explicit RowSpan(int rank) : r(rank) {}

    // Returns the combination over previously inserted vectors when v is
    // dependent, or empty after inserting it.
    Vec insert(Vec v, Vec combo) {
        for (size_t i = 0; i < rows.size(); ++i) {
            const Rat& x = v[lead[i]];
            if (x == 0)
                continue;
            Rat f = x; // rows are normalized to leading 1
            for (int k = 0; k < r; ++k)
                v[k] -= f * rows[i][k];
            for (size_t k = 0; k < combos[i].size(); ++k)
                combo[k] -= f * combos[i][k];
        }
        int l = -1;
        for (int k = 0; k < r; ++k)
            if (v[k] != 0) {
                l = k;
                break;
            }
        if (l < 0)
            return combo;
        Rat inv = Rat(1) / v[l];
        for (int k = 0; k < r; ++k)
            v[k] *= inv;
        for (auto& c : combo)
            c *= inv;
        rows.push_back(std::move(v));
        lead.push_back(l);
        combos.push_back(std::move(combo));
        return {};
    }
};

// Monic minimal polynomial (ascending coefficients) of the element with
// coordinate vector coeffs, acting on the regular module.
std::vector<Rat> minimal_polynomial(const std::vector<std::vector<Int>>& actions,
                                    const std::vector<int64_t>& coeffs, int r) {
    std::vector<Int> Ax(static_cast<size_t>(r) * r, Int(0));
    for (int j = 0; j < r; ++j) {
        if (coeffs[j] == 0)
            continue;
        for (size_t idx = 0; idx < Ax.size(); ++idx)
            Ax[idx] += Int(coeffs[j]) * actions[j][idx];
    }
    RowSpan span(r);
    Vec v(r, Rat(0));
    v[0] = 1; // coordinates of b_0
    for (int m = 0;; ++m) {
        Vec combo(static_cast<size_t>(m) + 1, Rat(0));
        combo[m] = 1;
        Vec dep = span.insert(v, std::move(combo));
        if (!dep.empty()) {
            // dep expresses 0 = sum dep[i] * x^i with dep[m] normalized away;
            // rebuild monic: the returned combo has the new vector's slot last.
            return dep;
        }
        if (m == r)
            throw AxiomViolation("regular representation not annihilated at rank");
        v = mul_row(v, Ax, r);
    }
}

} // namespace

CharacterTable character_table(const TableAlgebra& T) {
    const int r = T.rank();
    std::vector<std::vector<Int>> actions(r);
    for (int j = 0; j < r; ++j)
        actions[j] = T.action_matrix(j);

    CharacterTable C;
    C.rank = r;

    if (r == 1) {
        C.values = {Int(1)};
        C.multiplicities = {Rat(T.order())};
        return C;
    }

    // deterministic hunt for a separating element
    std::vector<std::vector<int64_t>> candidates;
    for (int j = 1; j < r; ++j) {
        std::vector<int64_t> c(r, 0);
        c[j] = 1;
        candidates.push_back(c);
    }
    {
        std::vector<int64_t> c(r);
        for (int j = 0; j < r; ++j)
            c[j] = j;
        candidates.push_back(c);
    }
    uint64_t lcg = 0x243f6a8885a308d3ull; // fixed seed, reproducible retries
    for (int t = 0; t < 64; ++t) {
        std::vector<int64_t> c(r);
        for (int j = 0; j < r; ++j) {
            lcg = lcg * 6364136223846793005ull + 1442695040888963407ull;
            c[j] = static_cast<int64_t>((lcg >> 33) % 19) - 9;
        }
        candidates.push_back(c);
    }

    std::vector<Rat> minpoly;
    std::vector<int64_t> sep;
    for (const auto& cand : candidates) {
        auto mp = minimal_polynomial(actions, cand, r);
        if (mp.size() == static_cast<size_t>(r) + 1) { // monic of degree r
            minpoly = mp;
            sep = cand;
            break;
        }
    }
    if (sep.empty())
        throw NotSplit("no separating element found; the algebra is unlikely to "
                       "be split over Q");

    // minpoly of an integer matrix is monic integral
    std::vector<Int> g(r + 1);
    for (int i = 0; i <= r; ++i) {
        if (!is_integer(minpoly[i]))
            throw AxiomViolation("minimal polynomial not integral");
        g[i] = numerator_of(minpoly[i]);
    }

    // integer roots by bounded scan with deflation; the remainder factor, if
    // any survives, witnesses non-splitness
    std::vector<Int> Ax(static_cast<size_t>(r) * r, Int(0));
    for (int j = 0; j < r; ++j)
        if (sep[j] != 0)
            for (size_t idx = 0; idx < Ax.size(); ++idx)
                Ax[idx] += Int(sep[j]) * actions[j][idx];
    Int bound = 0;
    for (int i = 0; i < r; ++i) {
        Int row = 0;
        for (int k = 0; k < r; ++k)
            row += abs(Ax[static_cast<size_t>(i) * r + k]);
        bound = std::max(bound, row);
    }
    if (bound > 20000000)
        throw ResourceBudgetExceeded("eigenvalue scan bound " + bound.str() +
                                     " exceeds desk scale");

    std::vector<Int> roots;
    std::vector<Int> cur = g;
    for (Int theta = -bound; theta <= bound && cur.size() > 1; ++theta) {
        // cheap evaluation first, synthetic division only on actual roots
        Int acc = 0;
        for (size_t i = cur.size(); i-- > 0;)
            acc = acc * theta + cur[i];
        if (acc != 0)
            continue;
        roots.push_back(theta);
        std::vector<Int> quot(cur.size() - 1);
        acc = 0;
        for (size_t i = cur.size(); i-- > 1;) {
            acc = acc * theta + cur[i];
            quot[i - 1] = acc;
        }
        cur = std::move(quot);
    }
    if (cur.size() > 1) {
        std::ostringstream os;
        os << "irrational eigenvalues; non-linear factor";
        for (size_t i = cur.size(); i-- > 0;)
            os << (i + 1 == cur.size() ? " " : " + ") << cur[i].str() << "*t^" << i;
        throw NotSplit(os.str());
    }

    // one eigenvector per root; they are simultaneously eigen for every A_j
    std::vector<std::vector<Int>> chars; // value vectors chi(b_0..b_{r-1})
    for (const Int& theta : roots) {
        // left kernel of (Ax - theta I): Gaussian elimination on columns of
        // the transpose, i.e. solve v * (Ax - theta I) = 0
        Mat Mt(static_cast<size_t>(r) * r); // transpose of Ax - theta I
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                Mt[static_cast<size_t>(j) * r + i] =
                    Rat(Ax[static_cast<size_t>(i) * r + j]) - (i == j ? Rat(theta) : Rat(0));
        // kernel of Mt (column vectors) = left kernel of (Ax - theta I)
        std::vector<int> pivot_col(r, -1);
        int prow = 0;
        for (int col = 0; col < r && prow < r; ++col) {
            int sel = -1;
            for (int i = prow; i < r; ++i)
                if (Mt[static_cast<size_t>(i) * r + col] != 0) {
                    sel = i;
                    break;
                }
            if (sel < 0)
                continue;
            for (int k = 0; k < r; ++k)
                std::swap(Mt[static_cast<size_t>(sel) * r + k],
                          Mt[static_cast<size_t>(prow) * r + k]);
            Rat inv = Rat(1) / Mt[static_cast<size_t>(prow) * r + col];
            for (int k = 0; k < r; ++k)
                Mt[static_cast<size_t>(prow) * r + k] *= inv;
            for (int i = 0; i < r; ++i)
                if (i != prow && Mt[static_cast<size_t>(i) * r + col] != 0) {
                    Rat f = Mt[static_cast<size_t>(i) * r + col];
                    for (int k = 0; k < r; ++k)
                        Mt[static_cast<size_t>(i) * r + k] -=
                            f * Mt[static_cast<size_t>(prow) * r + k];
                }
            pivot_col[col] = prow;
            ++prow;
        }
        int free_col = -1;
        for (int col = 0; col < r; ++col)
            if (pivot_col[col] < 0) {
                free_col = col;
                break;
            }
        if (free_col < 0 || prow != r - 1)
            throw AxiomViolation("eigenspace not one-dimensional; element not "
                                 "separating after all");
        Vec v(r, Rat(0));
        v[free_col] = 1;
        for (int col = 0; col < r; ++col)
            if (pivot_col[col] >= 0)
                v[col] = -Mt[static_cast<size_t>(pivot_col[col]) * r + free_col];

        std::vector<Int> chi(r);
        for (int j = 0; j < r; ++j) {
            Vec w = mul_row(v, actions[j], r);
            Rat val;
            bool set = false;
            for (int k = 0; k < r; ++k) {
                if (v[k] == 0) {
                    if (w[k] != 0)
                        throw AxiomViolation("common eigenvector failure");
                    continue;
                }
                Rat ratio = w[k] / v[k];
                if (!set) {
                    val = ratio;
                    set = true;
                } else if (ratio != val) {
                    throw AxiomViolation("common eigenvector failure");
                }
            }
            if (!set || !is_integer(val))
                throw AxiomViolation("character value not an integer");
            chi[j] = numerator_of(val);
        }
        chars.push_back(std::move(chi));
    }

    // row 0 = degree map, the rest sorted lexicographically
    const std::vector<Int>& degs = T.degrees();
    auto it = std::find(chars.begin(), chars.end(), degs);
    if (it == chars.end())
        throw AxiomViolation("degree character missing from spectrum");
    std::vector<Int> degrow = *it;
    chars.erase(it);
    std::sort(chars.begin(), chars.end());
    chars.insert(chars.begin(), degrow);

    C.values.assign(static_cast<size_t>(r) * r, Int(0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            C.values[static_cast<size_t>(i) * r + j] = chars[i][j];

    // multiplicities: sum_i m_i chi_i(b_j) = n delta_{j0}
    Mat M(static_cast<size_t>(r) * (r + 1));
    for (int j = 0; j < r; ++j) {
        for (int i = 0; i < r; ++i)
            M[static_cast<size_t>(j) * (r + 1) + i] = Rat(chars[i][j]);
        M[static_cast<size_t>(j) * (r + 1) + r] = (j == 0) ? Rat(T.order()) : Rat(0);
    }
    for (int col = 0; col < r; ++col) {
        int sel = -1;
        for (int i = col; i < r; ++i)
            if (M[static_cast<size_t>(i) * (r + 1) + col] != 0) {
                sel = i;
                break;
            }
        if (sel < 0)
            throw AxiomViolation("character matrix singular");
        for (int k = 0; k <= r; ++k)
            std::swap(M[static_cast<size_t>(sel) * (r + 1) + k],
                      M[static_cast<size_t>(col) * (r + 1) + k]);
        Rat inv = Rat(1) / M[static_cast<size_t>(col) * (r + 1) + col];
        for (int k = 0; k <= r; ++k)
            M[static_cast<size_t>(col) * (r + 1) + k] *= inv;
        for (int i = 0; i < r; ++i)
            if (i != col && M[static_cast<size_t>(i) * (r + 1) + col] != 0) {
                Rat f = M[static_cast<size_t>(i) * (r + 1) + col];
                for (int k = 0; k <= r; ++k)
                    M[static_cast<size_t>(i) * (r + 1) + k] -=
                        f * M[static_cast<size_t>(col) * (r + 1) + k];
            }
    }
    C.multiplicities.resize(r);
    for (int i = 0; i < r; ++i) {
        C.multiplicities[i] = M[static_cast<size_t>(i) * (r + 1) + r];
        if (C.multiplicities[i] <= 0)
            throw AxiomViolation("multiplicity m_" + std::to_string(i) +
                                 " is not positive");
    }
    return C;
}

IdempotentBasis idempotents(const TableAlgebra& T, const CharacterTable& C) {
    const int r = T.rank();
    IdempotentBasis E;
    E.rank = r;
    E.coeff.assign(static_cast<size_t>(r) * r, Rat(0));
    E.basis_rows.assign(static_cast<size_t>(r) * r, Int(0));
    const Int& n = T.order();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            E.coeff[static_cast<size_t>(i) * r + j] =
                C.multiplicities[i] / Rat(n) *
                Rat(C.values[static_cast<size_t>(i) * r + T.star(j)]) / Rat(T.degree(j));
            E.basis_rows[static_cast<size_t>(j) * r + i] =
                C.values[static_cast<size_t>(i) * r + j];
        }

    // e_i written in idempotent coordinates must be the i-th unit vector
    for (int i = 0; i < r; ++i)
        for (int l = 0; l < r; ++l) {
            Rat s = 0;
            for (int j = 0; j < r; ++j)
                s += E.coeff[static_cast<size_t>(i) * r + j] *
                     Rat(C.values[static_cast<size_t>(l) * r + j]);
            if (s != ((i == l) ? Rat(1) : Rat(0)))
                throw AxiomViolation("idempotent identity E*X = I fails");
        }
    return E;
}

Int frame_number(const TableAlgebra& T, const CharacterTable& C) {
    const int r = T.rank();
    Rat F = pow_int(T.order(), r);
    for (int i = 1; i < r; ++i)
        F *= Rat(T.degree(i)) / C.multiplicities[i];
    if (!is_integer(F))
        throw NonIntegralFrameNumber("frame number " + numerator_of(F).str() + "/" +
                                     denominator_of(F).str());
    return numerator_of(F);
}

RelevantPrimes relevant_primes(const TableAlgebra& T, const IdempotentBasis& E) {
    Int f = 1;
    for (const Rat& q : E.coeff)
        f = lcm(f, denominator_of(q));
    RelevantPrimes out;
    out.f = f;
    out.primes = prime_factors(f);
    Int F = frame_number(T, character_table(T));
    if (F % f != 0)
        throw CrossCheckFailure("f = " + f.str() + " does not divide the frame number " +
                                F.str());
    return out;
}

} // namespace zetalg
