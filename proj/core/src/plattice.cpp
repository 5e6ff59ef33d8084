#include "zetalg/plattice.hpp"

#include "zeta_detail.hpp"
#include "zetalg/errors.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <set>

namespace zetalg {

namespace {

constexpr int64_t kInfVal = std::numeric_limits<int64_t>::max();

int64_t val_of(const Rat& x, int64_t p) {
    if (x == 0)
        return kInfVal;
    return valuation(x, p);
}

Rat rat_p_power(int64_t p, int64_t v) {
    if (v >= 0)
        return Rat(pow_int(Int(p), v));
    return Rat(Int(1), pow_int(Int(p), -v));
}

// Canonical residue of x modulo the column pivot p^a: zero when v(x) >= a,
// otherwise m * p^v with m the unit part reduced mod p^{a-v}.
Rat canonical_residue(const Rat& x, int64_t a, int64_t p) {
    if (x == 0)
        return Rat(0);
    int64_t v = valuation(x, p);
    if (v >= a)
        return Rat(0);
    Rat unit = x / rat_p_power(p, v);
    Int m = mod_reduce(unit, pow_int(Int(p), a - v));
    return Rat(m) * rat_p_power(p, v);
}

// In-place p-local Hermite reduction of an nrows x r matrix; returns false
// when some column has no pivot among the available rows.
bool hnf_reduce(std::vector<Rat>& rows, size_t nrows, int r, int64_t p) {
    auto at = [&](size_t i, int j) -> Rat& { return rows[i * r + j]; };
    for (int col = 0; col < r; ++col) {
        size_t sel = nrows;
        int64_t best = kInfVal;
        for (size_t i = col; i < nrows; ++i) {
            int64_t v = val_of(at(i, col), p);
            if (v < best) {
                best = v;
                sel = i;
            }
        }
        if (sel == nrows)
            return false;
        if (sel != static_cast<size_t>(col))
            for (int k = col; k < r; ++k)
                std::swap(at(sel, k), at(col, k));
        for (size_t i = col + 1; i < nrows; ++i) {
            if (at(i, col) == 0)
                continue;
            Rat f = at(i, col) / at(col, col); // valuation >= 0 by pivot choice
            at(i, col) = 0;
            for (int k = col + 1; k < r; ++k)
                at(i, k) -= f * at(col, k);
        }
    }
    // scale pivots to exact prime powers
    for (int i = 0; i < r; ++i) {
        int64_t a = valuation(at(i, i), p);
        Rat u = at(i, i) / rat_p_power(p, a);
        if (u != 1) {
            Rat inv = Rat(1) / u;
            at(i, i) = rat_p_power(p, a);
            for (int k = i + 1; k < r; ++k)
                at(i, k) *= inv;
        }
    }
    // reduce entries above the pivots, left to right so finished columns
    // are not disturbed
    for (int i = 0; i < r - 1; ++i)
        for (int j = i + 1; j < r; ++j) {
            int64_t aj = valuation(at(j, j), p);
            Rat c = canonical_residue(at(i, j), aj, p);
            if (c == at(i, j))
                continue;
            Rat f = (at(i, j) - c) / at(j, j);
            at(i, j) = c;
            for (int k = j + 1; k < r; ++k)
                at(i, k) -= f * at(j, k);
        }
    rows.resize(static_cast<size_t>(r) * r);
    return true;
}

} // namespace

PLattice PLattice::from_rows(int64_t p, int rank, std::vector<Rat> rows) {
    if (p < 2)
        throw BadInput("p must be a prime >= 2");
    if (rank <= 0 || rows.size() % rank != 0)
        throw BadInput("row data does not tile into rank-length rows");
    size_t nrows = rows.size() / rank;
    if (nrows < static_cast<size_t>(rank))
        throw Singular("fewer rows than the ambient rank");
    if (!hnf_reduce(rows, nrows, rank, p))
        throw Singular("rows do not span a full lattice");
    return PLattice(p, rank, std::move(rows));
}

PLattice PLattice::from_canonical(int64_t p, int rank, std::vector<Rat> rows) {
    if (p < 2)
        throw BadInput("p must be a prime >= 2");
    if (rank <= 0 || rows.size() != static_cast<size_t>(rank) * rank)
        throw BadInput("canonical matrix must be square");
#ifndef NDEBUG
    for (int i = 0; i < rank; ++i) {
        const Rat& piv = rows[static_cast<size_t>(i) * rank + i];
        assert(piv != 0 && piv == rat_p_power(p, valuation(piv, p)));
        for (int j = 0; j < i; ++j)
            assert(rows[static_cast<size_t>(i) * rank + j] == 0);
    }
#endif
    return PLattice(p, rank, std::move(rows));
}

int64_t PLattice::pivot_exponent(int i) const {
    return valuation(entry(i, i), p_);
}

int64_t PLattice::pivot_exponent_sum() const {
    int64_t s = 0;
    for (int i = 0; i < rank_; ++i)
        s += pivot_exponent(i);
    return s;
}

bool PLattice::contains(const std::vector<Rat>& vec) const {
    if (vec.size() != static_cast<size_t>(rank_))
        throw BadInput("vector length does not match the rank");
    std::vector<Rat> w = vec;
    for (int j = 0; j < rank_; ++j) {
        if (w[j] == 0)
            continue;
        if (valuation(w[j], p_) < pivot_exponent(j))
            return false;
        Rat c = w[j] / entry(j, j);
        w[j] = 0;
        for (int k = j + 1; k < rank_; ++k)
            w[k] -= c * entry(j, k);
    }
    return true;
}

bool PLattice::contains(const PLattice& other) const {
    if (p_ != other.p_ || rank_ != other.rank_)
        throw BadInput("lattices live in different ambient spaces");
    for (int i = 0; i < rank_; ++i) {
        std::vector<Rat> row(other.rows_.begin() + static_cast<size_t>(i) * rank_,
                             other.rows_.begin() + static_cast<size_t>(i + 1) * rank_);
        if (!contains(row))
            return false;
    }
    return true;
}

bool PLattice::operator<(const PLattice& o) const {
    for (int i = 0; i < rank_ && i < o.rank_; ++i) {
        int64_t a = pivot_exponent(i), b = o.pivot_exponent(i);
        if (a != b)
            return a < b;
    }
    if (rank_ != o.rank_)
        return rank_ < o.rank_;
    return rows_ < o.rows_;
}

PLattice identity_lattice(int64_t p, int rank) {
    std::vector<Rat> rows(static_cast<size_t>(rank) * rank, Rat(0));
    for (int i = 0; i < rank; ++i)
        rows[static_cast<size_t>(i) * rank + i] = 1;
    return PLattice::from_canonical(p, rank, std::move(rows));
}

PIndex index(const PLattice& L, const PLattice& N) {
    if (L.p() != N.p() || L.rank() != N.rank())
        throw BadInput("lattices live in different ambient spaces");
    return PIndex{N.pivot_exponent_sum() - L.pivot_exponent_sum()};
}

PLattice sum(const PLattice& L, const PLattice& N) {
    if (L.p() != N.p() || L.rank() != N.rank())
        throw BadInput("lattices live in different ambient spaces");
    std::vector<Rat> rows = L.rows();
    rows.insert(rows.end(), N.rows().begin(), N.rows().end());
    return PLattice::from_rows(L.p(), L.rank(), std::move(rows));
}

namespace {

// rows of the inverse transpose of the HNF basis span the dual lattice
// {x : <y, x> in Z_p for all y in L}
PLattice dual(const PLattice& L) {
    int r = L.rank();
    std::vector<Rat> inv(static_cast<size_t>(r) * r, Rat(0));
    for (int j = r - 1; j >= 0; --j) {
        inv[static_cast<size_t>(j) * r + j] = Rat(1) / L.entry(j, j);
        for (int i = j - 1; i >= 0; --i) {
            Rat s = 0;
            for (int k = i + 1; k <= j; ++k)
                s += L.entry(i, k) * inv[static_cast<size_t>(k) * r + j];
            inv[static_cast<size_t>(i) * r + j] = -s / L.entry(i, i);
        }
    }
    std::vector<Rat> rows(static_cast<size_t>(r) * r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            rows[static_cast<size_t>(i) * r + j] = inv[static_cast<size_t>(j) * r + i];
    return PLattice::from_rows(L.p(), r, std::move(rows));
}

} // namespace

PLattice intersect(const PLattice& L, const PLattice& N) {
    return dual(sum(dual(L), dual(N)));
}

PLattice conductor(const PLattice& M, const PLattice& L) {
    if (M.p() != L.p() || M.rank() != L.rank())
        throw BadInput("lattices live in different ambient spaces");
    const int r = M.rank();
    // x in {M : L} iff for each basis row h of M the vector x*h lands in L,
    // i.e. <a_{ij}, x> in Z_p with a_{ij}[k] = H_M[i][k] * (H_L^{-1})[k][j];
    // the conductor is the dual of the span of those r^2 constraint rows
    std::vector<Rat> linv(static_cast<size_t>(r) * r, Rat(0));
    for (int j = r - 1; j >= 0; --j) {
        linv[static_cast<size_t>(j) * r + j] = Rat(1) / L.entry(j, j);
        for (int i = j - 1; i >= 0; --i) {
            Rat s = 0;
            for (int k = i + 1; k <= j; ++k)
                s += L.entry(i, k) * linv[static_cast<size_t>(k) * r + j];
            linv[static_cast<size_t>(i) * r + j] = -s / L.entry(i, i);
        }
    }
    std::vector<Rat> rows;
    rows.reserve(static_cast<size_t>(r) * r * r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                rows.push_back(M.entry(i, k) * linv[static_cast<size_t>(k) * r + j]);
    return dual(PLattice::from_rows(M.p(), r, std::move(rows)));
}

bool is_order(const PLattice& M) {
    const int r = M.rank();
    std::vector<Rat> one(r, Rat(1));
    if (!M.contains(one))
        return false;
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j) {
            std::vector<Rat> prod(r);
            for (int k = 0; k < r; ++k)
                prod[k] = M.entry(i, k) * M.entry(j, k);
            if (!M.contains(prod))
                return false;
        }
    return true;
}

namespace {

// Shared enumerator behind overlattices and the genus census: all integral
// canonical HNFs with pivot exponents b_i <= cap[i] that are stable under
// the diagonal action of lambda's rows, optionally also required to contain
// lambda.  Sorted by ascending pivot exponent sum (i.e. descending index
// over lambda), ties lexicographic.
std::vector<PLattice> enumerate_stable(const PLattice& lambda,
                                       const std::vector<int64_t>& cap,
                                       bool contain_lambda) {
    const int r = lambda.rank();
    const int64_t p = lambda.p();

    // candidate pivot tuples 0 <= b_i <= cap_i; per tuple the off-diagonal
    // slots (i, j), i < j run over plain residues in [0, p^{b_j})
    uint64_t budget = 0;
    {
        std::vector<int64_t> b(r, 0);
        for (;;) {
            double cnt = 1;
            for (int j = 1; j < r; ++j)
                for (int i = 0; i < j; ++i) {
                    (void)i;
                    cnt *= static_cast<double>(pow_int(Int(p), b[j]).convert_to<double>());
                }
            budget += static_cast<uint64_t>(std::min(cnt, 1e18));
            int k = r - 1;
            while (k >= 0 && b[k] == cap[k])
                b[k--] = 0;
            if (k < 0)
                break;
            ++b[k];
        }
        if (budget > 20000000ull)
            throw ResourceBudgetExceeded("lattice candidate count " +
                                         std::to_string(budget) + " is out of reach");
    }

    std::vector<PLattice> out;
    std::vector<int64_t> b(r, 0);
    for (;;) {
        // odometer over the off-diagonal residues for this pivot tuple
        std::vector<std::pair<int, int>> slots;
        std::vector<Int> radix;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (b[j] > 0) {
                    slots.push_back({i, j});
                    radix.push_back(pow_int(Int(p), b[j]));
                }
        std::vector<Int> digit(slots.size(), Int(0));
        for (;;) {
            std::vector<Rat> rows(static_cast<size_t>(r) * r, Rat(0));
            for (int i = 0; i < r; ++i)
                rows[static_cast<size_t>(i) * r + i] = rat_p_power(p, b[i]);
            for (size_t s = 0; s < slots.size(); ++s)
                rows[static_cast<size_t>(slots[s].first) * r + slots[s].second] =
                    Rat(digit[s]);
            PLattice N = PLattice::from_canonical(p, r, std::move(rows));
            if (!contain_lambda || N.contains(lambda)) {
                // lambda-stability via generators
                bool stable = true;
                for (int i = 0; i < r && stable; ++i)
                    for (int j = 0; j < r && stable; ++j) {
                        std::vector<Rat> prod(r);
                        for (int k = 0; k < r; ++k)
                            prod[k] = lambda.entry(i, k) * N.entry(j, k);
                        stable = N.contains(prod);
                    }
                if (stable)
                    out.push_back(std::move(N));
            }
            size_t s = slots.size();
            while (s > 0 && digit[s - 1] == radix[s - 1] - 1)
                digit[--s] = 0;
            if (s == 0)
                break;
            ++digit[s - 1];
        }
        int k = r - 1;
        while (k >= 0 && b[k] == cap[k])
            b[k--] = 0;
        if (k < 0)
            break;
        ++b[k];
    }

    std::sort(out.begin(), out.end(), [](const PLattice& x, const PLattice& y) {
        int64_t sx = x.pivot_exponent_sum(), sy = y.pivot_exponent_sum();
        if (sx != sy)
            return sx < sy;
        return x < y;
    });
    return out;
}

} // namespace

std::vector<PLattice> overlattices(const PLattice& lambda) {
    if (!is_order(lambda))
        throw BadInput("overlattices expects an order");
    const int r = lambda.rank();
    std::vector<int64_t> a(r);
    for (int i = 0; i < r; ++i) {
        a[i] = lambda.pivot_exponent(i);
        if (a[i] < 0)
            throw BadInput("order does not sit inside the standard lattice");
    }
    return enumerate_stable(lambda, a, true);
}

namespace detail {

std::vector<PLattice> stable_census(const PLattice& lambda, int64_t cap) {
    if (!is_order(lambda))
        throw BadInput("stable census expects an order");
    if (cap < 0)
        throw BadInput("census pivot cap must be nonnegative");
    for (int i = 0; i < lambda.rank(); ++i)
        if (lambda.pivot_exponent(i) < 0)
            throw BadInput("order does not sit inside the standard lattice");
    return enumerate_stable(lambda, std::vector<int64_t>(lambda.rank(), cap), false);
}

} // namespace detail

PLattice normalize(const PLattice& N) {
    const int r = N.rank();
    std::vector<Rat> rows = N.rows();
    bool touched = false;
    for (int j = 0; j < r; ++j) {
        int64_t e = kInfVal;
        for (int i = 0; i <= j; ++i)
            e = std::min(e, val_of(N.entry(i, j), N.p()));
        if (e == 0)
            continue;
        touched = true;
        Rat f = rat_p_power(N.p(), -e);
        for (int i = 0; i <= j; ++i)
            rows[static_cast<size_t>(i) * r + j] *= f;
    }
    if (!touched)
        return N;
    // column scaling by p-powers preserves canonical form verbatim
    return PLattice::from_canonical(N.p(), r, std::move(rows));
}

namespace {

// smallest precision P >= 1 at which p^P Lambda_0 lands inside the order O.
// Scaling vectors congruent mod p^P then move a lattice with multiplier ring
// O to the same image: their quotient sits in 1 + p^P Lambda_0, a subgroup
// of O^x, and O^x is exactly the stabilizer of the lattice under diagonal
// scaling.  Note P >= every pivot exponent of O automatically, since
// p^P e_i in O forces p^{a_i} | p^P.
int64_t stable_precision(const PLattice& O) {
    const int r = O.rank();
    const int64_t p = O.p();
    for (int64_t P = 1;; ++P) {
        if (P > 4096)
            throw ResourceBudgetExceeded("unit precision failed to stabilize");
        bool ok = true;
        for (int k = 0; k < r && ok; ++k) {
            std::vector<Rat> v(r, Rat(0));
            v[k] = rat_p_power(p, P);
            ok = O.contains(v);
        }
        if (ok)
            return P;
    }
}

} // namespace

PLattice canonical_form(const PLattice& N) {
    const int r = N.rank();
    const int64_t p = N.p();
    if (r == 1) {
        // single coordinate: the unit part of the pivot is scaled away
        std::vector<Rat> row{rat_p_power(p, N.pivot_exponent(0))};
        return PLattice::from_canonical(p, 1, std::move(row));
    }
    PLattice O = conductor(N, N);
    int64_t P = stable_precision(O);

    Int pP = pow_int(Int(p), P);
    double orbit = 1;
    for (int j = 1; j < r; ++j)
        orbit *= (pP - pP / p).convert_to<double>();
    if (orbit > 2e7)
        throw ResourceBudgetExceeded("unit orbit too large to scan");

    // scaling every coordinate by one common unit fixes the lattice, so the
    // first unit can be pinned to 1
    std::vector<Int> u(r, Int(1));
    bool have = false;
    PLattice best = N;
    for (;;) {
        std::vector<Rat> c(r);
        for (int j = 0; j < r; ++j)
            c[j] = Rat(u[j]);
        PLattice cand = scale_coordinates(N, c);
        if (!have || cand.rows() < best.rows()) {
            best = cand;
            have = true;
        }
        int j = r - 1;
        for (; j >= 1; --j) {
            ++u[j];
            while (u[j] < pP && u[j] % p == 0)
                ++u[j];
            if (u[j] < pP)
                break;
            u[j] = 1;
        }
        if (j == 0)
            break;
    }
    return best;
}

DiagonalInvariant diagonal_invariant(const PLattice& N) {
    DiagonalInvariant d;
    const int r = N.rank();
    for (int i = 0; i < r; ++i) {
        d.pivot_exponents.push_back(N.pivot_exponent(i));
        int run = 0;
        for (int j = i + 1; j < r && N.entry(i, j) == 0; ++j)
            ++run;
        d.zero_runs.push_back(run);
    }
    return d;
}

UnitMeasure unit_measure(const PLattice& M) {
    const int r = M.rank();
    const int64_t p = M.p();
    PLattice O = conductor(M, M);
    int64_t P = stable_precision(O);

    // an element of the ring O is a unit iff every coordinate is a p-adic
    // unit (the inverse then lies in Z_p[x] inside O), so unit residues mod
    // p^K are exact cosets of p^K Lambda_0 once K >= P.  Within the cell
    // budget every residue fits in int64, see the guard below.
    auto count_units = [&](int64_t K) -> Int {
        Int cells = 1;
        for (int i = 0; i < r; ++i)
            cells *= pow_int(Int(p), K - O.pivot_exponent(i));
        if (cells > 20000000)
            throw ResourceBudgetExceeded("unit residue census too large");
        int64_t pK = pow_int(Int(p), K).convert_to<int64_t>();
        std::vector<std::vector<int64_t>> ent(r, std::vector<int64_t>(r));
        for (int i = 0; i < r; ++i)
            for (int k = i; k < r; ++k)
                ent[i][k] = mod_reduce(O.entry(i, k), Int(pK)).convert_to<int64_t>();
        std::vector<int64_t> radix(r);
        for (int i = 0; i < r; ++i)
            radix[i] = pow_int(Int(p), K - O.pivot_exponent(i)).convert_to<int64_t>();

        int bits = 0;
        while ((int64_t(1) << bits) < pK)
            ++bits;
        const bool packed = bits * r <= 64;
        std::vector<uint64_t> keys;
        std::set<std::vector<int64_t>> seen;
        if (packed)
            keys.reserve(1 << 20);

        std::vector<int64_t> c(r, 0);
        std::vector<int64_t> x(r);
        for (;;) {
            bool unit = true;
            for (int k = 0; k < r && unit; ++k) {
                int64_t s = 0;
                for (int i = 0; i <= k; ++i)
                    s = (s + c[i] * ent[i][k]) % pK;
                x[k] = s;
                unit = (s % p) != 0;
            }
            if (unit) {
                if (packed) {
                    uint64_t key = 0;
                    for (int k = 0; k < r; ++k)
                        key = (key << bits) | static_cast<uint64_t>(x[k]);
                    keys.push_back(key);
                } else {
                    seen.insert(x);
                }
            }
            int i = r - 1;
            while (i >= 0 && c[i] == radix[i] - 1)
                c[i--] = 0;
            if (i < 0)
                break;
            ++c[i];
        }
        if (!packed)
            return Int(seen.size());
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        return Int(keys.size());
    };

    Int lo = count_units(P);
    Int hi = count_units(P + 1);
    if (hi != lo * pow_int(Int(p), r))
        throw PrecisionUnstable("unit counts at consecutive precisions disagree: " +
                                lo.str() + " vs " + hi.str());
    Rat denom = Rat(pow_int(pow_int(Int(p), P - 1) * (p - 1), r));
    return UnitMeasure{Rat(lo) / denom};
}

PLattice scale_coordinates(const PLattice& N, const std::vector<Rat>& c) {
    const int r = N.rank();
    if (c.size() != static_cast<size_t>(r))
        throw BadInput("scaling vector length does not match the rank");
    for (const Rat& x : c)
        if (x == 0)
            throw BadInput("coordinate scaling must be invertible");
    std::vector<Rat> rows = N.rows();
    for (int i = 0; i < r; ++i)
        for (int j = i; j < r; ++j)
            rows[static_cast<size_t>(i) * r + j] *= c[j];
    return PLattice::from_rows(N.p(), r, std::move(rows));
}

} // namespace zetalg
