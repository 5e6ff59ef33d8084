#include "zetalg/zeta.hpp"

#include "zeta_detail.hpp"
#include "zetalg/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace zetalg {

LocalOrder local_order(const TableAlgebra& T, const IdempotentBasis& E, int64_t p) {
    const int r = T.rank();
    std::vector<Rat> rows(static_cast<size_t>(r) * r);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < r; ++i)
            rows[static_cast<size_t>(j) * r + i] = Rat(E.basis_rows[static_cast<size_t>(j) * r + i]);
    LocalOrder L{p, PLattice::from_rows(p, r, std::move(rows)), {}};
    for (int j = 1; j < r; ++j)
        L.actions.push_back(T.action_matrix(j));
    return L;
}

namespace detail {

Int hnf_census(int rank, int64_t p, int k) {
    // DP over columns; column j contributes a factor 1/(1 - p^j t)
    std::vector<Int> dp(static_cast<size_t>(k) + 1, Int(0));
    dp[0] = 1;
    for (int j = 0; j < rank; ++j) {
        Int w = pow_int(Int(p), j);
        for (int d = 1; d <= k; ++d)
            dp[static_cast<size_t>(d)] += w * dp[static_cast<size_t>(d - 1)];
        // after this loop dp[d] = sum over a_j >= 0 ... realized as the
        // standard geometric-series prefix recurrence
    }
    return dp[static_cast<size_t>(k)];
}

int feasible_kmax(int rank, int64_t p, int kmax, uint64_t max_cells) {
    Int total = 0;
    int best = -1;
    for (int c = 0; c <= kmax; ++c) {
        total += hnf_census(rank, p, c);
        if (total > Int(max_cells))
            break;
        best = c;
    }
    if (best < 0)
        throw ResourceBudgetExceeded("cell budget cannot even cover index 1");
    return best;
}

namespace {

struct Composition {
    std::vector<int64_t> a;
    int k = 0;
};

// closure of the lattice spanned by the rows of H under every action matrix;
// all arithmetic stays in int64, which the caller has bounded in advance
bool closed_under(const std::vector<int64_t>& H, int r,
                  const std::vector<std::vector<int64_t>>& actions,
                  const std::vector<int64_t>& pivots, std::vector<int64_t>& w) {
    for (const auto& A : actions) {
        for (int i = 0; i < r; ++i) {
            for (int k = 0; k < r; ++k) {
                int64_t s = 0;
                for (int c = i; c < r; ++c)
                    s += H[static_cast<size_t>(i) * r + c] * A[static_cast<size_t>(c) * r + k];
                w[static_cast<size_t>(k)] = s;
            }
            for (int c = 0; c < r; ++c) {
                int64_t x = w[static_cast<size_t>(c)];
                if (x % pivots[static_cast<size_t>(c)] != 0)
                    return false;
                int64_t q = x / pivots[static_cast<size_t>(c)];
                if (q != 0)
                    for (int k = c + 1; k < r; ++k)
                        w[static_cast<size_t>(k)] -= q * H[static_cast<size_t>(c) * r + k];
            }
        }
    }
    return true;
}

void run_composition(const Composition& comp, int r, int64_t p,
                     const std::vector<std::vector<int64_t>>& actions,
                     std::vector<ClosedHit>& out) {
    std::vector<int64_t> pivots(r);
    for (int i = 0; i < r; ++i)
        pivots[static_cast<size_t>(i)] = pow_int(Int(p), comp.a[static_cast<size_t>(i)]).convert_to<int64_t>();

    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            if (comp.a[static_cast<size_t>(j)] > 0)
                slots.push_back({i, j});

    std::vector<int64_t> H(static_cast<size_t>(r) * r, 0);
    for (int i = 0; i < r; ++i)
        H[static_cast<size_t>(i) * r + i] = pivots[static_cast<size_t>(i)];

    std::vector<int64_t> digit(slots.size(), 0);
    std::vector<int64_t> w(r);
    for (;;) {
        if (closed_under(H, r, actions, pivots, w))
            out.push_back(ClosedHit{H, comp.k});
        size_t s = slots.size();
        while (s > 0) {
            auto [si, sj] = slots[s - 1];
            int64_t& d = digit[s - 1];
            if (d + 1 < pivots[static_cast<size_t>(sj)]) {
                ++d;
                H[static_cast<size_t>(si) * r + sj] = d;
                break;
            }
            d = 0;
            H[static_cast<size_t>(si) * r + sj] = 0;
            --s;
        }
        if (s == 0)
            break;
    }
}

} // namespace

std::vector<ClosedHit> enumerate_closed(const LocalOrder& L, int kmax,
                                        const EnumerationBudget& budget) {
    const int r = L.lambda.rank();
    const int64_t p = L.p;
    if (kmax < 0)
        throw BadInput("kmax must be nonnegative");

    // int64 images of the action matrices, with a width guard
    std::vector<std::vector<int64_t>> actions;
    Int maxA = 1;
    for (const auto& A : L.actions) {
        std::vector<int64_t> a64(A.size());
        for (size_t i = 0; i < A.size(); ++i) {
            if (abs(A[i]) > Int(1) << 30)
                throw ResourceBudgetExceeded("structure constants exceed the fast "
                                             "integer enumeration path");
            a64[i] = A[i].convert_to<int64_t>();
            maxA = std::max(maxA, Int(abs(A[i])));
        }
        actions.push_back(std::move(a64));
    }
    // worst-case magnitude through the reduction cascade must stay in int64
    Int pk = pow_int(Int(p), kmax);
    Int bound = Int(r) * maxA * pk;
    for (int i = 1; i < r; ++i)
        bound *= pk + 1;
    if (bound > (Int(1) << 62))
        throw ResourceBudgetExceeded("counting depth p^" + std::to_string(kmax) +
                                     " overflows the fast integer path");

    // every pivot composition with sum <= kmax, in (total, lex) order
    std::vector<Composition> comps;
    {
        struct Rec {
            int r;
            int target;
            std::vector<int64_t> a;
            std::vector<Composition>* out;
            void go(int pos, int64_t left) {
                if (pos == r - 1) {
                    a[static_cast<size_t>(pos)] = left;
                    out->push_back(Composition{a, target});
                    return;
                }
                for (int64_t v = 0; v <= left; ++v) {
                    a[static_cast<size_t>(pos)] = v;
                    go(pos + 1, left - v);
                }
            }
        };
        for (int k = 0; k <= kmax; ++k) {
            Rec rec{r, k, std::vector<int64_t>(r, 0), &comps};
            rec.go(0, k);
        }
    }

    // budget precheck: candidate count per composition is p^{sum_j j a_j}
    Int total = 0;
    for (const auto& comp : comps) {
        int64_t e = 0;
        for (int j = 0; j < r; ++j)
            e += j * comp.a[static_cast<size_t>(j)];
        total += pow_int(Int(p), e);
    }
    if (total > Int(budget.max_cells))
        throw ResourceBudgetExceeded("enumeration needs " + total.str() +
                                     " cells, budget is " +
                                     std::to_string(budget.max_cells));

    int threads = budget.threads;
    if (threads <= 0) {
        unsigned hc = std::thread::hardware_concurrency();
        threads = hc == 0 ? 1 : static_cast<int>(hc);
    }
    threads = std::min<int>(threads, static_cast<int>(comps.size()));
    threads = std::max(threads, 1);

    std::vector<std::vector<ClosedHit>> per_comp(comps.size());
    if (threads == 1) {
        for (size_t i = 0; i < comps.size(); ++i)
            run_composition(comps[i], r, p, actions, per_comp[i]);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&, t]() {
                for (size_t i = static_cast<size_t>(t); i < comps.size();
                     i += static_cast<size_t>(threads))
                    run_composition(comps[i], r, p, actions, per_comp[i]);
            });
        for (auto& th : pool)
            th.join();
    }

    std::vector<ClosedHit> hits;
    for (auto& chunk : per_comp)
        for (auto& h : chunk)
            hits.push_back(std::move(h));
    return hits;
}

} // namespace detail

PowerSeriesZ count_ideals(const TableAlgebra& T, int64_t p, int kmax,
                          const EnumerationBudget& budget) {
    auto C = character_table(T);
    auto E = idempotents(T, C);
    LocalOrder L = local_order(T, E, p);
    auto hits = detail::enumerate_closed(L, kmax, budget);
    PowerSeriesZ out;
    out.p = p;
    out.coeff.assign(static_cast<size_t>(kmax) + 1, Int(0));
    for (const auto& h : hits)
        ++out.coeff[static_cast<size_t>(h.k)];
    return out;
}

} // namespace zetalg
