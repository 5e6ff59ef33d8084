#include "zetalg/zeta.hpp"

#include "zeta_detail.hpp"
#include "zetalg/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace zetalg {

namespace {

// canonical-form lookups for enumerated sublattices, with a cache keyed by
// the normalized rows (scaled copies of one lattice normalize identically,
// so the expensive unit-orbit scan runs once per shape)
struct Classifier {
    int r;
    int64_t p;
    std::vector<Rat> X; // basis -> idempotent coordinate change, row-major
    std::map<std::vector<Rat>, std::vector<Rat>> cache;

    Classifier(const IdempotentBasis& E, int64_t prime) : r(E.rank), p(prime) {
        X.resize(static_cast<size_t>(r) * r);
        for (size_t i = 0; i < X.size(); ++i)
            X[i] = Rat(E.basis_rows[i]);
    }

    std::vector<Rat> canonical_rows(const std::vector<int64_t>& H) {
        std::vector<Rat> rows(static_cast<size_t>(r) * r, Rat(0));
        for (int i = 0; i < r; ++i)
            for (int c = i; c < r; ++c) {
                if (H[static_cast<size_t>(i) * r + c] == 0)
                    continue;
                Rat h(Int(H[static_cast<size_t>(i) * r + c]));
                for (int k = 0; k < r; ++k)
                    rows[static_cast<size_t>(i) * r + k] +=
                        h * X[static_cast<size_t>(c) * r + k];
            }
        PLattice N = normalize(PLattice::from_rows(p, r, std::move(rows)));
        auto it = cache.find(N.rows());
        if (it != cache.end())
            return it->second;
        std::vector<Rat> canon = canonical_form(N).rows();
        cache.emplace(N.rows(), canon);
        return canon;
    }
};

int resolve_counting_kmax(int rank, int64_t p, int kmax,
                          const EnumerationBudget& budget) {
    return std::min(kmax, detail::feasible_kmax(rank, p, kmax, budget.max_cells));
}

} // namespace

std::vector<PLattice> genus_representatives(const LocalOrder& L) {
    const int r = L.lambda.rank();
    const int64_t p = L.lambda.p();
    std::vector<PLattice> reps;
    std::map<std::vector<Rat>, size_t> seen;
    // prefer representatives sitting between lambda and Lambda_0: they carry
    // nonnegative index exponents and match the classical census tables
    for (const PLattice& N : overlattices(L.lambda)) {
        std::vector<Rat> key = canonical_form(normalize(N)).rows();
        if (seen.emplace(std::move(key), reps.size()).second)
            reps.push_back(N);
    }
    // The overlattice sweep alone can miss classes.  The usual argument that
    // every class has a representative above lambda picks an element with all
    // coordinates unital, and that fails over residue field F_2 from rank 3
    // on, where the coordinate kernels can cover the whole reduction.  Every
    // normalized stable lattice does contain p^c Lambda_0 once
    // p^c Lambda_0 <= lambda, so sweeping pivots up to c is complete.
    int64_t c = 0;
    for (;; ++c) {
        // p^d Lambda_0 <= lambda for d the index exponent, so this terminates
        if (c > L.lambda.pivot_exponent_sum())
            throw CrossCheckFailure("conductor exponent exceeded the index exponent");
        bool inside = true;
        for (int k = 0; k < r && inside; ++k) {
            std::vector<Rat> v(r, Rat(0));
            v[k] = Rat(pow_int(Int(p), c));
            inside = L.lambda.contains(v);
        }
        if (inside)
            break;
    }
    for (const PLattice& N : detail::stable_census(L.lambda, c)) {
        PLattice M = normalize(N);
        std::vector<Rat> key = canonical_form(M).rows();
        if (seen.emplace(std::move(key), reps.size()).second)
            reps.push_back(std::move(M));
    }
    std::sort(reps.begin(), reps.end(), [](const PLattice& x, const PLattice& y) {
        int64_t sx = x.pivot_exponent_sum(), sy = y.pivot_exponent_sum();
        if (sx != sy)
            return sx < sy;
        return x < y;
    });
    return reps;
}

PowerSeriesZ genus_zeta_by_counting(const TableAlgebra& T, int64_t p,
                                    const PLattice& M, int kmax,
                                    const EnumerationBudget& budget) {
    auto C = character_table(T);
    auto E = idempotents(T, C);
    LocalOrder L = local_order(T, E, p);
    auto hits = detail::enumerate_closed(L, kmax, budget);

    Classifier cls(E, p);
    std::vector<Rat> target = canonical_form(normalize(M)).rows();
    PowerSeriesZ out;
    out.p = p;
    out.coeff.assign(static_cast<size_t>(kmax) + 1, Int(0));
    for (const auto& h : hits)
        if (cls.canonical_rows(h.rows) == target)
            ++out.coeff[static_cast<size_t>(h.k)];
    return out;
}

GenusDecomposition genus_decomposition(const TableAlgebra& T, int64_t p, int kmax,
                                       Engine engine, const EnumerationBudget& budget) {
    if (kmax < 0)
        throw BadInput("kmax must be nonnegative");
    auto C = character_table(T);
    auto E = idempotents(T, C);
    LocalOrder L = local_order(T, E, p);
    const int r = T.rank();

    std::vector<PLattice> reps = genus_representatives(L);
    GenusDecomposition dec{p, r, L.lambda, {}, {}};
    std::map<std::vector<Rat>, size_t> class_of;
    for (size_t ci = 0; ci < reps.size(); ++ci) {
        GenusClass gc{reps[ci],
                      canonical_form(normalize(reps[ci])),
                      L.lambda.pivot_exponent_sum() - reps[ci].pivot_exponent_sum(),
                      Rat(0),
                      is_order(reps[ci]),
                      {},
                      {}};
        if (engine != Engine::counting) {
            gc.measure = unit_measure(reps[ci]).value;
            gc.by_integral = detail::genus_integral(L.lambda, reps[ci], kmax, gc.measure);
        }
        class_of.emplace(gc.canonical.rows(), ci);
        dec.classes.push_back(std::move(gc));
    }

    if (engine != Engine::genus) {
        int ckmax = kmax;
        if (engine == Engine::both)
            ckmax = resolve_counting_kmax(r, p, kmax, budget);
        std::vector<detail::ClosedHit> hits;
        for (;;) {
            try {
                hits = detail::enumerate_closed(L, ckmax, budget);
                break;
            } catch (const ResourceBudgetExceeded&) {
                // in cross-check mode fall back to a shallower census rather
                // than giving up; pure counting keeps the hard failure
                if (engine != Engine::both || ckmax == 0)
                    throw;
                --ckmax;
            }
        }
        for (auto& gc : dec.classes) {
            gc.by_counting.p = p;
            gc.by_counting.coeff.assign(static_cast<size_t>(ckmax) + 1, Int(0));
        }
        Classifier cls(E, p);
        for (const auto& h : hits) {
            auto it = class_of.find(cls.canonical_rows(h.rows));
            if (it == class_of.end())
                throw CrossCheckFailure("enumerated sublattice of index p^" +
                                        std::to_string(h.k) +
                                        " matches no genus class");
            ++dec.classes[it->second].by_counting.coeff[static_cast<size_t>(h.k)];
        }
        if (engine == Engine::both) {
            for (size_t ci = 0; ci < dec.classes.size(); ++ci) {
                const auto& gc = dec.classes[ci];
                int upto = std::min(gc.by_counting.kmax(), gc.by_integral.kmax());
                for (int k = 0; k <= upto; ++k)
                    if (gc.by_counting.coeff[static_cast<size_t>(k)] !=
                        gc.by_integral.coeff[static_cast<size_t>(k)])
                        throw CrossCheckFailure(
                            "genus class " + std::to_string(ci) + " disagrees at t^" +
                            std::to_string(k) + ": counted " +
                            gc.by_counting.coeff[static_cast<size_t>(k)].str() +
                            ", integral says " +
                            gc.by_integral.coeff[static_cast<size_t>(k)].str());
            }
        }
    }

    dec.total.p = p;
    dec.total.coeff.assign(static_cast<size_t>(kmax) + 1, Int(0));
    for (const auto& gc : dec.classes) {
        const PowerSeriesZ& src =
            (engine == Engine::counting) ? gc.by_counting : gc.by_integral;
        for (int k = 0; k <= std::min(kmax, src.kmax()); ++k)
            dec.total.coeff[static_cast<size_t>(k)] += src.coeff[static_cast<size_t>(k)];
    }
    return dec;
}

LocalZeta local_zeta(const TableAlgebra& T, int64_t p, Engine engine,
                     const EnumerationBudget& budget) {
    auto C = character_table(T);
    auto E = idempotents(T, C);
    auto RP = relevant_primes(T, E);
    bool relevant = std::find(RP.primes.begin(), RP.primes.end(), p) != RP.primes.end();
    if (!relevant) {
        // maximal local order: the local factor is plain zeta_p^r, so g = 1;
        // still reject non-primes loudly instead of blessing them with g = 1
        auto f = prime_factors(Int(p));
        if (f.size() != 1 || f[0] != p)
            throw BadInput(std::to_string(p) + " is not prime");
        return LocalZeta{p, T.rank(), {Int(1)}};
    }

    LocalOrder L = local_order(T, E, p);
    int64_t d = L.lambda.pivot_exponent_sum();
    int kmax = static_cast<int>(2 * d) + std::max(3, T.rank());
    for (;;) {
        GenusDecomposition dec = genus_decomposition(T, p, kmax, engine, budget);
        try {
            return reconstruct_local(dec.total, T.rank());
        } catch (const NotStabilized&) {
            if (kmax >= 512)
                throw;
            kmax *= 2;
        }
    }
}

GlobalZeta global_zeta(const TableAlgebra& T, Engine engine,
                       const EnumerationBudget& budget) {
    auto C = character_table(T);
    auto E = idempotents(T, C);
    auto RP = relevant_primes(T, E);
    GlobalZeta Z;
    Z.rank = T.rank();
    for (int64_t p : RP.primes)
        Z.locals.emplace(p, local_zeta(T, p, engine, budget));
    return Z;
}

std::vector<Int> expand_dirichlet(const GlobalZeta& Z, int64_t N) {
    if (N < 1)
        throw BadInput("need at least one coefficient");
    const int r = Z.rank;

    // per-prime local counting coefficients, maximal-order shape by default
    std::map<int64_t, std::vector<Int>> cache;
    auto local_coeff = [&](int64_t p, int k) -> Int {
        auto it = Z.locals.find(p);
        if (it == Z.locals.end())
            return binomial(k + r - 1, r - 1);
        auto c = cache.find(p);
        if (c == cache.end()) {
            int kmax = 0;
            Int pk = p;
            while (pk <= N) {
                pk *= p;
                ++kmax;
            }
            c = cache.emplace(p, expand_local(it->second, kmax).coeff).first;
        }
        return c->second[static_cast<size_t>(k)];
    };

    std::vector<Int> out(static_cast<size_t>(N));
    out[0] = 1;
    for (int64_t n = 2; n <= N; ++n) {
        Int a = 1;
        int64_t m = n;
        for (int64_t q = 2; q * q <= m; ++q) {
            if (m % q != 0)
                continue;
            int k = 0;
            while (m % q == 0) {
                m /= q;
                ++k;
            }
            a *= local_coeff(q, k);
        }
        if (m > 1)
            a *= local_coeff(m, 1);
        out[static_cast<size_t>(n - 1)] = a;
    }
    return out;
}

} // namespace zetalg
