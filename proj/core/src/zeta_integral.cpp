#include "zetalg/zeta.hpp"

#include "zeta_detail.hpp"
#include "zetalg/errors.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>

namespace zetalg {

namespace {

Rat p_power(int64_t p, int64_t v) {
    if (v >= 0)
        return Rat(pow_int(Int(p), v));
    return Rat(Int(1), pow_int(Int(p), -v));
}

void for_each_composition(int parts, int64_t total, std::vector<int64_t>& c, int pos,
                          const std::function<void()>& f) {
    if (pos == parts - 1) {
        c[static_cast<size_t>(pos)] = total;
        f();
        return;
    }
    for (int64_t d = 0; d <= total; ++d) {
        c[static_cast<size_t>(pos)] = d;
        for_each_composition(parts, total - d, c, pos + 1, f);
    }
}

} // namespace

PowerSeriesQ zeta_integral_series(const PLattice& S, int kmax) {
    if (kmax < 0)
        throw BadInput("kmax must be nonnegative");
    const int r = S.rank();
    const int64_t p = S.p();
    if (r > 30)
        throw BadInput("rank too large for the inclusion-exclusion strata");

    // coordinatewise valuation floor of S
    std::vector<int64_t> floor_v(r, std::numeric_limits<int64_t>::max());
    for (int j = 0; j < r; ++j)
        for (int i = 0; i <= j; ++i) {
            const Rat& x = S.entry(i, j);
            if (x != 0)
                floor_v[static_cast<size_t>(j)] =
                    std::min(floor_v[static_cast<size_t>(j)], valuation(x, p));
        }

    // vol(S cap {v(x_i) >= e_i}) = p^{-pivot sum} of the intersection with
    // the diagonal lattice; memoized since neighbouring strata share corners
    std::map<std::vector<int64_t>, int64_t> memo;
    auto box_exponent = [&](const std::vector<int64_t>& e) -> int64_t {
        auto it = memo.find(e);
        if (it != memo.end())
            return it->second;
        std::vector<Rat> rows(static_cast<size_t>(r) * r, Rat(0));
        for (int i = 0; i < r; ++i)
            rows[static_cast<size_t>(i) * r + i] = p_power(p, e[static_cast<size_t>(i)]);
        PLattice D = PLattice::from_canonical(p, r, std::move(rows));
        int64_t s = intersect(S, D).pivot_exponent_sum();
        memo.emplace(e, s);
        return s;
    };

    Rat unit_factor = 1; // (1 - 1/p)^{-r} = (p/(p-1))^r
    for (int i = 0; i < r; ++i)
        unit_factor *= Rat(Int(p), Int(p - 1));

    int64_t base = 0;
    for (int i = 0; i < r; ++i)
        base += floor_v[static_cast<size_t>(i)];

    PowerSeriesQ out;
    out.p = p;
    out.coeff.assign(static_cast<size_t>(kmax) + 1, Rat(0));
    std::vector<int64_t> v(r);
    std::vector<int64_t> e(r);
    for (int k = 0; k <= kmax; ++k) {
        if (k < base)
            continue; // no point of S has total valuation below the floor
        Rat acc = 0;
        // exact-valuation strata: v >= floor with sum k, volume by
        // inclusion-exclusion over which coordinates exceed v
        for_each_composition(r, k - base, v, 0, [&]() {
            for (uint32_t mask = 0; mask < (1u << r); ++mask) {
                int bits = 0;
                for (int i = 0; i < r; ++i) {
                    int64_t up = (mask >> i) & 1u;
                    bits += static_cast<int>(up);
                    e[static_cast<size_t>(i)] =
                        floor_v[static_cast<size_t>(i)] + v[static_cast<size_t>(i)] + up;
                }
                Rat vol = p_power(p, -box_exponent(e));
                acc += (bits % 2 == 0) ? vol : -vol;
            }
        });
        out.coeff[static_cast<size_t>(k)] = unit_factor * p_power(p, k) * acc;
    }
    return out;
}

namespace detail {

PowerSeriesZ genus_integral(const PLattice& lambda, const PLattice& M, int kmax,
                            const Rat& measure) {
    const int64_t p = lambda.p();
    const int64_t shift = lambda.pivot_exponent_sum() - M.pivot_exponent_sum();
    const int64_t hi = kmax + std::max<int64_t>(shift, 0);
    PowerSeriesQ I = zeta_integral_series(conductor(M, lambda), static_cast<int>(hi));
    for (int64_t j = 0; j < std::min<int64_t>(shift, hi + 1); ++j)
        if (I.coeff[static_cast<size_t>(j)] != 0)
            throw CrossCheckFailure("zeta integral has mass below the index shift p^" +
                                    std::to_string(shift));
    PowerSeriesZ out;
    out.p = p;
    out.coeff.assign(static_cast<size_t>(kmax) + 1, Int(0));
    for (int64_t k = 0; k <= kmax; ++k) {
        int64_t src = k + shift;
        if (src < 0 || src > hi)
            continue;
        Rat z = I.coeff[static_cast<size_t>(src)] / measure;
        if (!is_integer(z) || z < 0)
            throw CrossCheckFailure("genus series coefficient at t^" + std::to_string(k) +
                                    " is " + numerator_of(z).str() + "/" +
                                    denominator_of(z).str() +
                                    ", expected a nonnegative integer");
        out.coeff[static_cast<size_t>(k)] = numerator_of(z);
    }
    return out;
}

} // namespace detail

PowerSeriesZ genus_zeta_by_integral(const TableAlgebra& T, int64_t p,
                                    const PLattice& M, int kmax) {
    auto C = character_table(T);
    auto E = idempotents(T, C);
    LocalOrder L = local_order(T, E, p);
    Rat mu = unit_measure(M).value;
    return detail::genus_integral(L.lambda, M, kmax, mu);
}

} // namespace zetalg
