#include "zetalg/series.hpp"

#include <algorithm>
#include <string>

namespace zetalg {

LocalZeta reconstruct_local(const PowerSeriesZ& series, int rank) {
    const int K = series.kmax();
    if (K < 0)
        throw BadInput("empty counting series");
    // g = (1-t)^r * sum a_k t^k, coefficientwise with binomial alternation
    std::vector<Int> g(static_cast<size_t>(K) + 1, Int(0));
    for (int k = 0; k <= K; ++k) {
        Int s = 0;
        for (int i = 0; i <= std::min<int64_t>(rank, k); ++i) {
            Int term = binomial(rank, i) * series.coeff[static_cast<size_t>(k - i)];
            s += (i % 2 == 0) ? term : -term;
        }
        g[static_cast<size_t>(k)] = s;
    }
    if (g[0] != 1)
        throw CrossCheckFailure("counting series does not start at 1");

    const int window = std::max(3, rank);
    if (K + 1 < window + 1)
        throw NotStabilized("counting series too short for a length-" +
                            std::to_string(window) + " stabilization window");
    for (int k = K - window + 1; k <= K; ++k)
        if (g[static_cast<size_t>(k)] != 0)
            throw NotStabilized("numerator still moving at degree " + std::to_string(k) +
                                " with kmax " + std::to_string(K));
    int deg = K - window;
    while (deg > 0 && g[static_cast<size_t>(deg)] == 0)
        --deg;
    g.resize(static_cast<size_t>(deg) + 1);
    return LocalZeta{series.p, rank, std::move(g)};
}

PowerSeriesZ expand_local(const LocalZeta& zeta, int kmax) {
    if (kmax < 0)
        throw BadInput("kmax must be nonnegative");
    PowerSeriesZ out;
    out.p = zeta.p;
    out.coeff.assign(static_cast<size_t>(kmax) + 1, Int(0));
    const int deg = static_cast<int>(zeta.numerator.size()) - 1;
    for (int k = 0; k <= kmax; ++k) {
        Int s = 0;
        for (int j = 0; j <= std::min(deg, k); ++j)
            s += zeta.numerator[static_cast<size_t>(j)] *
                 binomial(k - j + zeta.rank - 1, zeta.rank - 1);
        out.coeff[static_cast<size_t>(k)] = s;
    }
    return out;
}

std::vector<Rat> series_mul(const std::vector<Rat>& a, const std::vector<Rat>& b,
                            int kmax) {
    std::vector<Rat> out(static_cast<size_t>(kmax) + 1, Rat(0));
    for (size_t i = 0; i < a.size() && i <= static_cast<size_t>(kmax); ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size() && i + j <= static_cast<size_t>(kmax); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.empty() || b.empty())
        return {};
    std::vector<Int> out(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<Rat> geometric_inverse_series(int rank, int kmax) {
    std::vector<Rat> out(static_cast<size_t>(kmax) + 1);
    if (rank == 0) {
        // 1/(1-t)^0 = 1; the binomial identity below degenerates here.
        out[0] = Rat(1);
        return out;
    }
    for (int k = 0; k <= kmax; ++k)
        out[static_cast<size_t>(k)] = Rat(binomial(k + rank - 1, rank - 1));
    return out;
}

} // namespace zetalg
