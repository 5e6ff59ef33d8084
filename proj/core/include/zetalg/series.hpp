#pragma once

#include "zetalg/errors.hpp"
#include "zetalg/numeric.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace zetalg {

// Truncated Dirichlet-series-in-t data: coeff[k] counts index-p^k objects.
struct PowerSeriesZ {
    int64_t p = 0;
    std::vector<Int> coeff; // degrees 0..kmax
    int kmax() const { return static_cast<int>(coeff.size()) - 1; }
};

// Same, with rational coefficients (zeta integrals before prefactors).
struct PowerSeriesQ {
    int64_t p = 0;
    std::vector<Rat> coeff;
    int kmax() const { return static_cast<int>(coeff.size()) - 1; }
};

// Local factor g(t) / (1-t)^r with g in Z[t], g(0) = 1, t = p^{-s}.
struct LocalZeta {
    int64_t p = 0;
    int rank = 0;
    std::vector<Int> numerator; // g, ascending, no trailing zeros
};

struct GlobalZeta {
    int rank = 0;
    std::map<int64_t, LocalZeta> locals; // relevant primes only
};

// Multiplies the counted series by (1-t)^r and declares the numerator found
// when the trailing window of max(3, r) coefficients vanishes.  Throws
// NotStabilized otherwise.
LocalZeta reconstruct_local(const PowerSeriesZ& series, int rank);

// Expands g(t)/(1-t)^r back into counting coefficients 0..kmax.
PowerSeriesZ expand_local(const LocalZeta& zeta, int kmax);

// Small exact-series helpers shared by the engines and the tests.
std::vector<Rat> series_mul(const std::vector<Rat>& a, const std::vector<Rat>& b, int kmax);
std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b);
std::vector<Rat> geometric_inverse_series(int rank, int kmax); // 1/(1-t)^r

} // namespace zetalg
