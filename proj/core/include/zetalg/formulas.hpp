#pragma once

#include "zetalg/series.hpp"

#include <cstdint>

namespace zetalg {

// Closed-form reference factors used by `verify` and the test suite.  These
// are assembled symbolically, never by enumeration, so they give the engines
// something independent to be checked against.

// K_n at p | n, m = v_p(n):
//   g(t) = (1 - t) * sum_{i=0}^{m-1} (p t^2)^i + (p t^2)^m, rank 2.
LocalZeta complete_graph_local(const Int& n, int64_t p);

// Petersen graph scheme: g(t) = p t^2 - t + 1 at p in {2, 3, 5}, rank 3.
LocalZeta petersen_local(int64_t p);

// Square scheme (rank 3, only p = 2):
//   g(t) = 4t^5 + 6t^4 - 4t^3 + 7t^2 - 2t + 1.
// Differs from the classical closed form, which misses one genus class and
// halves another; see the note in formulas.cpp.
LocalZeta square_local();

// GQ(2,1) scheme (rank 3, only p = 3):
//   g(t) = 27t^6 - 18t^5 + 12t^4 + 3t^3 + 4t^2 - 2t + 1.
LocalZeta gq21_local();

// Crown scheme K_{n,n} - I for odd n > 1 (rank 4): the K_2 factor squared at
// p = 2 and the K_n factor squared at each p | n.
GlobalZeta crown_global(const Int& n);

} // namespace zetalg
