#include "zetalg/formulas.hpp"

#include "zetalg/errors.hpp"

#include <string>

namespace zetalg {

namespace {

bool is_prime(int64_t p) {
    if (p < 2) return false;
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

LocalZeta complete_graph_local(const Int& n, int64_t p) {
    if (n < 2)
        throw BadInput("complete graph needs n >= 2");
    if (!is_prime(p))
        throw BadInput(std::to_string(p) + " is not prime");
    if (n % p != 0)
        throw NotRelevant(std::to_string(p) + " is not a relevant prime of K_" + n.str());
    int64_t m = valuation(n, p);
    // (1 - t) * sum_{i<m} (p t^2)^i + (p t^2)^m
    std::vector<Int> g(static_cast<size_t>(2 * m) + 1, Int(0));
    Int pi = 1;
    for (int64_t i = 0; i < m; ++i) {
        g[static_cast<size_t>(2 * i)] += pi;
        g[static_cast<size_t>(2 * i + 1)] -= pi;
        pi *= p;
    }
    g[static_cast<size_t>(2 * m)] += pi;
    return LocalZeta{p, 2, std::move(g)};
}

LocalZeta petersen_local(int64_t p) {
    if (!is_prime(p))
        throw BadInput(std::to_string(p) + " is not prime");
    if (p != 2 && p != 3 && p != 5)
        throw NotRelevant("the Petersen scheme has relevant primes 2, 3, 5");
    return LocalZeta{p, 3, {Int(1), Int(-1), Int(p)}};
}

LocalZeta square_local() {
    // The classical closed form for this scheme reads
    //   1 - 2t + 6t^2 - 3t^3 + 4t^4 + 4t^5,
    // but that expands to 6 ideals of index 4 while direct enumeration finds
    // 7.  Two corrections feed the extra ideals: the genus class of
    // <(1,0,1),(0,1,1),(0,0,2)> has no representative between the order and
    // the maximal order (every element has coordinates (a, b, a+b+2c), so no
    // unit scaling puts 1 inside it), and the non-order overlattice class
    // <b0, 2e1+e2, 2e2> has automorphism measure 1/2, not 1, which doubles
    // its genus series.  Both engines and the exhaustive census agree on the
    // value below.
    return LocalZeta{2, 3, {Int(1), Int(-2), Int(7), Int(-4), Int(6), Int(4)}};
}

LocalZeta gq21_local() {
    return LocalZeta{3, 3, {Int(1), Int(-2), Int(4), Int(3), Int(12), Int(-18), Int(27)}};
}

GlobalZeta crown_global(const Int& n) {
    if (n < 3 || n % 2 == 0)
        throw BadInput("crown graphs need an odd n > 1");
    GlobalZeta Z;
    Z.rank = 4;
    {
        LocalZeta k2 = complete_graph_local(Int(2), 2);
        Z.locals.emplace(2, LocalZeta{2, 4, poly_mul(k2.numerator, k2.numerator)});
    }
    for (int64_t p : prime_factors(n)) {
        LocalZeta kn = complete_graph_local(n, p);
        Z.locals.emplace(p, LocalZeta{p, 4, poly_mul(kn.numerator, kn.numerator)});
    }
    return Z;
}

} // namespace zetalg
