#include "zetalg/numeric.hpp"

#include "zetalg/errors.hpp"

#include <boost/multiprecision/integer.hpp>

namespace zetalg {

int64_t valuation(const Int& x, int64_t p) {
    if (x == 0)
        throw BadInput("valuation of zero is undefined");
    Int a = abs(x);
    int64_t v = 0;
    while (a % p == 0) {
        a /= p;
        ++v;
    }
    return v;
}

int64_t valuation(const Rat& x, int64_t p) {
    return valuation(numerator_of(x), p) - valuation(denominator_of(x), p);
}

Int pow_int(const Int& base, int64_t exp) {
    Int r = 1;
    Int b = base;
    int64_t e = exp;
    while (e > 0) {
        if (e & 1)
            r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

Int mod_inverse(const Int& a, const Int& m) {
    // extended Euclid; m > 1, gcd(a, m) = 1
    Int old_r = ((a % m) + m) % m, r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1)
        throw BadInput("mod_inverse: arguments not coprime");
    return ((old_s % m) + m) % m;
}

Int mod_reduce(const Rat& x, const Int& m) {
    Int num = numerator_of(x) % m;
    Int den = denominator_of(x) % m;
    Int r = (num * mod_inverse(den, m)) % m;
    return r < 0 ? r + m : r;
}

std::vector<int64_t> prime_factors(const Int& n) {
    std::vector<int64_t> out;
    Int m = abs(n);
    if (m <= 1)
        return out;
    auto strip = [&](int64_t d) {
        if (m % d == 0) {
            out.push_back(d);
            while (m % d == 0)
                m /= d;
        }
    };
    strip(2);
    strip(3);
    for (int64_t d = 5; Int(d) * d <= m; d += 6) {
        strip(d);
        strip(d + 2);
    }
    if (m > 1) {
        if (m > Int(int64_t(1) << 62))
            throw BadInput("prime factor exceeds 64-bit range: " + m.str());
        out.push_back(static_cast<int64_t>(m));
    }
    return out;
}

Int binomial(int64_t n, int64_t k) {
    if (k < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Int r = 1;
    for (int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

bool is_integer(const Rat& q) { return denominator_of(q) == 1; }

} // namespace zetalg
