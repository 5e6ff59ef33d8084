#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

namespace zetalg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// p-adic valuation of a nonzero integer / rational.
int64_t valuation(const Int& x, int64_t p);
int64_t valuation(const Rat& x, int64_t p);

Int pow_int(const Int& base, int64_t exp); // exp >= 0

// Inverse of a modulo m, gcd(a, m) = 1 required.
Int mod_inverse(const Int& a, const Int& m);

// x mod m for a rational x whose denominator is coprime to m; result in [0, m).
Int mod_reduce(const Rat& x, const Int& m);

// Distinct prime factors, ascending.  Trial division; fine at desk scale.
std::vector<int64_t> prime_factors(const Int& n);

Int binomial(int64_t n, int64_t k);

inline Int numerator_of(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator_of(const Rat& q) { return boost::multiprecision::denominator(q); }

bool is_integer(const Rat& q);

} // namespace zetalg
