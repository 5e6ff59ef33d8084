#pragma once

#include "zetalg/character.hpp"
#include "zetalg/plattice.hpp"
#include "zetalg/table_algebra.hpp"
#include "zetalg/zeta.hpp"

#include <string>

namespace zetalg {

// Input schema: {"rank": r, "tensor": [[[...]]], "involution": [...]} or
// {"intersection_array": {"b": [...], "c": [...]}}.  Integers may be JSON
// numbers or decimal strings (for values past 64 bits).  Errors cite the
// offending field.
TableAlgebra parse_algebra_json(const std::string& text);

// Serializers produce deterministic, byte-stable JSON (fixed key order).
std::string local_zeta_to_json(const LocalZeta& z);
std::string global_zeta_to_json(const GlobalZeta& z);
std::string plattice_to_json(const PLattice& L); // {"p":p,"rows":[["a/p^e",..]]}

// One lattice entry as "a" or "a/p^e".
std::string plattice_entry_string(const Rat& x, int64_t p);

std::string int_to_json_scalar(const Int& v); // raw token: number or "quoted"

} // namespace zetalg
