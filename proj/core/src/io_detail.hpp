#pragma once

// Internal: nlohmann builders behind io.hpp's string API, shared with the
// CLI so composed documents reuse the exact same sub-schemas.  Not installed.

#include "zetalg/character.hpp"
#include "zetalg/plattice.hpp"
#include "zetalg/series.hpp"

#include <json.hpp>

namespace zetalg::detail {

using ordered_json = nlohmann::ordered_json;

// Small ints stay JSON numbers, anything past 64 bits becomes a decimal
// string, mirroring the input convention.
ordered_json json_int(const Int& v);
ordered_json json_rat(const Rat& q); // always a string, "a" or "a/b"

ordered_json json_int_list(const std::vector<Int>& v);

ordered_json json_local(const LocalZeta& z);
ordered_json json_global(const GlobalZeta& z);
ordered_json json_plattice(const PLattice& L);

} // namespace zetalg::detail
