#pragma once

#include "zetalg/table_algebra.hpp"
#include "zetalg/zeta.hpp"

#include <string>
#include <vector>

namespace zetalg {

// Built-in algebras: "kn:<n>", "petersen", "square", "gq21", "crown:<n>"
// (n odd > 1).  Throws BadInput on unknown names or bad parameters.
TableAlgebra make_builtin(const std::string& name);

// Reference global zeta from the formulas module; BadInput if the builtin
// has no closed form (never happens for the names above).
GlobalZeta builtin_reference(const std::string& name);

// Sampling of the formula domains exercised by `verify --builtin all`.
std::vector<std::string> verify_builtin_names();

} // namespace zetalg
