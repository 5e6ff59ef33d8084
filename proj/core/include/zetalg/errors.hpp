#pragma once

#include <stdexcept>
#include <string>

namespace zetalg {

// Every error the library raises derives from Error.  kind() is stable and
// machine-checkable; what() carries human-readable context (which axiom,
// which entry, which engine disagreed, ...).
class Error : public std::runtime_error {
public:
    enum class Kind {
        bad_input,                    // malformed schema, unknown builtin, bad flag
        non_commutative,
        negative_structure_constant,
        axiom_violation,
        not_integral,
        not_split,
        non_integral_frame_number,
        singular,
        precision_unstable,
        resource_budget_exceeded,
        not_stabilized,
        cross_check_failure,
        not_relevant,
    };

    Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind_(k) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

#define ZETALG_ERROR_TYPE(Name, kind_value)                                    \
    struct Name : Error {                                                      \
        explicit Name(const std::string& m) : Error(Kind::kind_value, m) {}    \
    }

ZETALG_ERROR_TYPE(BadInput, bad_input);
ZETALG_ERROR_TYPE(NonCommutative, non_commutative);
ZETALG_ERROR_TYPE(NegativeStructureConstant, negative_structure_constant);
ZETALG_ERROR_TYPE(AxiomViolation, axiom_violation);
ZETALG_ERROR_TYPE(NotIntegral, not_integral);
ZETALG_ERROR_TYPE(NotSplit, not_split);
ZETALG_ERROR_TYPE(NonIntegralFrameNumber, non_integral_frame_number);
ZETALG_ERROR_TYPE(Singular, singular);
ZETALG_ERROR_TYPE(PrecisionUnstable, precision_unstable);
ZETALG_ERROR_TYPE(ResourceBudgetExceeded, resource_budget_exceeded);
ZETALG_ERROR_TYPE(NotStabilized, not_stabilized);
ZETALG_ERROR_TYPE(CrossCheckFailure, cross_check_failure);
ZETALG_ERROR_TYPE(NotRelevant, not_relevant);

#undef ZETALG_ERROR_TYPE

} // namespace zetalg
