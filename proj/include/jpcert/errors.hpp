// Error types thrown on violated preconditions.  Each one corresponds to a
// named failure mode of some operation; callers that care about the kind
// catch the specific type.
#pragma once

#include <stdexcept>
#include <string>

namespace jpcert {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define JPCERT_ERROR(NAME)                                                   \
    struct NAME : Error {                                                    \
        explicit NAME(const std::string& msg = #NAME) : Error(msg) {}        \
    }

JPCERT_ERROR(NotCoprime);
JPCERT_ERROR(EvenInput);
JPCERT_ERROR(NotCoprimeModuli);
JPCERT_ERROR(BadResidueClass);
JPCERT_ERROR(ParityMismatch);
JPCERT_ERROR(PreconditionViolated);
JPCERT_ERROR(NegativeArgument);
JPCERT_ERROR(OrderTooSmall);
JPCERT_ERROR(ArgumentBelowOne);
JPCERT_ERROR(DimensionMismatch);
JPCERT_ERROR(BadWeight);
JPCERT_ERROR(WeightTooSmall);
JPCERT_ERROR(OddWeight);
JPCERT_ERROR(MissingCoefficient);
JPCERT_ERROR(DomainError);
JPCERT_ERROR(InvalidConstant);
JPCERT_ERROR(HypothesisViolated);
JPCERT_ERROR(EmptyBasis);
JPCERT_ERROR(NonpositiveDiscriminant);
JPCERT_ERROR(BadIndexMatrix);

#undef JPCERT_ERROR

}  // namespace jpcert
