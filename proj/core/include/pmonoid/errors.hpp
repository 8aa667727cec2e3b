#pragma once

#include <stdexcept>
#include <string>

namespace pmonoid {

/// Base class of every domain error raised by the library. `kind()` is a
/// stable machine-readable name used by the command-line front-end.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define PMONOID_DEFINE_ERROR(Name, tag)                                  \
    class Name : public Error {                                          \
    public:                                                              \
        explicit Name(const std::string& what) : Error(tag, what) {}     \
    }

PMONOID_DEFINE_ERROR(DivisionByZero, "division-by-zero");
PMONOID_DEFINE_ERROR(DimensionMismatch, "dimension-mismatch");
PMONOID_DEFINE_ERROR(ContainmentViolation, "containment-violation");
PMONOID_DEFINE_ERROR(CommonKernelNonzero, "common-kernel-nonzero");
PMONOID_DEFINE_ERROR(InvalidSequence, "invalid-sequence");
PMONOID_DEFINE_ERROR(NotConvergent, "not-convergent");
PMONOID_DEFINE_ERROR(NotInMH, "not-in-MH");
PMONOID_DEFINE_ERROR(InvalidHinge, "invalid-hinge");
PMONOID_DEFINE_ERROR(DegreeOutOfRange, "degree-out-of-range");
PMONOID_DEFINE_ERROR(FormatError, "format-error");

#undef PMONOID_DEFINE_ERROR

}  // namespace pmonoid
