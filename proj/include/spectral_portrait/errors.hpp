#pragma once

#include <stdexcept>
#include <string>

namespace spectral_portrait {

// Base of all library errors; name() is the stable identifier printed by the CLI.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    virtual const char* name() const noexcept { return "Error"; }
};

#define SPECTRAL_PORTRAIT_ERROR(Name)                                        \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
        const char* name() const noexcept override { return #Name; }         \
    };

SPECTRAL_PORTRAIT_ERROR(NoRootInDomain)
SPECTRAL_PORTRAIT_ERROR(ConvergenceFailure)
SPECTRAL_PORTRAIT_ERROR(Overflow)
SPECTRAL_PORTRAIT_ERROR(BranchJump)
SPECTRAL_PORTRAIT_ERROR(StallError)
SPECTRAL_PORTRAIT_ERROR(BisectionBracketFailure)
SPECTRAL_PORTRAIT_ERROR(MultipleIntersections)
SPECTRAL_PORTRAIT_ERROR(NoIntersection)
SPECTRAL_PORTRAIT_ERROR(DomainError)
SPECTRAL_PORTRAIT_ERROR(EmptyWindow)
SPECTRAL_PORTRAIT_ERROR(SingularB)
SPECTRAL_PORTRAIT_ERROR(SingularPencil)
SPECTRAL_PORTRAIT_ERROR(ConfigError)

#undef SPECTRAL_PORTRAIT_ERROR

}  // namespace spectral_portrait
