#pragma once

#include <stdexcept>
#include <string>

namespace tfib {

// Base class for all contract violations raised by the library.  Each error
// carries a stable identifier (name()) that the CLI echoes verbatim, so
// scripts can match on it without parsing prose.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define TFIB_DEFINE_ERROR(Name)                                            \
    class Name : public Error {                                            \
    public:                                                                \
        explicit Name(const std::string& what) : Error(#Name, what) {}     \
    }

// lattice geometry
TFIB_DEFINE_ERROR(OriginNotInterior);
TFIB_DEFINE_ERROR(NonIntegralDual);

// subdivisions
TFIB_DEFINE_ERROR(DomainMismatch);
TFIB_DEFINE_ERROR(WallOnBoundary);
TFIB_DEFINE_ERROR(NonConvexQuad);

// spines
TFIB_DEFINE_ERROR(NotInduced);
TFIB_DEFINE_ERROR(DegenerateCell);

// amoeba sampling
TFIB_DEFINE_ERROR(NoRootsFound);
TFIB_DEFINE_ERROR(NumericalFailure);
TFIB_DEFINE_ERROR(EmptyInput);

// gradient flow
TFIB_DEFINE_ERROR(PoleOfS);
TFIB_DEFINE_ERROR(HitCriticalSet);
TFIB_DEFINE_ERROR(StepLimitExceeded);

// monodromy
TFIB_DEFINE_ERROR(UnsupportedType);
TFIB_DEFINE_ERROR(CompositeTypeUndefined);

// assembly
TFIB_DEFINE_ERROR(LegCountMismatch);
TFIB_DEFINE_ERROR(OrientationMismatch);
TFIB_DEFINE_ERROR(UntypedVertex);
TFIB_DEFINE_ERROR(NonTrivalentVertex);

// duality
TFIB_DEFINE_ERROR(InconsistentInput);

// transitions
TFIB_DEFINE_ERROR(NotFloppable);
TFIB_DEFINE_ERROR(WrongState);
TFIB_DEFINE_ERROR(EulerBookkeepingViolated);
TFIB_DEFINE_ERROR(InvalidSpec);

// local models
TFIB_DEFINE_ERROR(NotOnVariety);
TFIB_DEFINE_ERROR(OnStabilizerLocus);

// file formats
TFIB_DEFINE_ERROR(ParseError);

#undef TFIB_DEFINE_ERROR

}  // namespace tfib
