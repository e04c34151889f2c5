#pragma once

#include <stdexcept>
#include <string>

namespace susylab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define SUSYLAB_DEFINE_ERROR(Name)        \
    class Name : public Error {           \
    public:                               \
        using Error::Error;               \
    }

// Parameter records and instance construction.
SUSYLAB_DEFINE_ERROR(InvalidParameters);
SUSYLAB_DEFINE_ERROR(DomainError);
SUSYLAB_DEFINE_ERROR(SingularityError);

// Shape invariance and phase analysis.
SUSYLAB_DEFINE_ERROR(UnsupportedClass);
SUSYLAB_DEFINE_ERROR(UnsupportedParameters);
SUSYLAB_DEFINE_ERROR(IndeterminatePhase);
SUSYLAB_DEFINE_ERROR(PhaseError);

// Spectra.
SUSYLAB_DEFINE_ERROR(HierarchyError);

// Turning points and quadrature.
SUSYLAB_DEFINE_ERROR(NoTurningPoints);
SUSYLAB_DEFINE_ERROR(SingleIntersection);
SUSYLAB_DEFINE_ERROR(NegativeIntegrand);
SUSYLAB_DEFINE_ERROR(ConvergenceFailure);

// Finite-difference oracle.
SUSYLAB_DEFINE_ERROR(GridTooCoarse);
SUSYLAB_DEFINE_ERROR(TruncationError);
SUSYLAB_DEFINE_ERROR(EmptyInput);

#undef SUSYLAB_DEFINE_ERROR

} // namespace susylab
