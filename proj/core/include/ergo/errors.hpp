#pragma once

#include <stdexcept>
#include <string>

namespace ergo {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// -- construction / validation -------------------------------------------
struct NegativeEntry : Error { using Error::Error; };
struct RowSumViolation : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct InvalidDistance : Error { using Error::Error; };
struct TriangleViolation : Error { using Error::Error; };

// -- solvers / certifiers --------------------------------------------------
struct SolverNonconvergence : Error { using Error::Error; };
struct NoCertificate : Error { using Error::Error; };
struct NotSmall : Error { using Error::Error; };
struct NotContracting : Error { using Error::Error; };
struct LyapunovTooWeak : Error { using Error::Error; };
struct LevelSetNotSmall : Error { using Error::Error; };
struct DNotContracting : Error { using Error::Error; };
struct MultipleInvariantMeasures : Error { using Error::Error; };
struct HypothesisViolated : Error { using Error::Error; };
struct VerificationFailed : Error { using Error::Error; };

// -- coupling engine --------------------------------------------------------
struct UnreachableU : Error { using Error::Error; };
struct HorizonTooShort : Error { using Error::Error; };
struct BoundViolated : Error { using Error::Error; };

// -- sdde ------------------------------------------------------------------
struct NonFinite : Error { using Error::Error; };
struct MissingInverse : Error { using Error::Error; };
struct PreconditionViolated : Error { using Error::Error; };
struct ResidualSamplingStuck : Error { using Error::Error; };
struct Inconclusive : Error { using Error::Error; };

// -- cli ---------------------------------------------------------------------
struct UnknownExperiment : Error { using Error::Error; };
struct InvalidConfig : Error { using Error::Error; };
struct IoFailure : Error { using Error::Error; };

}  // namespace ergo
