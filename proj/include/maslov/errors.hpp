#pragma once

#include <stdexcept>
#include <string>

namespace maslov {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Geometry
struct NonTransverse : Error { using Error::Error; };
struct OnCurve : Error { using Error::Error; };
struct Degenerate : Error { using Error::Error; };

// Chains
struct PathDegenerate : Error { using Error::Error; };

// Trace construction
struct EndpointNotIntersection : Error { using Error::Error; };
struct IllegalLoopSpec : Error { using Error::Error; };
struct EndpointMismatch : Error { using Error::Error; };
struct UnsupportedSurface : Error { using Error::Error; };

// Maslov computations
struct ParityViolation : Error { using Error::Error; };
struct NotNormalized : Error { using Error::Error; };
struct ArcConditionViolated : Error { using Error::Error; };
struct EndpointNotTransverse : Error { using Error::Error; };
struct NonIntegerDegree : Error { using Error::Error; };
struct NonTermination : Error { using Error::Error; };

// Reduction
struct NotReduced : Error { using Error::Error; };

// Cover
struct InconsistentPeriodicity : Error { using Error::Error; };
struct TruncationTooSmall : Error { using Error::Error; };

// CLI
struct ParseError : Error { using Error::Error; };
struct SemanticError : Error { using Error::Error; };
struct GenerationExhausted : Error { using Error::Error; };

}  // namespace maslov
