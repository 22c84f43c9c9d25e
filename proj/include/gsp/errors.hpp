#pragma once

#include <stdexcept>
#include <string>

namespace gsp {

// Base for all library errors so callers can catch them in one place.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Coxeter matrix does not define a finite reflection group.
struct NonFiniteType : Error {
    using Error::Error;
};

// The node permutation does not preserve the Cartan data.
struct InvalidAutomorphism : Error {
    using Error::Error;
};

// Two elements from different group data were combined.
struct MixedDatum : Error {
    using Error::Error;
};

// An element was required to be a minimal double-coset representative but is not.
struct NotMinimalRep : Error {
    using Error::Error;
};

// The pair (J, y) does not satisfy the twisted-pair conditions.
struct InvalidTwistedPair : Error {
    using Error::Error;
};

// A step choice was not in the admissible set of the current state.
struct InadmissibleChoice : Error {
    using Error::Error;
};

// An internal consistency assertion failed; signals a convention bug.
struct InvariantBreach : Error {
    using Error::Error;
};

// An iteration exceeded its stabilization guard.
struct NoStabilization : Error {
    using Error::Error;
};

// An exact polynomial division left a remainder.
struct NonDivisible : Error {
    using Error::Error;
};

// An exhaustive enumeration exceeds the configured size guard.
struct TooLarge : Error {
    using Error::Error;
};

// Two subspaces or filtrations live in different ambient spaces.
struct AmbientMismatch : Error {
    using Error::Error;
};

}  // namespace gsp
