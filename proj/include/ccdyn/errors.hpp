#pragma once

#include <stdexcept>

namespace ccdyn {

/// Base class for physics-domain failures (exit code 3 in the CLI).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A formula was evaluated at a pole: the atoms are resonant with a
/// delocalized field mode and the requested quantity is undefined there.
struct SingularityError : DomainError {
    using DomainError::DomainError;
};

/// A model was used outside the regime it was constructed for.
struct RegimeError : DomainError {
    using DomainError::DomainError;
};

}  // namespace ccdyn
