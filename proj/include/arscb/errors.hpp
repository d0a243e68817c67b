#ifndef ARSCB_ERRORS_HPP
#define ARSCB_ERRORS_HPP

#include <stdexcept>

namespace arscb {

/// Numerical degeneracy of otherwise well-formed inputs (singular
/// autocovariance, zero residual spread). Distinct from
/// std::invalid_argument so the CLI can map it to its own exit code.
struct DegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace arscb

#endif
