// SPDX-License-Identifier: Apache-2.0
//
// prelog — capacity pre-log toolkit for correlated block-fading SIMO channels

#ifndef PRELOG_ERRORS_HPP
#define PRELOG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace prelog {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input failed a structural precondition (dimensions, norms, ranges).
struct ValidationError : Error {
    using Error::Error;
};

/// Iterative routine did not converge within its cap.
struct ConvergenceError : Error {
    using Error::Error;
};

/// Combinatorial search exceeded its configured test budget.
struct BudgetError : Error {
    using Error::Error;
};

/// A Monte Carlo sample hit a measure-zero degenerate configuration
/// (e.g. coincident singular values) too often to be plausible.
struct DegenerateSampleError : Error {
    using Error::Error;
};

/// File or stream level I/O and parse failures.
struct IoError : Error {
    using Error::Error;
};

} // namespace prelog

#endif // PRELOG_ERRORS_HPP
