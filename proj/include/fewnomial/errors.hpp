#pragma once

#include <stdexcept>
#include <string>

namespace fewnomial {

/// Malformed arguments: dimension mismatches, out-of-range parameters, parse errors.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An algebraic precondition fails (singular W-block, rank defects, non-relations).
class AlgebraicPreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A combinatorial search ran past its configured candidate cap.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Certified counting could not proceed (common factor, shear budget, boundary points).
class CountingDegeneracy : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Violated internal invariant. Seeing one of these is a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace fewnomial
