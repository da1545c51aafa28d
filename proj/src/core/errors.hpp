#pragma once

#include <stdexcept>
#include <string>

namespace latfact {

// Bad identifiers, malformed files, overlapping intervals, and the like.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A stated precondition does not hold (e.g. context not reduced).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The input fails a structural requirement (not a partial order, not a lattice).
struct StructuralError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An oracle refused to run because the instance exceeds its budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace latfact
