#pragma once

#include <stdexcept>
#include <string>

namespace zap {

struct Error : std::runtime_error {
  explicit Error(const std::string &what) : std::runtime_error(what) {}
};

// Clause construction
struct TautologyError : Error { using Error::Error; };

// Ground resolution: zero or more than one clashing pair
struct NotResolvable : Error { using Error::Error; };

// Cycle / file syntax
struct ParseError : Error { using Error::Error; };

// Explicit cycle image contradicts the sign-respect completion
struct WnConflict : Error { using Error::Error; };

// Repeated point in cycle notation or a non-bijective image map
struct NotBijective : Error { using Error::Error; };

// Instance enumeration exceeded the expansion cap
struct TooManyInstances : Error { using Error::Error; };

// Exhaustive sweep domain exceeds the enumeration cap
struct TooLarge : Error { using Error::Error; };

struct NotAnInstance : Error { using Error::Error; };

// lift_restriction: no group element realizes the restriction
struct NoLift : Error { using Error::Error; };

// shrink_to_transitive verification failed
struct InstanceCountMismatch : Error { using Error::Error; };

struct BadThreshold : Error { using Error::Error; };
struct DomainTooSmall : Error { using Error::Error; };
struct BadSize : Error { using Error::Error; };

// Oracle asked to exceed its enumeration budget
struct BudgetExceeded : Error { using Error::Error; };

// Backtrack search ran past its node cap
struct SearchBudgetExceeded : Error { using Error::Error; };

// Branch heuristic invoked on a total assignment
struct NoBranchAvailable : Error { using Error::Error; };

}  // namespace zap
