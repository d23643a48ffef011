#pragma once

#include "merton/core/types.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace merton {

struct Violation {
    std::string code;     ///< machine-readable, e.g. "gamma_zero"
    std::string message;  ///< human-readable
};

/// Every invariant violation in `spec`; empty iff the spec is well-formed.
/// Never throws.
std::vector<Violation> validate(const ProblemSpec& spec);

/// Thrown by entry points that require a valid spec.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

/// Throws ValidationError when validate() reports anything.
void require_valid(const ProblemSpec& spec);

/// Absolute tolerance for the survival/density trapezoid consistency check.
inline constexpr double kMortalityConsistencyTol = 1e-8;

}  // namespace merton
