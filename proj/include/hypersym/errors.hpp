#pragma once

#include <stdexcept>
#include <string>

namespace hypersym {

// Lemma hypothesis not met; caller must fall back to a direct computation.
struct HypothesisViolation : std::runtime_error {
    explicit HypothesisViolation(const std::string& what) : std::runtime_error(what) {}
};

// Trial division plus Pollard-rho retries failed within the configured bound.
struct FactorizationLimit : std::runtime_error {
    explicit FactorizationLimit(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration exceeded its configured budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A combinatorial check would require more set pairs than the budget allows.
struct ComplexityRefusal : std::runtime_error {
    explicit ComplexityRefusal(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hypersym
