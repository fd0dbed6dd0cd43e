#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hypersym/bigint.hpp"
#include "hypersym/errors.hpp"

namespace hypersym {

// Enumeration/factorization budgets.  Defaults match the library contract;
// the CLI may override them from HYPERSYM_BUDGET.
struct Budget {
    std::uint64_t trial_division_bound = 10'000'000;
    int pollard_rho_retries = 24;
    std::uint64_t pair_budget = 1'000'000;      // necessary_smoothness_check
    std::uint64_t enumeration_budget = 100'000; // coset / brute-force oracles
};

// prime -> multiplicity.  Deterministic (fixed rho PRNG seed); throws
// FactorizationLimit instead of ever returning a wrong factorization.
std::map<Int, int> factorize(const Int& n, const Budget& budget = {});

// All positive divisors of n >= 1, ascending.
std::vector<Int> divisors(const Int& n, const Budget& budget = {});

// Reduce a set of positive integers to its divisor-maximal elements,
// sorted ascending.
std::vector<Int> divisor_maximal(std::vector<Int> xs);

// n | m for some maximal element m.
bool divides_some(const Int& n, const std::vector<Int>& maximal);

}  // namespace hypersym
