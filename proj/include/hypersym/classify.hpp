#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypersym/diagact.hpp"

namespace hypersym {

// One case of the order classification: which shape of simple polynomial
// produced the bound, its parameters, and the "factor of" modulus.
struct OrderCase {
    std::string tag;          // "i".."v"
    std::vector<int> params;  // (N), (a), (a_1..a_t) or (a_1..a_t, b)
    Int bound_value;
};

struct OrderReport {
    int d = 0;
    int n_vars = 0;
    std::vector<Int> maximal_orders;  // divisor-maximal, ascending
    std::vector<OrderCase> cases;
};

// All achievable-order bounds for degree-d hypersurfaces in N variables:
// (i)   |1-(1-d)^N| / d                                  (Klein K_N)
// (ii)  (d-1)^{N-1}                                      (chain T_N)
// (iii) |1-(1-d)^a|, 1 <= a <= N-1
// (iv)  lcm over strictly increasing (a_1 < ... < a_t), t >= 2, sum <= N
// (v)   as (iv) with one extra chain part b >= 2, sum + b <= N
std::vector<OrderCase> order_cases(int d, int n_vars);

// Union of all case bounds reduced to divisor-maximal elements; n is an
// achievable order iff n divides one of them.
std::vector<Int> order_set(int d, int n_vars);

OrderReport order_report(int d, int n_vars);

// All SimpleTypes with total = n (exact) or <= n, deterministically
// ordered; optionally restricted to at most one chain part T_{>=2}.
std::vector<SimpleType> enumerate_simple_types(int n, bool exact, bool at_most_one_t = false);

// Simple-polynomial witness realizing order n in <= N variables: the type
// and an explicit diagonal automorphism, verified (invariant support,
// projective order exactly n) before returning.  nullopt when no simple
// type admits the order.
std::optional<std::pair<SimpleType, DiagonalAutomorphism>> witness_for_order(int d, int n_vars,
                                                                             const Int& n);

// Sufficient condition for liftability: some cyclic factor g exists such
// that all remaining factors have order coprime to gcd(d, N).
bool liftable_sufficient(const std::vector<Int>& cyclic_orders, int d, int n_vars);

// Diagonal automorphism of projective order n on the canonical support of
// type t, built from per-part Klein/chain generator powers.  Requires n to
// divide the exponent of the predicted group.
DiagonalAutomorphism automorphism_of_order(int d, const SimpleType& t, const Int& n);

// One row of the cubic-fourfold table: the order, every 6-variable simple
// type admitting it (expected singleton), and a verified witness.
struct Cubic4Row {
    Int order;
    std::vector<SimpleType> admitting_types;
    SimpleType unique_type;  // first admitting type
    FiniteAbelianGroup group;
    DiagonalAutomorphism witness;
};

struct Cubic4Report {
    std::vector<Int> maximal_orders;
    std::vector<Cubic4Row> rows;
};

// The (d, N) = (3, 6) application: maximal orders {21,30,32,33,36,48},
// uniqueness scan over all simple types with total 6, and witnesses.
Cubic4Report cubic4_report();

}  // namespace hypersym
