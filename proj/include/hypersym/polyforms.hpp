#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypersym/bigint.hpp"
#include "hypersym/errors.hpp"
#include "hypersym/factor.hpp"

namespace hypersym {

// A monomial: exponent per variable, entries summing to the ambient degree.
using ExponentVector = std::vector<int>;

// A set of degree-d monomials in n_vars variables.  Monomials are kept
// sorted and duplicate-free so supports compare structurally.
struct Support {
    int d = 0;
    int n_vars = 0;
    std::vector<ExponentVector> monomials;

    void normalize();  // sort + dedupe
    bool operator==(const Support&) const = default;

    std::string to_json() const;                     // {"d":..,"n_vars":..,"monomials":[[..]]}
    static Support from_json(const std::string& text);
};

// The data (d, i_1, ..., i_k) defining F_I = sum_a x_a^{d-1} x_{i_a}.
// Targets are 1-based, each in {1, ..., k}.
struct IndexVector {
    int d = 0;
    std::vector<int> targets;

    int k() const { return static_cast<int>(targets.size()); }
};

// Shape of a simple polynomial: multiset of Klein parts K_a (a >= 1) and
// chain parts T_b (b >= 2).  T_1 is normalized to K_1 (both are x^d).
struct SimpleType {
    std::vector<int> k_parts;  // sorted ascending
    std::vector<int> t_parts;  // sorted ascending, entries >= 2

    void normalize();
    int total() const;
    std::string str() const;  // e.g. "K4+T2"
    static SimpleType parse(const std::string& text);
    bool operator==(const SimpleType&) const = default;
    bool operator<(const SimpleType& o) const {
        return std::pair(k_parts, t_parts) < std::pair(o.k_parts, o.t_parts);
    }
};

// Projective point with exact coordinates: each entry is either zero or a
// root of unity exp(2*pi*i * num/den).
struct SingularWitness {
    struct Coord {
        bool zero = true;
        long num = 0;  // angle fraction, reduced, 0 <= num < den
        long den = 1;
    };
    std::vector<Coord> point;
};

struct Counterexample {
    std::vector<int> a_set;  // 1-based variable indices
    std::vector<int> b_set;
};

// F_I as a support; a self-loop a -> a contributes x_a^d once.
Support build_f_i(const IndexVector& iv);

// True iff no pair a < b has i_a = i_b with i_a outside {a, b}; this is
// equivalent to both smoothness and simplicity of F_I.
bool is_smooth_f_i(const IndexVector& iv);

// Decomposition of the functional graph a -> i_a into cycles (K_a) and
// loop-terminated chains (T_b); nullopt when F_I is not simple.
std::optional<SimpleType> graph_decompose(const IndexVector& iv);

// Explicit singular point when a violating pair exists: coordinate 1 at a,
// exp(pi*i/(d-1)) at b, zero elsewhere.  nullopt iff is_smooth_f_i.
std::optional<SingularWitness> singular_witness(const IndexVector& iv);

// Canonical support of a simple polynomial: K parts ascending by size,
// then T parts ascending, each on a consecutive variable block.
Support simple_support(int d, const SimpleType& t);

// Necessary smoothness condition on supports: for every pair of disjoint
// variable sets (A, B) with |A| > |B|, |B| <= max_b, some monomial has
// total A-degree >= d-1 and no B-variable.  Returns the first violating
// pair, or nullopt (pass).  A violation proves every F with this support
// singular; passing is necessary, not sufficient.
std::optional<Counterexample> necessary_smoothness_check(const Support& s, int max_b,
                                                         const Budget& budget = {});

}  // namespace hypersym
