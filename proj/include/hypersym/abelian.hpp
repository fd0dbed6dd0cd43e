#pragma once

#include <vector>

#include "hypersym/bigint.hpp"
#include "hypersym/errors.hpp"
#include "hypersym/matrix.hpp"
#include "hypersym/snf.hpp"

namespace hypersym {

// Finite abelian group in canonical form: invariant factors
// n_1 | n_2 | ... | n_k with every n_i >= 2.  Empty list = trivial group.
// Two groups are isomorphic iff the lists are equal.
struct FiniteAbelianGroup {
    std::vector<Int> invariant_factors;

    Int order() const {
        Int o = 1;
        for (const Int& n : invariant_factors) o *= n;
        return o;
    }
    bool operator==(const FiniteAbelianGroup&) const = default;
};

// (Z/m_1 x ... x Z/m_k) / <(c_1, ..., c_k)> with 0 <= c_i < m_i.
struct QuotientPresentation {
    std::vector<Int> cyclic_orders;   // m_i >= 1
    std::vector<Int> killed_element;  // c_i mod m_i
};

// Invariant factors of the quotient, via SNF of the (k+1) x k
// relation matrix [diag(m); c].
FiniteAbelianGroup quotient_group(const QuotientPresentation& p);

// Quotient structure with enough of the SNF transform kept to pull a
// chosen quotient element back to a tuple in Z^k.  snf_diag lists the
// full diagonal (including trivial 1 entries); the quotient is
// (+) Z/snf_diag[i] under x -> x*V coordinate-wise, so the element with
// z-coordinates w pulls back to w * v_inv.
struct QuotientStructure {
    FiniteAbelianGroup group;
    std::vector<Int> snf_diag;  // length k
    BigIntMatrix v_inv;         // k x k

    // Tuple in Z^k representing an element of order exactly n in the
    // quotient.  Requires n >= 1 and n | exponent of the group.
    std::vector<Int> element_of_order(const Int& n) const;
};

QuotientStructure quotient_structure(const QuotientPresentation& p);

// Order of the killed element: lcm_i(m_i / gcd(m_i, c_i)).
Int killed_element_order(const QuotientPresentation& p);

// Largest invariant factor (group exponent); 1 for the trivial group.
Int max_element_order(const FiniteAbelianGroup& g);

// Element orders of the quotient as a divisor-closed set, returned as its
// maximal elements.  Requires k >= 2 and every c_i of order exactly d in
// Z/m_i; throws HypothesisViolation otherwise, in which case the caller
// must fall back to quotient_group and its largest invariant factor.
std::vector<Int> element_order_set(const QuotientPresentation& p, const Int& d);

}  // namespace hypersym
