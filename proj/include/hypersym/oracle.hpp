#pragma once

#include <map>
#include <vector>

#include "hypersym/abelian.hpp"
#include "hypersym/polyforms.hpp"

namespace hypersym {

// Element of Z[zeta_n]: integer coefficient per power of zeta_n.  Zero test
// reduces modulo the n-th cyclotomic polynomial, so it is exact.
class CyclotomicValue {
public:
    explicit CyclotomicValue(long order) : n_(order), coeffs_(order, 0) {}

    static CyclotomicValue zero(long order) { return CyclotomicValue(order); }
    static CyclotomicValue root_power(long order, long k);  // zeta_order^k

    long order() const { return n_; }
    void add(const CyclotomicValue& o, const Int& scale = 1);
    CyclotomicValue times_root(long k) const;  // multiply by zeta_n^k
    bool is_zero() const;

private:
    long n_;
    std::vector<Int> coeffs_;
};

// Coefficients of the n-th cyclotomic polynomial, ascending degree.
std::vector<Int> cyclotomic_polynomial(long n);

enum class VerifyMode { exact, floating };

// Evaluates all formal partials of F_I at the witness point; exact mode
// works in Z[zeta] with zeta of order lcm of the coordinate denominators,
// float mode checks max |dF/dx_i| < 1e-9 at unit-modulus coordinates.
bool verify_singular_point(const IndexVector& iv, const SingularWitness& w, VerifyMode mode);

// Exhaustive diagonal-symmetry search for tiny instances: all exponent
// tuples in (Z/M)^N with first coordinate 0 that give every monomial the
// same character residue.  Correct whenever M is a multiple of the true
// group exponent; a wrong M yields a subgroup, not an error.
FiniteAbelianGroup brute_force_symmetry_group(const Support& s, long modulus,
                                              const Budget& budget = {});

// Literal coset enumeration of the quotient presentation:
// element order -> count.
std::map<Int, long> coset_enumerate(const QuotientPresentation& p, const Budget& budget = {});

}  // namespace hypersym
