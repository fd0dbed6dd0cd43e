#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hypersym {

using Int = mpz_class;

// base^e for nonnegative e.
inline Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Reduce a into the canonical residue range [0, n).  Requires n >= 1.
inline Int mod_reduce(const Int& a, const Int& n) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline Int ilcm(const Int& a, const Int& b) { return lcm(a, b); }
inline Int igcd(const Int& a, const Int& b) { return gcd(a, b); }

inline Int lcm_all(const std::vector<Int>& xs) {
    Int r = 1;
    for (const Int& x : xs) r = lcm(r, x);
    return r;
}

inline std::string to_string(const Int& x) { return x.get_str(); }

}  // namespace hypersym
