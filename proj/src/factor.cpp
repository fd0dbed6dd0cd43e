#include "hypersym/factor.hpp"

#include <algorithm>
#include <cassert>

namespace hypersym {

namespace {

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

// Pollard rho, Brent variant, f(x) = x^2 + c mod n.
Int pollard_rho(const Int& n, unsigned long seed) {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(seed);
    Int x = rng.get_z_range(n - 2) + 2;
    Int c = rng.get_z_range(n - 1) + 1;
    Int y = x, d = 1, saved = y;
    unsigned long power = 1, lam = 0;
    while (d == 1) {
        if (lam == power) {
            x = y;
            power *= 2;
            lam = 0;
        }
        y = mod_reduce(y * y + c, n);
        ++lam;
        d = gcd(abs(x - y), n);
        if (lam % 128 == 0) saved = y;
        if (lam > (1ul << 24)) return n;  // give up this attempt
    }
    (void)saved;
    return d;
}

void factor_into(const Int& n, const Budget& budget, std::map<Int, int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    for (int attempt = 0; attempt < budget.pollard_rho_retries; ++attempt) {
        Int d = pollard_rho(n, 0x5eedul + static_cast<unsigned long>(attempt));
        if (d != n && d != 1) {
            factor_into(d, budget, out);
            factor_into(n / d, budget, out);
            return;
        }
    }
    throw FactorizationLimit("factorize: Pollard rho failed on " + n.get_str());
}

}  // namespace

std::map<Int, int> factorize(const Int& n, const Budget& budget) {
    assert(n >= 1);
    std::map<Int, int> out;
    Int m = n;
    for (const unsigned long p : {2ul, 3ul, 5ul}) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++out[Int(p)];
            m /= p;
        }
    }
    // Wheel over 6k +- 1.
    unsigned long p = 7;
    while (p <= budget.trial_division_bound && Int(p) * p <= m) {
        for (unsigned long q : {p, p + 4}) {
            while (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
                ++out[Int(q)];
                m /= q;
            }
        }
        p += 6;
    }
    if (m > 1) {
        if (Int(budget.trial_division_bound) * budget.trial_division_bound >= m) {
            ++out[m];  // trial division exhausted all candidates below sqrt(m)
        } else {
            factor_into(m, budget, out);
        }
    }
    return out;
}

std::vector<Int> divisors(const Int& n, const Budget& budget) {
    assert(n >= 1);
    std::vector<Int> ds = {1};
    for (const auto& [p, e] : factorize(n, budget)) {
        const std::size_t base = ds.size();
        Int pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::vector<Int> divisor_maximal(std::vector<Int> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<Int> out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = i + 1; j < xs.size() && !dominated; ++j)
            if (xs[j] % xs[i] == 0) dominated = true;
        if (!dominated) out.push_back(xs[i]);
    }
    return out;
}

bool divides_some(const Int& n, const std::vector<Int>& maximal) {
    for (const Int& m : maximal)
        if (m % n == 0) return true;
    return false;
}

}  // namespace hypersym
