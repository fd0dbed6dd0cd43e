#include "hypersym/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <map>
#include <numeric>
#include <set>

#include "hypersym/snf.hpp"

namespace hypersym {

std::vector<Int> cyclotomic_polynomial(long n) {
    static std::map<long, std::vector<Int>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // (x^n - 1) / prod of Phi_d over proper divisors d of n.
    std::vector<Int> num(static_cast<std::size_t>(n) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(n)] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        std::vector<Int> phi = cyclotomic_polynomial(d);
        // Exact long division num / phi (phi is monic).
        std::vector<Int> q(num.size() - phi.size() + 1, 0);
        for (std::size_t i = q.size(); i-- > 0;) {
            q[i] = num[i + phi.size() - 1];
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < phi.size(); ++j) num[i + j] -= q[i] * phi[j];
        }
        num = std::move(q);
    }
    cache[n] = num;
    return num;
}

CyclotomicValue CyclotomicValue::root_power(long order, long k) {
    CyclotomicValue v(order);
    k %= order;
    if (k < 0) k += order;
    v.coeffs_[static_cast<std::size_t>(k)] = 1;
    return v;
}

void CyclotomicValue::add(const CyclotomicValue& o, const Int& scale) {
    assert(n_ == o.n_);
    for (long i = 0; i < n_; ++i)
        coeffs_[static_cast<std::size_t>(i)] += scale * o.coeffs_[static_cast<std::size_t>(i)];
}

CyclotomicValue CyclotomicValue::times_root(long k) const {
    CyclotomicValue v(n_);
    for (long i = 0; i < n_; ++i) {
        long j = (i + k) % n_;
        if (j < 0) j += n_;
        v.coeffs_[static_cast<std::size_t>(j)] = coeffs_[static_cast<std::size_t>(i)];
    }
    return v;
}

bool CyclotomicValue::is_zero() const {
    // Remainder modulo the n-th cyclotomic polynomial (monic, integer).
    std::vector<Int> r = coeffs_;
    const std::vector<Int> phi = cyclotomic_polynomial(n_);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = r.size(); i-- > deg;) {
        if (r[i] == 0) continue;
        Int q = r[i];
        for (std::size_t j = 0; j < phi.size(); ++j) r[i - deg + j] -= q * phi[j];
    }
    return std::all_of(r.begin(), r.end(), [](const Int& c) { return c == 0; });
}

namespace {

struct PartialTerm {
    Int coeff;
    std::vector<int> exps;  // per variable
};

// Formal partial dF_I/dx_j as a list of terms.
std::vector<PartialTerm> formal_partial(const IndexVector& iv, int j) {
    std::vector<PartialTerm> terms;
    const int d = iv.d;
    for (int t = 1; t <= iv.k(); ++t) {
        const int target = iv.targets[t - 1];
        PartialTerm pt;
        pt.exps.assign(static_cast<std::size_t>(iv.k()), 0);
        if (t == j && target == j) {  // x_j^d
            pt.coeff = d;
            pt.exps[static_cast<std::size_t>(j - 1)] = d - 1;
        } else if (t == j) {  // x_j^{d-1} x_target
            pt.coeff = d - 1;
            pt.exps[static_cast<std::size_t>(j - 1)] = d - 2;
            pt.exps[static_cast<std::size_t>(target - 1)] += 1;
        } else if (target == j) {  // x_t^{d-1} x_j
            pt.coeff = 1;
            pt.exps[static_cast<std::size_t>(t - 1)] = d - 1;
        } else {
            continue;
        }
        terms.push_back(std::move(pt));
    }
    return terms;
}

}  // namespace

bool verify_singular_point(const IndexVector& iv, const SingularWitness& w, VerifyMode mode) {
    assert(static_cast<int>(w.point.size()) == iv.k());

    if (mode == VerifyMode::floating) {
        constexpr double pi = 3.14159265358979323846;
        std::vector<std::complex<double>> coords(w.point.size());
        for (std::size_t i = 0; i < w.point.size(); ++i) {
            const auto& c = w.point[i];
            coords[i] = c.zero ? 0.0
                               : std::polar(1.0, 2.0 * pi * static_cast<double>(c.num) /
                                                     static_cast<double>(c.den));
        }
        for (int j = 1; j <= iv.k(); ++j) {
            std::complex<double> val = 0.0;
            for (const auto& term : formal_partial(iv, j)) {
                std::complex<double> prod = term.coeff.get_d();
                for (std::size_t v = 0; v < coords.size(); ++v)
                    for (int e = 0; e < term.exps[v]; ++e) prod *= coords[v];
                val += prod;
            }
            if (std::abs(val) >= 1e-9) return false;
        }
        return true;
    }

    // Exact mode: all coordinates live in Z[zeta_n] for n = lcm of the
    // angle denominators.
    long n = 1;
    for (const auto& c : w.point)
        if (!c.zero) n = std::lcm(n, c.den);
    for (int j = 1; j <= iv.k(); ++j) {
        CyclotomicValue val(n);
        for (const auto& term : formal_partial(iv, j)) {
            long power = 0;
            bool vanishes = false;
            for (std::size_t v = 0; v < w.point.size() && !vanishes; ++v) {
                if (term.exps[v] == 0) continue;
                if (w.point[v].zero) {
                    vanishes = true;
                } else {
                    power += static_cast<long>(term.exps[v]) * w.point[v].num * (n / w.point[v].den);
                }
            }
            if (!vanishes) val.add(CyclotomicValue::root_power(n, power % n), term.coeff);
        }
        if (!val.is_zero()) return false;
    }
    return true;
}

FiniteAbelianGroup brute_force_symmetry_group(const Support& s, long modulus,
                                              const Budget& budget) {
    const int nv = s.n_vars;
    if (modulus < 1 || nv > 4 || modulus > 200)
        throw BudgetExceeded("brute_force_symmetry_group: instance too large");
    std::uint64_t total = 1;
    for (int i = 1; i < nv; ++i) total *= static_cast<std::uint64_t>(modulus);
    if (total > budget.enumeration_budget)
        throw BudgetExceeded("brute_force_symmetry_group: enumeration budget");

    // Tuples (0, e_2, ..., e_N) with a uniform character residue.
    std::vector<std::vector<long>> found;
    std::vector<long> e(static_cast<std::size_t>(nv), 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t rest = idx;
        for (int i = 1; i < nv; ++i) {
            e[static_cast<std::size_t>(i)] = static_cast<long>(rest % static_cast<std::uint64_t>(modulus));
            rest /= static_cast<std::uint64_t>(modulus);
        }
        bool ok = true;
        long residue = 0;
        for (std::size_t m = 0; m < s.monomials.size() && ok; ++m) {
            long r = 0;
            for (int i = 0; i < nv; ++i)
                r = (r + static_cast<long>(s.monomials[m][static_cast<std::size_t>(i)]) *
                             e[static_cast<std::size_t>(i)]) %
                    modulus;
            if (m == 0)
                residue = r;
            else if (r != residue)
                ok = false;
        }
        if (ok) found.push_back(std::vector<long>(e.begin() + 1, e.end()));
    }

    // Structure of the solution set: lattice generated by the found tuples
    // plus M*Z^{N-1}, modulo M*Z^{N-1}.  With U*R*V = diag(s_i), the group
    // is the direct sum of Z/(M/s_i).
    const std::size_t cols = static_cast<std::size_t>(nv - 1);
    BigIntMatrix rel(found.size() + cols, cols);
    for (std::size_t i = 0; i < found.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) rel.at(i, j) = found[i][j];
    for (std::size_t j = 0; j < cols; ++j) rel.at(found.size() + j, j) = modulus;

    SNFResult snf = smith_normal_form(rel);
    std::vector<Int> factors;
    for (std::size_t i = 0; i < cols; ++i) {
        Int f = Int(modulus) / snf.d[i];
        if (f >= 2) factors.push_back(f);
    }
    std::sort(factors.begin(), factors.end());
    return FiniteAbelianGroup{factors};
}

std::map<Int, long> coset_enumerate(const QuotientPresentation& p, const Budget& budget) {
    const std::size_t k = p.cyclic_orders.size();
    long product = 1;
    for (const Int& m : p.cyclic_orders) {
        if (m > budget.enumeration_budget) throw BudgetExceeded("coset_enumerate: order too large");
        product *= m.get_si();
        if (static_cast<std::uint64_t>(product) > budget.enumeration_budget)
            throw BudgetExceeded("coset_enumerate: product of orders too large");
    }

    std::vector<long> m(k), c(k);
    for (std::size_t i = 0; i < k; ++i) {
        m[i] = p.cyclic_orders[i].get_si();
        c[i] = p.killed_element[i].get_si();
    }
    auto encode = [&](const std::vector<long>& x) {
        long idx = 0;
        for (std::size_t i = k; i-- > 0;) idx = idx * m[i] + x[i];
        return idx;
    };
    auto decode = [&](long idx) {
        std::vector<long> x(k);
        for (std::size_t i = 0; i < k; ++i) {
            x[i] = idx % m[i];
            idx /= m[i];
        }
        return x;
    };

    // Subgroup <c>.
    std::set<long> killed;
    {
        std::vector<long> y(k, 0);
        do {
            killed.insert(encode(y));
            for (std::size_t i = 0; i < k; ++i) y[i] = (y[i] + c[i]) % m[i];
        } while (!killed.contains(encode(y)));
    }

    // Divisors of lcm(m_i), brute force, for the order search.
    long big_l = 1;
    for (std::size_t i = 0; i < k; ++i) big_l = std::lcm(big_l, m[i]);
    std::vector<long> divs;
    for (long v = 1; v <= big_l; ++v)
        if (big_l % v == 0) divs.push_back(v);

    std::map<Int, long> orders;
    for (long idx = 0; idx < product; ++idx) {
        std::vector<long> x = decode(idx);
        // Canonical coset representative: minimal encoding over x + t*c.
        long min_idx = idx;
        std::vector<long> y = x;
        for (std::size_t t = 1; t < killed.size(); ++t) {
            for (std::size_t i = 0; i < k; ++i) y[i] = (y[i] + c[i]) % m[i];
            min_idx = std::min(min_idx, encode(y));
        }
        if (min_idx != idx) continue;

        for (long n : divs) {
            std::vector<long> z(k);
            for (std::size_t i = 0; i < k; ++i) z[i] = (n % m[i]) * x[i] % m[i];
            if (killed.contains(encode(z))) {
                ++orders[Int(n)];
                break;
            }
        }
    }
    return orders;
}

}  // namespace hypersym
