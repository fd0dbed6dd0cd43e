#include "hypersym/classify.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "hypersym/factor.hpp"

namespace hypersym {

namespace {

Int klein_modulus(int d, int a) {
    return abs(Int(1) - ipow(Int(1 - d), static_cast<unsigned long>(a)));
}

Int chain_modulus_projective(int d, int b) {
    return ipow(Int(d - 1), static_cast<unsigned long>(b - 1));
}

// Strictly increasing tuples with given minimum start and remaining sum.
void increasing_tuples(int start, int remaining, std::vector<int>& cur,
                       const std::function<void(const std::vector<int>&)>& emit) {
    emit(cur);
    for (int a = start; a <= remaining; ++a) {
        cur.push_back(a);
        increasing_tuples(a + 1, remaining - a, cur, emit);
        cur.pop_back();
    }
}

Int case_iv_lcm(int d, const std::vector<int>& as) {
    Int l = 1;
    for (int a : as) l = lcm(l, klein_modulus(d, a));
    return l;
}

}  // namespace

std::vector<OrderCase> order_cases(int d, int n_vars) {
    assert(d >= 3 && n_vars >= 3);
    std::vector<OrderCase> cases;
    cases.push_back({"i", {n_vars}, klein_modulus(d, n_vars) / d});
    cases.push_back({"ii", {n_vars}, chain_modulus_projective(d, n_vars)});
    for (int a = 1; a <= n_vars - 1; ++a) cases.push_back({"iii", {a}, klein_modulus(d, a)});

    std::vector<int> cur;
    increasing_tuples(1, n_vars, cur, [&](const std::vector<int>& as) {
        if (as.size() >= 2) cases.push_back({"iv", as, case_iv_lcm(d, as)});
    });
    increasing_tuples(1, n_vars, cur, [&](const std::vector<int>& as) {
        if (as.empty()) return;
        int sum = 0;
        for (int a : as) sum += a;
        for (int b = 2; sum + b <= n_vars; ++b) {
            std::vector<int> params = as;
            params.push_back(b);
            cases.push_back({"v", params, lcm(case_iv_lcm(d, as), chain_modulus_projective(d, b))});
        }
    });
    return cases;
}

std::vector<Int> order_set(int d, int n_vars) {
    std::vector<Int> values;
    for (const OrderCase& c : order_cases(d, n_vars)) values.push_back(c.bound_value);
    return divisor_maximal(std::move(values));
}

OrderReport order_report(int d, int n_vars) {
    OrderReport r;
    r.d = d;
    r.n_vars = n_vars;
    r.cases = order_cases(d, n_vars);
    std::vector<Int> values;
    for (const OrderCase& c : r.cases) values.push_back(c.bound_value);
    r.maximal_orders = divisor_maximal(std::move(values));
    return r;
}

std::vector<SimpleType> enumerate_simple_types(int n, bool exact, bool at_most_one_t) {
    assert(n >= 1);
    std::vector<SimpleType> out;
    // K parts non-increasing, then T parts non-increasing, so each multiset
    // appears once; results are re-sorted into canonical order below.
    std::vector<int> ks, ts;
    auto emit = [&] {
        if (ks.empty() && ts.empty()) return;
        SimpleType t;
        t.k_parts = ks;
        t.t_parts = ts;
        t.normalize();
        out.push_back(std::move(t));
    };
    std::function<void(int, int)> gen_t = [&](int remaining, int max_part) {
        emit();
        for (int b = std::min(remaining, max_part); b >= 2; --b) {
            if (at_most_one_t && !ts.empty()) break;
            ts.push_back(b);
            gen_t(remaining - b, b);
            ts.pop_back();
        }
    };
    std::function<void(int, int)> gen_k = [&](int remaining, int max_part) {
        gen_t(remaining, remaining);
        for (int a = std::min(remaining, max_part); a >= 1; --a) {
            ks.push_back(a);
            gen_k(remaining - a, a);
            ks.pop_back();
        }
    };
    gen_k(n, n);

    if (exact) {
        std::erase_if(out, [&](const SimpleType& t) { return t.total() != n; });
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

DiagonalAutomorphism automorphism_of_order(int d, const SimpleType& type, const Int& n) {
    SimpleType t = type;
    t.normalize();
    QuotientPresentation p = predicted_group(d, t);
    QuotientStructure qs = quotient_structure(p);
    std::vector<Int> powers = qs.element_of_order(n);

    // Per-part generators in presentation order (K ascending, T ascending),
    // the same block layout as simple_support.
    std::vector<DiagonalAutomorphism> gens;
    for (int a : t.k_parts) gens.push_back(klein_generator(d, a));
    for (int b : t.t_parts) gens.push_back(chain_generator(d, b));

    Int n_total = 1;
    for (const auto& g : gens) n_total = lcm(n_total, g.n);

    DiagonalAutomorphism out;
    out.n = n_total;
    out.exps.reserve(t.total());
    for (std::size_t p_idx = 0; p_idx < gens.size(); ++p_idx) {
        const Int scale = powers[p_idx] * (n_total / gens[p_idx].n);
        for (const Int& e : gens[p_idx].exps) out.exps.push_back(mod_reduce(e * scale, n_total));
    }
    return out.normalized();
}

namespace {

// Largest achievable element order for the presentation: Lemma-style lcm
// shortcut when every killed entry has order exactly d, else via the
// invariant factors of the quotient.
Int presentation_exponent(int d, const QuotientPresentation& p) {
    try {
        return element_order_set(p, Int(d)).back();
    } catch (const HypothesisViolation&) {
        return max_element_order(quotient_group(p));
    }
}

std::vector<SimpleType> witness_candidates(int n_vars) {
    std::vector<SimpleType> types = enumerate_simple_types(n_vars, /*exact=*/false,
                                                           /*at_most_one_t=*/true);
    // Fewest parts first, then lexicographic on part sizes.
    std::stable_sort(types.begin(), types.end(), [](const SimpleType& x, const SimpleType& y) {
        std::size_t px = x.k_parts.size() + x.t_parts.size();
        std::size_t py = y.k_parts.size() + y.t_parts.size();
        if (px != py) return px < py;
        return x < y;
    });
    return types;
}

}  // namespace

std::optional<std::pair<SimpleType, DiagonalAutomorphism>> witness_for_order(int d, int n_vars,
                                                                             const Int& n) {
    assert(d >= 3 && n_vars >= 3 && n >= 1);
    for (const SimpleType& t : witness_candidates(n_vars)) {
        QuotientPresentation p = predicted_group(d, t);
        if (presentation_exponent(d, p) % n != 0) continue;
        DiagonalAutomorphism g = automorphism_of_order(d, t, n);
        // Verify before returning.
        if (pgl_order(g) != n) continue;
        if (!acts_with_character(g, simple_support(d, t))) continue;
        return std::pair{t, g};
    }
    return std::nullopt;
}

bool liftable_sufficient(const std::vector<Int>& cyclic_orders, int d, int n_vars) {
    Int g0 = gcd(Int(d), Int(n_vars));
    if (cyclic_orders.size() <= 1) return true;
    for (std::size_t skip = 0; skip < cyclic_orders.size(); ++skip) {
        bool ok = true;
        for (std::size_t j = 0; j < cyclic_orders.size() && ok; ++j)
            if (j != skip && gcd(cyclic_orders[j], g0) != 1) ok = false;
        if (ok) return true;
    }
    return false;
}

Cubic4Report cubic4_report() {
    constexpr int d = 3, nv = 6;
    Cubic4Report report;
    report.maximal_orders = order_set(d, nv);

    const std::vector<SimpleType> all_types = enumerate_simple_types(nv, /*exact=*/true);
    for (const Int& n : report.maximal_orders) {
        Cubic4Row row;
        row.order = n;
        for (const SimpleType& t : all_types) {
            QuotientPresentation p = predicted_group(d, t);
            FiniteAbelianGroup g = quotient_group(p);
            if (max_element_order(g) % n == 0) {
                row.admitting_types.push_back(t);
                if (row.admitting_types.size() == 1) row.group = g;
            }
        }
        assert(!row.admitting_types.empty());
        row.unique_type = row.admitting_types.front();
        row.witness = automorphism_of_order(d, row.unique_type, n);
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace hypersym
