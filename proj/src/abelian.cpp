#include "hypersym/abelian.hpp"

#include <cassert>

namespace hypersym {

namespace {

BigIntMatrix relation_matrix(const QuotientPresentation& p) {
    const std::size_t k = p.cyclic_orders.size();
    assert(p.killed_element.size() == k);
    BigIntMatrix r(k + 1, k);
    for (std::size_t i = 0; i < k; ++i) r.at(i, i) = p.cyclic_orders[i];
    for (std::size_t j = 0; j < k; ++j) r.at(k, j) = p.killed_element[j];
    return r;
}

FiniteAbelianGroup group_from_diag(const std::vector<Int>& d) {
    FiniteAbelianGroup g;
    for (const Int& x : d)
        if (x >= 2) g.invariant_factors.push_back(x);
    return g;
}

}  // namespace

FiniteAbelianGroup quotient_group(const QuotientPresentation& p) {
    if (p.cyclic_orders.empty()) return {};
    return group_from_diag(smith_normal_form(relation_matrix(p)).d);
}

QuotientStructure quotient_structure(const QuotientPresentation& p) {
    QuotientStructure qs;
    if (p.cyclic_orders.empty()) {
        qs.v_inv = BigIntMatrix::identity(0);
        return qs;
    }
    SNFResult s = smith_normal_form(relation_matrix(p));
    // m_i >= 1 makes the relation lattice full rank.
    assert(s.rank == p.cyclic_orders.size());
    qs.group = group_from_diag(s.d);
    qs.snf_diag = s.d;
    qs.v_inv = s.v_inv;
    return qs;
}

std::vector<Int> QuotientStructure::element_of_order(const Int& n) const {
    const std::size_t k = snf_diag.size();
    std::vector<Int> x(k, 0);
    if (n == 1 || k == 0) return x;
    const Int& e = snf_diag.back();  // group exponent
    assert(e % n == 0);
    // z-coordinates (0, ..., 0, e/n) have order exactly n; pull back via
    // x = w * v_inv (row vector convention).
    Int w = e / n;
    for (std::size_t j = 0; j < k; ++j) x[j] = w * v_inv.at(k - 1, j);
    return x;
}

Int killed_element_order(const QuotientPresentation& p) {
    Int o = 1;
    for (std::size_t i = 0; i < p.cyclic_orders.size(); ++i)
        o = lcm(o, p.cyclic_orders[i] / gcd(p.cyclic_orders[i], p.killed_element[i]));
    return o;
}

Int max_element_order(const FiniteAbelianGroup& g) {
    return g.invariant_factors.empty() ? Int(1) : g.invariant_factors.back();
}

std::vector<Int> element_order_set(const QuotientPresentation& p, const Int& d) {
    const std::size_t k = p.cyclic_orders.size();
    if (k < 2) throw HypothesisViolation("element_order_set: needs k >= 2 cyclic factors");
    for (std::size_t i = 0; i < k; ++i) {
        Int ord = p.cyclic_orders[i] / gcd(p.cyclic_orders[i], p.killed_element[i]);
        if (ord != d)
            throw HypothesisViolation("element_order_set: killed entry " + std::to_string(i) +
                                      " has order " + ord.get_str() + ", expected " + d.get_str());
    }
    return {lcm_all(p.cyclic_orders)};
}

}  // namespace hypersym
