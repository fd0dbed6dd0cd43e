#include "hypersym/diagact.hpp"

#include <cassert>
#include <cctype>

namespace hypersym {

DiagonalAutomorphism DiagonalAutomorphism::normalized() const {
    DiagonalAutomorphism r;
    r.n = n;
    r.exps.reserve(exps.size());
    Int g = n;
    for (const Int& e : exps) {
        Int v = mod_reduce(e - exps[0], n);
        g = gcd(g, v);
        r.exps.push_back(std::move(v));
    }
    if (g > 1) {
        r.n = n / g;
        for (Int& e : r.exps) e /= g;
    }
    return r;
}

std::string DiagonalAutomorphism::str() const {
    std::string out = "1/" + n.get_str() + "(";
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (i) out += ",";
        out += exps[i].get_str();
    }
    out += ")";
    return out;
}

DiagonalAutomorphism DiagonalAutomorphism::parse(const std::string& text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (i >= text.size() || text[i] != c)
            throw std::invalid_argument(std::string("automorphism: expected '") + c + "'");
        ++i;
    };
    auto read_int = [&]() -> Int {
        skip_ws();
        std::size_t start = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw std::invalid_argument("automorphism: expected integer");
        return Int(text.substr(start, i - start));
    };

    expect('1');
    expect('/');
    DiagonalAutomorphism g;
    g.n = read_int();
    if (g.n < 1) throw std::invalid_argument("automorphism: denominator must be >= 1");
    expect('(');
    for (;;) {
        g.exps.push_back(mod_reduce(read_int(), g.n));
        skip_ws();
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        break;
    }
    expect(')');
    skip_ws();
    if (i != text.size()) throw std::invalid_argument("automorphism: trailing characters");
    return g;
}

Int pgl_order(const DiagonalAutomorphism& g) {
    Int d = g.n;
    for (const Int& e : g.exps) d = gcd(d, e - g.exps[0]);
    return g.n / d;
}

std::optional<Int> acts_with_character(const DiagonalAutomorphism& g, const Support& s) {
    assert(static_cast<int>(g.exps.size()) == s.n_vars);
    std::optional<Int> c;
    for (const auto& m : s.monomials) {
        Int r = 0;
        for (int j = 0; j < s.n_vars; ++j) r += Int(m[j]) * g.exps[j];
        r = mod_reduce(r, g.n);
        if (!c)
            c = r;
        else if (*c != r)
            return std::nullopt;
    }
    return c;
}

std::variant<SymmetryGroupResult, InfiniteGroup> symmetry_group(const Support& s) {
    assert(s.n_vars >= 2);
    assert(!s.monomials.empty());
    const std::size_t nv = static_cast<std::size_t>(s.n_vars);
    const std::size_t rows = s.monomials.size() - 1;

    // Difference vectors relative to the first monomial; each has
    // coordinate sum 0, so the scalar direction (t, ..., t) is already in
    // the kernel and we may restrict to y_j = e_j - e_N by dropping the
    // last column.
    BigIntMatrix b(rows == 0 ? 1 : rows, nv - 1);  // keep >= 1 row for SNF
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j + 1 < nv; ++j)
            b.at(i, j) = Int(s.monomials[i + 1][j]) - Int(s.monomials[0][j]);

    SNFResult snf = smith_normal_form(b);
    if (snf.rank < nv - 1) {
        // Free column of v beyond the rank is an unconstrained direction.
        InfiniteGroup inf;
        inf.free_direction.resize(nv);
        for (std::size_t j = 0; j + 1 < nv; ++j) inf.free_direction[j] = snf.v.at(j, snf.rank);
        inf.free_direction[nv - 1] = 0;
        return inf;
    }

    SymmetryGroupResult res;
    for (std::size_t i = 0; i < nv - 1; ++i) {
        const Int& di = snf.d[i];
        if (di < 2) continue;
        res.group.invariant_factors.push_back(di);
        // Kernel summand Z/d_i generated by y = (column i of v) / d_i;
        // lift to e by fixing e_N = 0.
        DiagonalAutomorphism g;
        g.n = di;
        g.exps.resize(nv);
        for (std::size_t j = 0; j + 1 < nv; ++j) g.exps[j] = mod_reduce(snf.v.at(j, i), di);
        g.exps[nv - 1] = 0;
        auto c = acts_with_character(g, s);
        assert(c.has_value());
        res.scalar_characters.push_back(*c);
        res.generators.push_back(std::move(g));
    }
    return res;
}

namespace {

DiagonalAutomorphism power_tuple_generator(int d, int len, Int n) {
    DiagonalAutomorphism g;
    g.n = std::move(n);
    g.exps.reserve(len);
    Int e = 1;
    for (int j = 0; j < len; ++j) {
        g.exps.push_back(mod_reduce(e, g.n));
        e *= Int(1 - d);
    }
    return g;
}

}  // namespace

DiagonalAutomorphism klein_generator(int d, int a) {
    assert(d >= 3 && a >= 1);
    Int n = abs(Int(1) - ipow(Int(1 - d), static_cast<unsigned long>(a)));
    return power_tuple_generator(d, a, n);
}

DiagonalAutomorphism chain_generator(int d, int b) {
    assert(d >= 3 && b >= 1);
    Int n = Int(d) * ipow(Int(d - 1), static_cast<unsigned long>(b - 1));
    return power_tuple_generator(d, b, n);
}

QuotientPresentation predicted_group(int d, const SimpleType& type) {
    assert(d >= 3);
    SimpleType t = type;
    t.normalize();
    QuotientPresentation p;
    for (int a : t.k_parts) {
        Int m = abs(Int(1) - ipow(Int(1 - d), static_cast<unsigned long>(a)));
        p.cyclic_orders.push_back(m);
        p.killed_element.push_back(m / d);
    }
    for (int b : t.t_parts) {
        Int beta = ipow(Int(d - 1), static_cast<unsigned long>(b - 1));
        p.cyclic_orders.push_back(Int(d) * beta);
        p.killed_element.push_back(beta);
    }
    return p;
}

}  // namespace hypersym
