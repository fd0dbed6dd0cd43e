#include "hypersym/polyforms.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>

#include <json.hpp>

namespace hypersym {

void Support::normalize() {
    std::sort(monomials.begin(), monomials.end());
    monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
}

std::string Support::to_json() const {
    nlohmann::json j;
    j["d"] = d;
    j["n_vars"] = n_vars;
    j["monomials"] = monomials;
    return j.dump();
}

Support Support::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Support s;
    if (j.is_array()) {
        // Bare array of exponent arrays; degree and variable count inferred.
        s.monomials = j.get<std::vector<ExponentVector>>();
        if (!s.monomials.empty()) {
            s.n_vars = static_cast<int>(s.monomials.front().size());
            s.d = std::accumulate(s.monomials.front().begin(), s.monomials.front().end(), 0);
        }
    } else {
        s.d = j.at("d").get<int>();
        s.n_vars = j.at("n_vars").get<int>();
        s.monomials = j.at("monomials").get<std::vector<ExponentVector>>();
    }
    for (const auto& m : s.monomials) {
        if (static_cast<int>(m.size()) != s.n_vars)
            throw std::invalid_argument("support: monomial length != n_vars");
        if (std::accumulate(m.begin(), m.end(), 0) != s.d)
            throw std::invalid_argument("support: monomial degree != d");
    }
    s.normalize();
    return s;
}

void SimpleType::normalize() {
    // T_1 is x^d, same as K_1.
    for (auto it = t_parts.begin(); it != t_parts.end();) {
        if (*it == 1) {
            k_parts.push_back(1);
            it = t_parts.erase(it);
        } else {
            ++it;
        }
    }
    std::sort(k_parts.begin(), k_parts.end());
    std::sort(t_parts.begin(), t_parts.end());
}

int SimpleType::total() const {
    int s = 0;
    for (int a : k_parts) s += a;
    for (int b : t_parts) s += b;
    return s;
}

std::string SimpleType::str() const {
    std::string out;
    auto emit = [&](char c, int v) {
        if (!out.empty()) out += '+';
        out += c;
        out += std::to_string(v);
    };
    for (int a : k_parts) emit('K', a);
    for (int b : t_parts) emit('T', b);
    return out;
}

SimpleType SimpleType::parse(const std::string& text) {
    SimpleType t;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    bool first = true;
    for (;;) {
        skip_ws();
        if (i == text.size()) {
            if (first) throw std::invalid_argument("simple type: empty");
            break;
        }
        if (!first) {
            if (text[i] != '+') throw std::invalid_argument("simple type: expected '+'");
            ++i;
            skip_ws();
        }
        if (i == text.size()) throw std::invalid_argument("simple type: trailing '+'");
        char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i++])));
        if (c != 'K' && c != 'T') throw std::invalid_argument("simple type: expected K or T");
        skip_ws();
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) throw std::invalid_argument("simple type: missing part size");
        int v = std::stoi(text.substr(start, i - start));
        if (v < 1) throw std::invalid_argument("simple type: part size must be >= 1");
        if (c == 'T' && v < 1) throw std::invalid_argument("simple type: bad T part");
        (c == 'K' ? t.k_parts : t.t_parts).push_back(v);
        first = false;
    }
    t.normalize();
    return t;
}

Support build_f_i(const IndexVector& iv) {
    assert(iv.d >= 3);
    Support s;
    s.d = iv.d;
    s.n_vars = iv.k();
    for (int a = 1; a <= iv.k(); ++a) {
        int ia = iv.targets[a - 1];
        assert(ia >= 1 && ia <= iv.k());
        ExponentVector m(s.n_vars, 0);
        m[a - 1] += iv.d - 1;
        m[ia - 1] += 1;
        s.monomials.push_back(std::move(m));
    }
    s.normalize();
    return s;
}

namespace {

// First pair a < b with i_a = i_b outside {a, b}, 1-based, or nullopt.
std::optional<std::pair<int, int>> violating_pair(const IndexVector& iv) {
    const int k = iv.k();
    for (int a = 1; a <= k; ++a)
        for (int b = a + 1; b <= k; ++b) {
            int ia = iv.targets[a - 1], ib = iv.targets[b - 1];
            if (ia == ib && ia != a && ia != b) return std::pair{a, b};
        }
    return std::nullopt;
}

}  // namespace

bool is_smooth_f_i(const IndexVector& iv) { return !violating_pair(iv).has_value(); }

std::optional<SimpleType> graph_decompose(const IndexVector& iv) {
    if (!is_smooth_f_i(iv)) return std::nullopt;
    const int k = iv.k();
    // Functional graph a -> i_a.  Under the smoothness condition every
    // component is a pure cycle (K_a) or a simple path into a self-loop (T_b).
    std::vector<int> indeg(k + 1, 0);
    for (int a = 1; a <= k; ++a) ++indeg[iv.targets[a - 1]];
    std::vector<bool> seen(k + 1, false);
    SimpleType t;
    // Chains: start from every source (in-degree 0 vertex).
    for (int a = 1; a <= k; ++a) {
        if (indeg[a] != 0) continue;
        int len = 0, v = a;
        while (!seen[v]) {
            seen[v] = true;
            ++len;
            if (iv.targets[v - 1] == v) break;  // self-loop terminator
            v = iv.targets[v - 1];
        }
        t.t_parts.push_back(len);
    }
    // Remaining unseen vertices lie on cycles (including bare self-loops).
    for (int a = 1; a <= k; ++a) {
        if (seen[a]) continue;
        int len = 0, v = a;
        while (!seen[v]) {
            seen[v] = true;
            ++len;
            v = iv.targets[v - 1];
        }
        t.k_parts.push_back(len);
    }
    t.normalize();
    return t;
}

std::optional<SingularWitness> singular_witness(const IndexVector& iv) {
    auto pair = violating_pair(iv);
    if (!pair) return std::nullopt;
    auto [a, b] = *pair;
    SingularWitness w;
    w.point.resize(iv.k());
    w.point[a - 1] = {false, 0, 1};                        // 1
    w.point[b - 1] = {false, 1, 2L * (iv.d - 1)};          // exp(pi*i/(d-1))
    return w;
}

Support simple_support(int d, const SimpleType& type) {
    assert(d >= 3);
    SimpleType t = type;
    t.normalize();
    Support s;
    s.d = d;
    s.n_vars = t.total();
    int base = 0;  // 0-based offset of the current block
    auto add_monomial = [&](int pow_var, int lin_var) {
        ExponentVector m(s.n_vars, 0);
        m[pow_var] += d - 1;
        m[lin_var] += 1;
        s.monomials.push_back(std::move(m));
    };
    for (int a : t.k_parts) {
        for (int j = 0; j < a; ++j) add_monomial(base + j, base + (j + 1) % a);
        base += a;
    }
    for (int b : t.t_parts) {
        for (int j = 0; j + 1 < b; ++j) add_monomial(base + j, base + j + 1);
        add_monomial(base + b - 1, base + b - 1);  // x_last^d
        base += b;
    }
    s.normalize();
    return s;
}

std::optional<Counterexample> necessary_smoothness_check(const Support& s, int max_b,
                                                         const Budget& budget) {
    const int n = s.n_vars;
    // Count (A, B) pairs up front against the budget.
    // B ranges over subsets of size <= max_b; A over disjoint subsets
    // with |A| > |B|.
    std::uint64_t pairs = 0;
    std::vector<std::vector<int>> b_sets;
    std::vector<int> cur;
    auto gen_b = [&](auto&& self, int start, int remaining) -> void {
        b_sets.push_back(cur);
        if (remaining == 0) return;
        for (int v = start; v <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1, remaining - 1);
            cur.pop_back();
        }
    };
    gen_b(gen_b, 1, std::min(max_b, n));

    for (const auto& b_set : b_sets) {
        const int free_vars = n - static_cast<int>(b_set.size());
        // Number of A-subsets of the complement with |A| > |B|.
        std::uint64_t count = 0;
        std::uint64_t binom = 1;
        for (int sz = 0; sz <= free_vars; ++sz) {
            if (sz > static_cast<int>(b_set.size())) count += binom;
            binom = binom * static_cast<std::uint64_t>(free_vars - sz) / (sz + 1);
        }
        pairs += count;
        if (pairs > budget.pair_budget)
            throw ComplexityRefusal("necessary_smoothness_check: pair count exceeds budget");
    }

    for (const auto& b_set : b_sets) {
        std::vector<bool> in_b(n + 1, false);
        for (int v : b_set) in_b[v] = true;
        std::vector<int> comp;
        for (int v = 1; v <= n; ++v)
            if (!in_b[v]) comp.push_back(v);

        std::vector<int> a_set;
        auto gen_a = [&](auto&& self, std::size_t start) -> bool {
            if (a_set.size() > b_set.size()) {
                bool ok = false;
                for (const auto& m : s.monomials) {
                    bool touches_b = false;
                    for (int v : b_set)
                        if (m[v - 1] != 0) { touches_b = true; break; }
                    if (touches_b) continue;
                    int deg_a = 0;
                    for (int v : a_set) deg_a += m[v - 1];
                    if (deg_a >= s.d - 1) { ok = true; break; }
                }
                if (!ok) return false;
            }
            for (std::size_t i = start; i < comp.size(); ++i) {
                a_set.push_back(comp[i]);
                if (!self(self, i + 1)) return false;
                a_set.pop_back();
            }
            return true;
        };
        if (!gen_a(gen_a, 0)) {
            return Counterexample{a_set, b_set};
        }
    }
    return std::nullopt;
}

}  // namespace hypersym
