#include <doctest.h>

#include <random>

#include "hypersym/classify.hpp"
#include "hypersym/factor.hpp"

using namespace hypersym;

TEST_CASE("automorphism str/parse round trip (randomized)") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> pick_n(1, 500), pick_e(-1000, 1000), pick_len(1, 8);
    for (int trial = 0; trial < 200; ++trial) {
        DiagonalAutomorphism g;
        g.n = pick_n(rng);
        long len = pick_len(rng);
        for (long i = 0; i < len; ++i) g.exps.push_back(mod_reduce(Int(pick_e(rng)), g.n));
        DiagonalAutomorphism back = DiagonalAutomorphism::parse(g.str());
        CHECK(back == g);
        CHECK(pgl_order(back) == pgl_order(g));
        CHECK(back.normalized() == g.normalized());
    }
}

TEST_CASE("normalization is idempotent and preserves projective data") {
    auto g = DiagonalAutomorphism::parse("1/63(1,-2,4,-8,16,-32)");
    auto n1 = g.normalized();
    CHECK(n1.normalized() == n1);
    CHECK(pgl_order(n1) == pgl_order(g));
    // A scalar shift lands in the same class.
    DiagonalAutomorphism shifted = g;
    for (Int& e : shifted.exps) e = mod_reduce(e + 17, g.n);
    CHECK(shifted.normalized() == n1);
}

TEST_CASE("simple type str/parse round trip over all small types") {
    for (int n = 1; n <= 7; ++n) {
        for (const SimpleType& t : enumerate_simple_types(n, /*exact=*/true)) {
            CHECK(SimpleType::parse(t.str()) == t);
        }
    }
}

TEST_CASE("support json round trip over simple supports") {
    for (int d : {3, 4, 5}) {
        for (const SimpleType& t : enumerate_simple_types(5, /*exact=*/false)) {
            Support s = simple_support(d, t);
            CHECK(Support::from_json(s.to_json()) == s);
        }
    }
}

TEST_CASE("witness output re-parses and re-verifies") {
    for (const Int& m : order_set(3, 6)) {
        for (const Int& n : divisors(m)) {
            auto w = witness_for_order(3, 6, n);
            REQUIRE(w.has_value());
            // Round-trip through the text formats, then re-verify from the
            // parsed data alone.
            SimpleType t = SimpleType::parse(w->first.str());
            DiagonalAutomorphism g = DiagonalAutomorphism::parse(w->second.str());
            Support s = Support::from_json(simple_support(3, t).to_json());
            CHECK(pgl_order(g) == n);
            CHECK(acts_with_character(g, s).has_value());
        }
    }
}

TEST_CASE("table automorphism strings verify from text alone") {
    // (automorphism, index vector of the listed polynomial, its type).
    struct Row {
        std::string aut;
        std::vector<int> targets;
        std::string type;
    };
    const std::vector<Row> table = {
        {"1/63(1,-2,4,-8,16,-32)", {2, 3, 4, 5, 6, 1}, "K6"},
        {"1/30(15,0,2,-4,8,-16)", {2, 2, 4, 5, 6, 3}, "K4+T2"},
        {"1/32(1,-2,4,-8,16,0)", {2, 3, 4, 5, 6, 6}, "T6"},
        {"1/33(11,3,-6,12,9,-18)", {1, 3, 4, 5, 6, 2}, "K1+K5"},
        {"1/36(9,-18,0,4,-8,16)", {2, 3, 3, 5, 6, 4}, "K3+T3"},
        {"1/48(3,-6,12,-24,0,16)", {2, 3, 4, 5, 5, 6}, "K1+T5"},
    };
    for (const auto& row : table) {
        IndexVector iv{3, row.targets};
        CHECK(graph_decompose(iv) == SimpleType::parse(row.type));
        DiagonalAutomorphism g = DiagonalAutomorphism::parse(row.aut);
        CHECK(acts_with_character(g, build_f_i(iv)).has_value());
    }
}
