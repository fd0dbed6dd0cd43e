#include <doctest.h>

#include <algorithm>

#include "hypersym/classify.hpp"
#include "hypersym/factor.hpp"
#include "hypersym/oracle.hpp"

using namespace hypersym;

namespace {

std::vector<Int> case_values(int d, int nv, const std::string& tag) {
    std::vector<Int> out;
    for (const OrderCase& c : order_cases(d, nv))
        if (c.tag == tag) out.push_back(c.bound_value);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("order_cases (3,6)") {
    CHECK(case_values(3, 6, "iii") == std::vector<Int>{3, 3, 9, 15, 33});
    CHECK(case_values(3, 6, "i") == std::vector<Int>{21});
    CHECK(case_values(3, 6, "ii") == std::vector<Int>{32});
}

TEST_CASE("order_cases (3,3) case iv has exactly one tuple") {
    auto vals = case_values(3, 3, "iv");
    CHECK(vals == std::vector<Int>{3});  // only (a_1, a_2) = (1, 2)
}

TEST_CASE("order_set") {
    CHECK(order_set(3, 6) == std::vector<Int>{21, 30, 32, 33, 36, 48});
    CHECK(order_set(3, 5) == std::vector<Int>{11, 15, 16, 18, 24});
    CHECK(order_set(3, 3) == std::vector<Int>{4, 6});
}

TEST_CASE("order_set is deterministic") {
    CHECK(order_set(3, 6) == order_set(3, 6));
    CHECK(order_set(4, 7) == order_set(4, 7));
}

TEST_CASE("enumerate_simple_types") {
    auto n2 = enumerate_simple_types(2, /*exact=*/true);
    CHECK(n2 == std::vector<SimpleType>{SimpleType{{}, {2}}, SimpleType{{1, 1}, {}},
                                        SimpleType{{2}, {}}});
    CHECK(enumerate_simple_types(1, true) == std::vector<SimpleType>{SimpleType{{1}, {}}});
    // N=6 exact with at most one chain part: p_K(6) + sum over b of p_K(6-b).
    CHECK(enumerate_simple_types(6, true, /*at_most_one_t=*/true).size() == 23);
    // The unrestricted exact list contains the restricted one.
    auto all6 = enumerate_simple_types(6, true);
    for (const SimpleType& t : enumerate_simple_types(6, true, true))
        CHECK(std::find(all6.begin(), all6.end(), t) != all6.end());
    for (const SimpleType& t : all6) CHECK(t.total() == 6);
}

TEST_CASE("witness_for_order") {
    auto w48 = witness_for_order(3, 6, 48);
    REQUIRE(w48.has_value());
    CHECK(w48->first == SimpleType{{1}, {5}});  // T_5 + K_1
    CHECK(pgl_order(w48->second) == 48);
    CHECK(acts_with_character(w48->second, simple_support(3, w48->first)).has_value());

    auto w33 = witness_for_order(3, 6, 33);
    REQUIRE(w33.has_value());
    CHECK(w33->first == SimpleType{{1, 5}, {}});  // K_1 + K_5
    CHECK(pgl_order(w33->second) == 33);

    CHECK(witness_for_order(3, 6, 49) == std::nullopt);
    CHECK(witness_for_order(3, 6, 50) == std::nullopt);

    auto w1 = witness_for_order(3, 6, 1);
    REQUIRE(w1.has_value());
    CHECK(pgl_order(w1->second) == 1);
}

TEST_CASE("order_set soundness: every divisor is witnessed") {
    for (auto [d, nv] : std::vector<std::pair<int, int>>{{3, 4}, {3, 5}, {3, 6}, {4, 4}}) {
        for (const Int& m : order_set(d, nv)) {
            for (const Int& n : divisors(m)) {
                auto w = witness_for_order(d, nv, n);
                REQUIRE_MESSAGE(w.has_value(), "d=", d, " N=", nv, " n=", n.get_str());
                CHECK(pgl_order(w->second) == n);
                auto c = acts_with_character(w->second, simple_support(d, w->first));
                CHECK(c.has_value());
            }
        }
    }
}

TEST_CASE("completeness at desk scale (3,4)") {
    // Every element order arising from a simple type with total <= 4 lies
    // in the divisor closure of order_set(3,4).
    auto maximal = order_set(3, 4);
    for (const SimpleType& t : enumerate_simple_types(4, /*exact=*/false)) {
        if (t.total() < 2) continue;
        auto res = symmetry_group(simple_support(3, t));
        auto& g = std::get<SymmetryGroupResult>(res);
        CHECK(divides_some(max_element_order(g.group), maximal));
    }
}

TEST_CASE("liftable_sufficient") {
    CHECK(liftable_sufficient({Int(4)}, 3, 6));
    CHECK_FALSE(liftable_sufficient({Int(3), Int(3)}, 3, 6));
    CHECK(liftable_sufficient({Int(6), Int(5), Int(7)}, 4, 6));
}

TEST_CASE("automorphism_of_order builds per-part generator powers") {
    // Order 36 on T_3 + K_3.
    SimpleType t{{3}, {3}};
    DiagonalAutomorphism g = automorphism_of_order(3, t, 36);
    CHECK(pgl_order(g) == 36);
    CHECK(acts_with_character(g, simple_support(3, t)).has_value());
}

TEST_CASE("cubic4_report") {
    Cubic4Report rep = cubic4_report();
    CHECK(rep.maximal_orders == std::vector<Int>{21, 30, 32, 33, 36, 48});
    REQUIRE(rep.rows.size() == 6);
    const std::vector<SimpleType> expected = {
        SimpleType{{6}, {}},     SimpleType{{4}, {2}}, SimpleType{{}, {6}},
        SimpleType{{1, 5}, {}},  SimpleType{{3}, {3}}, SimpleType{{1}, {5}},
    };
    const std::vector<long> cyclic = {21, 30, 32, 33, 36, 48};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(rep.rows[i].order == cyclic[i]);
        CHECK(rep.rows[i].admitting_types.size() == 1);
        CHECK(rep.rows[i].unique_type == expected[i]);
        CHECK(rep.rows[i].group == FiniteAbelianGroup{{Int(cyclic[i])}});
        CHECK(pgl_order(rep.rows[i].witness) == cyclic[i]);
    }
}

TEST_CASE("order 12 is admitted by more than one 6-variable type") {
    // Uniqueness is claimed only for the six maximal values.
    int count = 0;
    for (const SimpleType& t : enumerate_simple_types(6, true)) {
        auto g = quotient_group(predicted_group(3, t));
        if (max_element_order(g) % 12 == 0) ++count;
    }
    CHECK(count > 1);
}
