#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypersym/classify.hpp"
#include "hypersym/factor.hpp"
#include "hypersym/oracle.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr unsigned long kRhoSeed = 0x5eed;  // deterministic rho PRNG base seed

using nlohmann::json;
using namespace hypersym;

Budget budget_from_env() {
    Budget b;
    if (const char* env = std::getenv("HYPERSYM_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) {
            b.trial_division_bound = v;
            b.pair_budget = v;
            b.enumeration_budget = v;
        }
    }
    return b;
}

json envelope(const std::string& command, int d, int n_vars, json result) {
    return json{{"command", command}, {"d", d},        {"N", n_vars},
                {"version", kVersion}, {"seed", kRhoSeed}, {"result", std::move(result)}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string monomial_text(const ExponentVector& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i + 1);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string support_text(const Support& s) {
    std::string out;
    for (const auto& m : s.monomials) {
        if (!out.empty()) out += " + ";
        out += monomial_text(m);
    }
    return out;
}

std::string group_text(const FiniteAbelianGroup& g) {
    if (g.invariant_factors.empty()) return "trivial";
    std::string out;
    for (const Int& n : g.invariant_factors) {
        if (!out.empty()) out += " x ";
        out += "Z/" + n.get_str();
    }
    return out;
}

std::vector<std::string> to_strs(const std::vector<Int>& xs) {
    std::vector<std::string> out;
    for (const Int& x : xs) out.push_back(x.get_str());
    return out;
}

int run_orders(int d, int n_vars, bool expand, bool as_json, const Budget& budget) {
    OrderReport rep = order_report(d, n_vars);
    std::vector<Int> expanded;
    if (expand) {
        std::vector<Int> all;
        for (const Int& m : rep.maximal_orders) {
            auto ds = divisors(m, budget);
            all.insert(all.end(), ds.begin(), ds.end());
        }
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        expanded = std::move(all);
    }
    if (as_json) {
        json cases = json::array();
        for (const OrderCase& c : rep.cases)
            cases.push_back({{"case", c.tag}, {"params", c.params}, {"value", c.bound_value.get_str()}});
        json result{{"maximal_orders", to_strs(rep.maximal_orders)}, {"cases", cases}};
        if (expand) result["expanded"] = to_strs(expanded);
        emit(envelope("orders", d, n_vars, result));
        return 0;
    }
    for (std::size_t i = 0; i < rep.maximal_orders.size(); ++i)
        std::cout << (i ? " " : "") << rep.maximal_orders[i];
    std::cout << "\n";
    for (const OrderCase& c : rep.cases) {
        std::cout << "case (" << c.tag << ")";
        for (int pvar : c.params) std::cout << " " << pvar;
        std::cout << " -> " << c.bound_value << "\n";
    }
    if (expand) {
        std::cout << "divisors:";
        for (const Int& v : expanded) std::cout << " " << v;
        std::cout << "\n";
    }
    return 0;
}

int run_group(int d, const std::string& type_str, const std::string& support_file, bool as_json) {
    Support s;
    std::string described;
    if (!type_str.empty()) {
        SimpleType t = SimpleType::parse(type_str);
        s = simple_support(d, t);
        described = t.str();
    } else {
        std::ifstream in(support_file);
        if (!in) {
            std::cerr << "error: cannot open " << support_file << "\n";
            return 2;
        }
        std::stringstream buf;
        buf << in.rdbuf();
        s = Support::from_json(buf.str());
        if (d != 0 && d != s.d) {
            std::cerr << "error: --d disagrees with support file degree\n";
            return 2;
        }
        described = "support:" + support_file;
    }

    auto res = symmetry_group(s);
    if (const auto* inf = std::get_if<InfiniteGroup>(&res)) {
        if (as_json) {
            emit(envelope("group", s.d, s.n_vars,
                          json{{"finite", false}, {"free_direction", to_strs(inf->free_direction)}}));
        } else {
            std::cout << "InfiniteGroup: free direction (";
            for (std::size_t i = 0; i < inf->free_direction.size(); ++i)
                std::cout << (i ? "," : "") << inf->free_direction[i];
            std::cout << ")\n";
        }
        return 0;
    }
    const auto& g = std::get<SymmetryGroupResult>(res);
    if (as_json) {
        json gens = json::array();
        for (std::size_t i = 0; i < g.generators.size(); ++i)
            gens.push_back({{"automorphism", g.generators[i].str()},
                            {"pgl_order", pgl_order(g.generators[i]).get_str()},
                            {"character", g.scalar_characters[i].get_str()}});
        emit(envelope("group", s.d, s.n_vars,
                      json{{"finite", true},
                           {"input", described},
                           {"invariant_factors", to_strs(g.group.invariant_factors)},
                           {"order", g.group.order().get_str()},
                           {"generators", gens}}));
        return 0;
    }
    std::cout << group_text(g.group);
    for (std::size_t i = 0; i < g.generators.size(); ++i)
        std::cout << (i == 0 ? ", generator " : ", ") << g.generators[i].str();
    std::cout << "\n";
    for (std::size_t i = 0; i < g.generators.size(); ++i)
        std::cout << "  generator " << (i + 1) << ": pgl order " << pgl_order(g.generators[i])
                  << ", character " << g.scalar_characters[i] << "/" << g.generators[i].n << "\n";
    return 0;
}

int run_smooth(int d, const std::string& targets_str, bool want_witness, bool as_json) {
    IndexVector iv;
    iv.d = d;
    std::stringstream ss(targets_str);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int v = std::stoi(tok);
        iv.targets.push_back(v);
    }
    if (iv.targets.empty()) {
        std::cerr << "error: empty --targets\n";
        return 2;
    }
    for (int t : iv.targets)
        if (t < 1 || t > iv.k()) {
            std::cerr << "error: target out of range\n";
            return 2;
        }

    auto type = graph_decompose(iv);
    if (type) {
        if (as_json)
            emit(envelope("smooth", d, iv.k(), json{{"smooth", true}, {"type", type->str()}}));
        else
            std::cout << "SMOOTH type " << type->str() << "\n";
        return 0;
    }
    auto w = singular_witness(iv);
    if (!w || !verify_singular_point(iv, *w, VerifyMode::exact)) {
        std::cerr << "internal error: witness failed verification\n";
        return 4;
    }
    json point = json::array();
    std::string point_text = "[";
    for (std::size_t i = 0; i < w->point.size(); ++i) {
        const auto& c = w->point[i];
        if (i) point_text += " : ";
        if (c.zero) {
            point.push_back(json{{"zero", true}});
            point_text += "0";
        } else if (c.num == 0) {
            point.push_back(json{{"num", 0}, {"den", 1}});
            point_text += "1";
        } else {
            point.push_back(json{{"num", c.num}, {"den", c.den}});
            point_text += "e^(2*pi*i*" + std::to_string(c.num) + "/" + std::to_string(c.den) + ")";
        }
    }
    point_text += "]";
    if (as_json) {
        emit(envelope("smooth", d, iv.k(),
                      json{{"smooth", false},
                           {"witness_point", want_witness ? point : json()},
                           {"verified", true}}));
    } else {
        std::cout << "SINGULAR";
        if (want_witness) std::cout << " at " << point_text;
        std::cout << "\n";
    }
    return 0;
}

int run_witness(int d, int n_vars, const std::string& order_str, bool as_json) {
    Int n(order_str);
    if (n < 1) {
        std::cerr << "error: --order must be >= 1\n";
        return 2;
    }
    auto w = witness_for_order(d, n_vars, n);
    if (!w) {
        if (as_json)
            emit(envelope("witness", d, n_vars, json{{"order", n.get_str()}, {"found", false}}));
        else
            std::cout << "NONE\n";
        return 0;
    }
    const auto& [type, g] = *w;
    Support s = simple_support(d, type);
    auto c = acts_with_character(g, s);
    Int order = pgl_order(g);
    if (!c || order != n) {
        std::cerr << "internal error: witness failed verification\n";
        return 4;
    }
    if (as_json) {
        emit(envelope("witness", d, n_vars,
                      json{{"order", n.get_str()},
                           {"found", true},
                           {"type", type.str()},
                           {"polynomial", support_text(s)},
                           {"automorphism", g.str()},
                           {"character", c->get_str()},
                           {"pgl_order", order.get_str()}}));
    } else {
        std::cout << "type " << type.str() << "\n";
        std::cout << "polynomial " << support_text(s) << "\n";
        std::cout << "automorphism " << g.str() << "\n";
        std::cout << "verified: character " << *c << "/" << g.n << ", pgl order " << order << "\n";
    }
    return 0;
}

int run_cubic4(bool as_json) {
    Cubic4Report rep = cubic4_report();
    if (as_json) {
        json rows = json::array();
        for (const Cubic4Row& r : rep.rows) {
            json admitting = json::array();
            for (const SimpleType& t : r.admitting_types) admitting.push_back(t.str());
            rows.push_back({{"order", r.order.get_str()},
                            {"type", r.unique_type.str()},
                            {"admitting_types", admitting},
                            {"group", to_strs(r.group.invariant_factors)},
                            {"polynomial", support_text(simple_support(3, r.unique_type))},
                            {"automorphism", r.witness.str()}});
        }
        emit(envelope("cubic4", 3, 6,
                      json{{"maximal_orders", to_strs(rep.maximal_orders)}, {"rows", rows}}));
        return 0;
    }
    std::cout << "maximal orders:";
    for (const Int& n : rep.maximal_orders) std::cout << " " << n;
    std::cout << "\n\n";
    for (const Cubic4Row& r : rep.rows) {
        std::cout << "order " << r.order << ": type " << r.unique_type.str() << ", group "
                  << group_text(r.group) << "\n";
        std::cout << "  polynomial  " << support_text(simple_support(3, r.unique_type)) << "\n";
        std::cout << "  automorphism " << r.witness.str() << "\n";
        std::cout << "  admitting types:";
        for (const SimpleType& t : r.admitting_types) std::cout << " " << t.str();
        std::cout << (r.admitting_types.size() == 1 ? " (unique)" : " (NOT unique)") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hypersym: diagonal automorphisms of smooth hypersurfaces"};
    app.require_subcommand(1);
    Budget budget = budget_from_env();

    int d = 3, n_vars = 6;
    bool expand = false, as_json = false, want_witness = false;
    std::string type_str, support_file, targets_str, order_str;

    auto* orders = app.add_subcommand("orders", "achievable automorphism orders for (d, N)");
    orders->add_option("--d", d, "degree")->required()->check(CLI::Range(3, 1000000));
    orders->add_option("--N", n_vars, "number of variables")->required()->check(CLI::Range(3, 64));
    orders->add_flag("--expand", expand, "expand divisor-maximal orders to all divisors");
    orders->add_flag("--json", as_json, "JSON output");

    auto* group = app.add_subcommand("group", "symmetry group G_F of a simple type or support");
    group->add_option("--d", d, "degree")->check(CLI::Range(3, 1000000));
    auto* opt_type = group->add_option("--type", type_str, "simple type, e.g. K4+T2");
    group->add_option("--support", support_file, "support JSON file")->excludes(opt_type);
    group->add_flag("--json", as_json, "JSON output");

    auto* smooth = app.add_subcommand("smooth", "smoothness of F_I for an index vector");
    smooth->add_option("--d", d, "degree")->required()->check(CLI::Range(3, 1000000));
    smooth->add_option("--targets", targets_str, "comma-separated i_1,...,i_k")->required();
    smooth->add_flag("--witness", want_witness, "print the singular point");
    smooth->add_flag("--json", as_json, "JSON output");

    auto* witness = app.add_subcommand("witness", "simple-type witness for an order");
    witness->add_option("--d", d, "degree")->required()->check(CLI::Range(3, 1000000));
    witness->add_option("--N", n_vars, "number of variables")->required()->check(CLI::Range(3, 64));
    witness->add_option("--order", order_str, "target order")->required();
    witness->add_flag("--json", as_json, "JSON output");

    auto* cubic4 = app.add_subcommand("cubic4", "cubic fourfold order classification");
    cubic4->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (orders->parsed()) return run_orders(d, n_vars, expand, as_json, budget);
        if (group->parsed()) {
            if (type_str.empty() && support_file.empty()) {
                std::cerr << "error: group requires --type or --support\n";
                return 2;
            }
            return run_group(d, type_str, support_file, as_json);
        }
        if (smooth->parsed()) return run_smooth(d, targets_str, want_witness, as_json);
        if (witness->parsed()) return run_witness(d, n_vars, order_str, as_json);
        if (cubic4->parsed()) return run_cubic4(as_json);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const FactorizationLimit& e) {
        std::cerr << "factorization limit: " << e.what() << "\n";
        return 3;
    } catch (const ComplexityRefusal& e) {
        std::cerr << "complexity refusal: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
