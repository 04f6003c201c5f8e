#include <map>
#include <random>

#include "doctest.h"
#include "hfree/canon.hpp"
#include "hfree/catalogue.hpp"
#include "hfree/classifier.hpp"
#include "hfree/reductions.hpp"
#include "hfree/solver.hpp"
#include "oracle.hpp"

using namespace hfree;

namespace {

const SolveLimits kWide{64, 4, 100'000'000};

std::string end_name(const SmallGraph& h)
{
    auto chain = derive_chain(h);
    return chain.empty() ? name_of(h) : chain.back().to_name;
}

SmallGraph twin_star_k2_4k1()
{
    // K_2 joined to 4K_1
    return join(complete_graph(2), empty_graph(4));
}

}  // namespace

TEST_CASE("rule and construction names round-trip")
{
    for (int i = 0; i <= static_cast<int>(Rule::LargestComponent); ++i) {
        auto r = static_cast<Rule>(i);
        REQUIRE(rule_from_string(to_string(r)));
        CHECK(*rule_from_string(to_string(r)) == r);
    }
    for (int i = 0; i <= static_cast<int>(Construction::TrickyA6cCom); ++i) {
        auto c = static_cast<Construction>(i);
        REQUIRE(construction_from_string(to_string(c)));
        CHECK(*construction_from_string(to_string(c)) == c);
    }
    CHECK_FALSE(rule_from_string("no-such-rule"));
    CHECK(to_string(Rule::K23) == "k23");
    CHECK(to_string(Rule::ModuleTrim) == "module-trim");
}

TEST_CASE("chain targets of the S series")
{
    const std::map<std::string, std::string> expected{
        {"S2", "co-H7"},  {"S3", "H6"},    {"S16", "H6"},    {"S17", "co-H1"}, {"S31", "H6"},   {"S4", "H2"},
        {"S6", "H6"},     {"S5", "C4"},    {"S9", "co-H4"},  {"S15", "H9"},    {"S7", "H9"},    {"S8", "co-A1"},
        {"S10", "C4"},    {"S11", "co-H7"}, {"S18", "co-A1"}, {"S21", "co-H4"}, {"S23", "co-A7"},
        {"S25", "co-H1"}, {"S28", "co-A9"}, {"S14", "B1"},
    };
    for (auto& [id, target] : expected) {
        CAPTURE(id);
        CHECK(end_name(lookup(id).graph) == target);
    }
    // first steps that land on other S members
    const std::map<std::string, std::string> first{
        {"S12", "S2"},  {"S13", "S3"},  {"S16", "S3"}, {"S19", "co-S3"}, {"S24", "co-S7"}, {"S26", "S8"},
        {"S29", "S17"}, {"S30", "co-S19"}, {"S32", "S16"}, {"S36", "S14"}, {"S31", "S3"},
    };
    for (auto& [id, target] : first) {
        CAPTURE(id);
        auto chain = derive_chain(lookup(id).graph);
        bool hit = false;
        for (auto& st : chain) hit = hit || st.to_name == target;
        CHECK(hit);
    }
    auto s27 = derive_chain(lookup("S27").graph);
    REQUIRE_FALSE(s27.empty());
    auto f = recognize_family(s27.front().to);
    REQUIRE(f);
    CHECK(f->family == 6);
    auto s1 = derive_chain(lookup("S1").graph);
    REQUIRE(s1.size() == 1);
    CHECK(s1[0].rule == Rule::K23);
    CHECK(is_isomorphic(s1[0].to, cycle_graph(4)));
}

TEST_CASE("every chain from the catalogue union ends in X_D or the finite refinement")
{
    std::vector<SmallGraph> sources;
    for (auto& e : catalogue())
        if (series_of(e.id)) {
            sources.push_back(e.graph);
            sources.push_back(complement(e.graph));
        }
    for (int fam = 1; fam <= 10; ++fam)
        for (int t = family_min_t(fam); family_order(fam, t) <= 10; ++t) {
            auto g = generate_family({fam, t});
            sources.push_back(g);
            sources.push_back(complement(g));
        }
    for (auto& h : sources) {
        CAPTURE(to_graph6(h));
        auto chain = derive_chain(h);
        SmallGraph cur = h;
        for (auto& st : chain) {
            CHECK(is_isomorphic(st.from, cur));
            CHECK(st.to.n() < st.from.n());
            CHECK(contains_induced(st.from, st.to));
            CHECK(is_isomorphic(st.to, induced_subgraph(st.from, st.kept)));
            cur = st.to;
        }
        CHECK(chain_terminal(cur));
    }
}

TEST_CASE("complement members start with the same rule on the other side")
{
    for (auto& e : catalogue()) {
        if (series_of(e.id) != 'S') continue;
        if (is_isomorphic(e.graph, complement(e.graph))) continue;
        auto a = derive_chain(e.graph);
        auto b = derive_chain(complement(e.graph));
        CAPTURE(e.id);
        REQUIRE_FALSE(a.empty());
        REQUIRE_FALSE(b.empty());
        CHECK(a[0].rule == b[0].rule);
        CHECK(a[0].via_complement != b[0].via_complement);
        CHECK(is_isomorphic(complement(a[0].to), b[0].to));
    }
}

TEST_CASE("rule preconditions hold along the S chains")
{
    for (auto& e : catalogue()) {
        if (series_of(e.id) != 'S') continue;
        for (auto& st : derive_chain(e.graph)) {
            if (st.rule == Rule::Low || st.rule == Rule::High) continue;
            SmallGraph side = st.via_complement ? complement(st.from) : st.from;
            auto rep = check_preconditions(st.rule, side);
            CAPTURE(e.id);
            CAPTURE(to_string(st.rule));
            CAPTURE(rep.failed());
            CHECK(rep.ok());
        }
    }
}

TEST_CASE("path preconditions fail on a chain-free graph")
{
    auto rep = check_preconditions(Rule::Path, complete_graph(5));
    CHECK_FALSE(rep.ok());
    CHECK(rep.failed().find("chain") != std::string::npos);
    CHECK_FALSE(apply_rule(Rule::Path, complete_graph(5)));
    CHECK_FALSE(check_preconditions(Rule::K23, cycle_graph(5)).ok());
}

TEST_CASE("construction sizes")
{
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 6; ++n) {
        auto g = oracle::random_graph(n, 0.5, rng);
        for (int k = 0; k <= 2; ++k) {
            for (int ell = 1; ell <= 2; ++ell) {
                auto out = con_mod(g, k, ell);
                long long subsets = ell == 1 ? n : n * (n - 1) / 2;
                CHECK(out.n() == n + subsets * (k + 1));
                CHECK(induced_subgraph(out, g.all()) == g);
            }
            auto nu = con_near_uni(g, k, 1);
            CHECK(nu.n() == n + n * (k + 2));
            CHECK(induced_subgraph(nu, g.all()) == g);
            auto dc = disjoint_clique(g, k);
            CHECK(dc.n() == n + k + 1);
            auto h = complete_bipartite(1, 3);
            Mask vprime = bit(0) | bit(1);
            if (n <= 4 && k <= 1) {
                auto cm = con_main(g, k, h, vprime);
                CHECK(cm.n() == con_main_size(n, k, 4, 2));
                CHECK(cm.n() == n + n * (n - 1) * (k + 1) * 2);
                CHECK(induced_subgraph(cm, g.all()) == g);
            }
        }
    }
    CHECK_THROWS_AS(con_mod(empty_graph(12), 3, 2), std::length_error);
    CHECK_THROWS_AS(con_mod(empty_graph(3), 0, 0), std::invalid_argument);
}

TEST_CASE("con_main satellites copy the pattern")
{
    auto h = path_graph(4);  // 0-1-2-3
    auto g = path_graph(2);
    auto out = con_main(g, 0, h, bit(1) | bit(2));
    // two injective maps, each adds an end vertex on both sides; the four
    // satellites pair up across maps as well
    CHECK(out.n() == 2 + 2 * 2);
    CHECK(contains_induced(out, h));
    CHECK(find_induced(out, h).size() == 4);
}

TEST_CASE("six designated reductions preserve answers on every small target instance")
{
    struct Case {
        const char* name;
        SmallGraph source;
        Rule rule;
        SmallGraph target;
    };
    const std::vector<Case> cases{
        {"k23", complete_bipartite(2, 3), Rule::K23, cycle_graph(4)},
        {"star-trim", star(5), Rule::ModuleTrim, star(4)},
        {"k2-join-trim", twin_star_k2_4k1(), Rule::ModuleTrim, join(complete_graph(2), empty_graph(3))},
        {"isolated-vertex", disjoint_union(star(3), empty_graph(2)), Rule::IsolatedVertex,
         disjoint_union(star(3), empty_graph(1))},
        {"clique-component", disjoint_union(complete_graph(4), complete_graph(2)), Rule::CliqueComponent,
         disjoint_union(complete_graph(4), complete_graph(1))},
        {"largest-component", disjoint_union(star(4), complete_graph(2)), Rule::LargestComponent, star(4)},
    };
    std::vector<SmallGraph> targets;
    for (int n = 1; n <= 4; ++n)
        for (auto& g : oracle::all_graphs(n)) targets.push_back(g);
    for (auto& c : cases) {
        CAPTURE(c.name);
        auto st = make_step(c.rule, c.source, false);
        REQUIRE(st);
        REQUIRE(is_isomorphic(st->to, c.target));
        for (auto& g : targets)
            for (Mode m : {Mode::Edit, Mode::Delete, Mode::Complete})
                for (int k = 0; k <= 1; ++k) {
                    EditInstance t{g, k, m, {}};
                    auto s = execute_step(*st, t);
                    CHECK(s.k == k);
                    CHECK(s.mode == m);
                    CHECK(solve(s, c.source, kWide).feasible == solve(t, c.target, kWide).feasible);
                }
    }
}

TEST_CASE("module-trim steps of the S series preserve answers on tiny instances")
{
    std::mt19937_64 rng(11);
    for (const char* id : {"S7", "S8", "S10", "S14"}) {
        auto h = lookup(id).graph;
        auto chain = derive_chain(h);
        REQUIRE_FALSE(chain.empty());
        auto st = chain.front();
        CAPTURE(id);
        for (int n = 1; n <= 4; ++n)
            for (auto& g : oracle::all_graphs(n))
                for (Mode m : {Mode::Edit, Mode::Delete, Mode::Complete}) {
                    EditInstance t{g, 0, m, {}};
                    auto s = execute_step(st, t);
                    CHECK(solve(s, st.from, kWide).feasible == solve(t, st.to, kWide).feasible);
                }
    }
}

TEST_CASE("execute_step rejects restricted targets")
{
    auto st = make_step(Rule::K23, complete_bipartite(2, 3), false);
    REQUIRE(st);
    EditInstance t{cycle_graph(4), 1, Mode::Delete, pair_set({{0, 1}})};
    CHECK_THROWS_AS(execute_step(*st, t), std::invalid_argument);
}

TEST_CASE("derive_chain rejects graphs outside the catalogue union")
{
    CHECK_THROWS_AS(derive_chain(from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}})), std::invalid_argument);
    CHECK(derive_chain(lookup("H3").graph).empty());
}
