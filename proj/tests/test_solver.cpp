#include <random>

#include "doctest.h"
#include "hfree/solver.hpp"
#include "oracle.hpp"

using namespace hfree;

namespace {

EditInstance inst(const SmallGraph& g, int k, Mode m) { return {g, k, m, {}}; }

}  // namespace

TEST_CASE("solver examples")
{
    auto c4 = cycle_graph(4);
    CHECK(solve(inst(c4, 1, Mode::Delete), c4).feasible);
    CHECK_FALSE(solve(inst(c4, 0, Mode::Delete), c4).feasible);
    auto p3 = path_graph(3);
    CHECK_FALSE(solve(inst(star(3), 1, Mode::Delete), p3).feasible);
    CHECK(solve(inst(star(3), 2, Mode::Delete), p3).feasible);
    CHECK_FALSE(solve(inst(complete_bipartite(2, 3), 1, Mode::Delete), c4).feasible);
    CHECK(solve(inst(empty_graph(3), 0, Mode::Edit), empty_graph(4)).feasible);
}

TEST_CASE("edit budget covering every pair always succeeds for non-trivial h")
{
    for (int n = 2; n <= 5; ++n) {
        std::mt19937_64 rng(n);
        auto g = oracle::random_graph(n, 0.5, rng);
        for (auto h : {path_graph(3), cycle_graph(4), complete_bipartite(1, 3)})
            CHECK(solve_exhaustive(inst(g, n * (n - 1) / 2, Mode::Edit), h, {64, 64, 100'000'000}).feasible);
    }
}

TEST_CASE("solve agrees with exhaustive search on the full small grid")
{
    std::vector<SmallGraph> patterns;
    for (int hn = 3; hn <= 4; ++hn)
        for (auto& h : oracle::all_graphs(hn)) patterns.push_back(h);
    int checked = 0;
    for (int n = 1; n <= 5; ++n)
        for (auto& g : oracle::all_graphs(n))
            for (auto& h : patterns)
                for (Mode m : {Mode::Edit, Mode::Delete, Mode::Complete}) {
                    bool prev = false;
                    for (int k = 0; k <= 2; ++k) {
                        auto a = solve(inst(g, k, m), h);
                        auto b = solve_exhaustive(inst(g, k, m), h);
                        REQUIRE(a.feasible == b.feasible);
                        if (a.feasible) CHECK(witness_valid(inst(g, k, m), h, a.witness));
                        if (b.feasible) CHECK(witness_valid(inst(g, k, m), h, b.witness));
                        CHECK((!prev || a.feasible));
                        prev = a.feasible;
                        ++checked;
                    }
                }
    CHECK(checked > 0);
}

TEST_CASE("deletion and completion are dual under complement")
{
    for (int n = 1; n <= 5; ++n)
        for (auto& g : oracle::all_graphs(n))
            for (int hn = 3; hn <= 4; ++hn)
                for (auto& h : oracle::all_graphs(hn))
                    for (int k = 0; k <= 2; ++k)
                        REQUIRE(solve(inst(g, k, Mode::Delete), h).feasible ==
                                solve(inst(complement(g), k, Mode::Complete), complement(h)).feasible);
}

TEST_CASE("restricted instances respect forbidden pairs")
{
    auto c4 = cycle_graph(4);
    EditInstance r{c4, 1, Mode::Delete, pair_set({{0, 1}, {1, 2}, {2, 3}})};
    auto s = solve(r, c4);
    REQUIRE(s.feasible);
    CHECK(s.witness == std::vector<Pair>{{0, 3}});
    r.forbidden.insert(0, 3);
    CHECK_FALSE(solve(r, c4).feasible);
    CHECK_FALSE(solve_exhaustive(r, c4).feasible);
    EditInstance bad{c4, 1, Mode::Delete, pair_set({{0, 2}})};
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("random restricted instances agree")
{
    std::mt19937_64 rng(11);
    std::vector<SmallGraph> hs = {path_graph(3), cycle_graph(4), from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}),
                                  from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})};
    for (int it = 0; it < 500; ++it) {
        int n = 3 + static_cast<int>(rng() % 4);
        auto g = oracle::random_graph(n, 0.5, rng);
        Mode m = static_cast<Mode>(rng() % 3);
        EditInstance in{g, static_cast<int>(rng() % 3), m, {}};
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                bool fits = m == Mode::Edit || (m == Mode::Delete) == g.adjacent(u, v);
                if (fits && rng() % 4 == 0) in.forbidden.insert(u, v);
            }
        auto& h = hs[rng() % hs.size()];
        REQUIRE(solve(in, h).feasible == solve_exhaustive(in, h).feasible);
    }
}

TEST_CASE("guardrails fail fast")
{
    CHECK_THROWS_AS(solve(inst(empty_graph(21), 1, Mode::Edit), path_graph(3)), std::length_error);
    CHECK_THROWS_AS(solve(inst(empty_graph(5), 5, Mode::Edit), path_graph(3)), std::length_error);
    CHECK_THROWS_AS(solve_exhaustive(inst(empty_graph(30), 4, Mode::Edit), path_graph(3)), std::length_error);
}
