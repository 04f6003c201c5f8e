#include <random>

#include "doctest.h"
#include "hfree/canon.hpp"
#include "hfree/catalogue.hpp"
#include "hfree/graph.hpp"
#include "oracle.hpp"

using namespace hfree;

namespace {

SmallGraph paw() { return from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}); }
SmallGraph diamond() { return from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

}  // namespace

TEST_CASE("complement basics")
{
    CHECK(complement(complete_graph(3)) == empty_graph(3));
    auto p4 = path_graph(4);
    CHECK(complement(complement(p4)) == p4);
    // co-paw is K1 plus a P3
    auto cp = complement(paw());
    CHECK(is_isomorphic(cp, disjoint_union(path_graph(3), empty_graph(1))));
}

TEST_CASE("complement is an involution on every graph up to 7 vertices")
{
    for (int n = 1; n <= 7; ++n) {
        const int m = n * (n - 1) / 2;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); bits += (n == 7 ? 97 : 1)) {
            auto g = oracle::from_bits(n, bits);
            REQUIRE(complement(complement(g)) == g);
            REQUIRE(complement(g).edge_count() == m - g.edge_count());
        }
    }
}

TEST_CASE("graph6 round trip")
{
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 62; ++n) {
        auto g = oracle::random_graph(n, 0.4, rng);
        auto s = to_graph6(g);
        CHECK(from_graph6(s) == g);
    }
    CHECK(to_graph6(path_graph(3)) == "Bg");
    CHECK(to_graph6(cycle_graph(4)) == "Cl");
    CHECK_THROWS_AS(from_graph6("C"), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6("C\x01"), std::invalid_argument);
    CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
}

TEST_CASE("degree partition")
{
    CHECK_FALSE(degree_partition(cycle_graph(5)).has_value());
    auto s = degree_partition(star(4));
    REQUIRE(s);
    CHECK(s->ell == 1);
    CHECK(s->h == 4);
    CHECK(popcount(s->v_low) == 4);
    CHECK(s->v_high == bit(0));
    CHECK(s->v_mid == 0);
    CHECK(s->h_star == 0);
    auto p = degree_partition(paw());
    REQUIRE(p);
    CHECK(p->v_low == bit(3));
    CHECK(p->v_mid == (bit(0) | bit(1)));
    CHECK(p->v_high == bit(2));
}

TEST_CASE("complement swaps low and high degree classes")
{
    for (int n = 2; n <= 7; ++n) {
        const int m = n * (n - 1) / 2;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); bits += (n == 7 ? 31 : 1)) {
            auto g = oracle::from_bits(n, bits);
            auto p = degree_partition(g);
            if (!p) continue;
            auto q = degree_partition(complement(g));
            REQUIRE(q);
            CHECK(q->v_low == p->v_high);
            CHECK(q->v_high == p->v_low);
            for (int v : members(p->v_high)) CHECK(g.degree(v) == p->h);
            CHECK((p->v_low | p->v_mid | p->v_high) == g.all());
            CHECK(p->h_star == n - p->h - 1);
        }
    }
}

TEST_CASE("vertex connectivity")
{
    CHECK(vertex_connectivity(complete_graph(4)) == 3);
    CHECK(vertex_connectivity(cycle_graph(4)) == 2);
    CHECK(vertex_connectivity(complete_bipartite(3, 3)) == 3);
    CHECK(vertex_connectivity(disjoint_union(complete_graph(2), empty_graph(1))) == 0);
    CHECK(is_3_connected(complement(disjoint_union(complete_graph(2), empty_graph(3)))));
    CHECK(is_near_empty(disjoint_union(complete_graph(2), empty_graph(3))));
    CHECK_FALSE(is_near_empty(disjoint_union(complete_graph(2), complete_graph(2))));
}

TEST_CASE("vertex connectivity agrees with subset brute force")
{
    for (int n = 1; n <= 7; ++n) {
        const int m = n * (n - 1) / 2;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); bits += (n == 7 ? 211 : 1)) {
            auto g = oracle::from_bits(n, bits);
            int k = vertex_connectivity(g);
            REQUIRE(k == oracle::brute_connectivity(g));
            CHECK((k >= 3) == is_3_connected(g));
            if (!is_complete(g) && k >= 1) {
                // removing any k-1 vertices keeps it connected
                for (Mask s = 0; s < (Mask{1} << n); ++s)
                    if (popcount(s) == k - 1) CHECK(is_connected_on(g, g.all() & ~s));
            }
        }
    }
}

TEST_CASE("constructions")
{
    auto j = join(complete_graph(2), empty_graph(3));
    CHECK(j.n() == 5);
    CHECK(j.edge_count() == 7);
    CHECK(is_isomorphic(disjoint_union(path_graph(3), empty_graph(2)), lookup("H1").graph));
    auto d = diamond();
    CHECK(induced_subgraph(d, bit(0) | bit(3)) == empty_graph(2));
    CHECK_THROWS_AS(induced_subgraph(d, bit(5)), std::invalid_argument);
    CHECK(delete_vertices(d, bit(0)).n() == 3);
}

TEST_CASE("find_induced examples")
{
    CHECK(find_induced(complete_bipartite(2, 3), cycle_graph(4)).size() == 3);
    CHECK(find_induced(complete_graph(4), cycle_graph(4)).empty());
    CHECK(find_induced(path_graph(5), path_graph(4)).size() == 2);
}

TEST_CASE("find_induced agrees with subset enumeration")
{
    std::mt19937_64 rng(11);
    std::vector<SmallGraph> patterns;
    for (int k = 1; k <= 4; ++k)
        for (auto& h : oracle::all_graphs(k)) patterns.push_back(h);
    for (int it = 0; it < 120; ++it) {
        int n = 4 + it % 5;
        auto g = oracle::random_graph(n, 0.15 + 0.1 * (it % 7), rng);
        for (const auto& h : patterns) {
            auto a = find_induced(g, h);
            auto b = oracle::brute_find_induced(g, h);
            REQUIRE(a == b);
            CHECK(contains_induced(g, h) == !b.empty());
            auto f = first_induced(g, h);
            CHECK(f.has_value() == !b.empty());
            if (f) CHECK(*f == b.front());
        }
    }
}

TEST_CASE("modular partition")
{
    auto m = modular_partition(star(4));
    REQUIRE(m.size() == 2);
    CHECK(m[0] == bit(0));
    CHECK(m[1] == (bit(1) | bit(2) | bit(3) | bit(4)));
    CHECK(modular_partition(path_graph(4)).size() == 4);
    // twin-star T_{2,2}: centres 0,1; leaves 2,3 on 0 and 4,5 on 1
    auto t = from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
    auto tm = modular_partition(t);
    CHECK(tm.size() == 4);
    CHECK(std::find(tm.begin(), tm.end(), bit(2) | bit(3)) != tm.end());
    CHECK(std::find(tm.begin(), tm.end(), bit(4) | bit(5)) != tm.end());
    // K_{2,3} is not merged into a single module
    auto k = modular_partition(complete_bipartite(2, 3));
    CHECK(k.size() == 2);
}

TEST_CASE("modules are modules and partition the vertex set")
{
    std::mt19937_64 rng(5);
    for (int it = 0; it < 300; ++it) {
        auto g = oracle::random_graph(3 + it % 7, 0.5, rng);
        Mask cover = 0;
        for (Mask m : modular_partition(g)) {
            CHECK(is_module(g, m));
            CHECK((cover & m) == 0);
            CHECK(m != g.all());
            cover |= m;
        }
        CHECK(cover == g.all());
    }
}

TEST_CASE("recognisers")
{
    CHECK(is_path(path_graph(6)));
    CHECK_FALSE(is_path(cycle_graph(6)));
    CHECK(is_cycle(cycle_graph(5)));
    CHECK_FALSE(is_cycle(disjoint_union(cycle_graph(3), cycle_graph(3))) == true);
    CHECK(is_regular(cycle_graph(7)));
}
