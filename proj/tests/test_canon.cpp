#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "hfree/canon.hpp"
#include "oracle.hpp"

using namespace hfree;

TEST_CASE("canonical form examples")
{
    auto a = from_edges(3, {{0, 1}, {1, 2}});
    auto b = from_edges(3, {{1, 0}, {0, 2}});
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(canonical_form(cycle_graph(4)) != canonical_form(disjoint_union(complete_graph(2), complete_graph(2))));
    CHECK(canonical_form(cycle_graph(5)) == canonical_form(complement(cycle_graph(5))));
}

TEST_CASE("canonical agreement equals brute isomorphism for all pairs up to 6 vertices")
{
    for (int n = 1; n <= 6; ++n) {
        auto reps = oracle::all_graphs(n);
        std::set<CanonicalForm> forms;
        for (auto& g : reps) forms.insert(canonical_form(g));
        CHECK(forms.size() == reps.size());
        // every labelled graph maps to the form of its brute class
        std::map<std::uint64_t, CanonicalForm> by_brute;
        for (auto& g : reps) by_brute[oracle::brute_canon(g)] = canonical_form(g);
        const int m = n * (n - 1) / 2;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
            auto g = oracle::from_bits(n, bits);
            REQUIRE(canonical_form(g) == by_brute.at(oracle::brute_canon(g)));
        }
    }
}

TEST_CASE("canonical form is invariant under relabelling of larger symmetric graphs")
{
    std::mt19937_64 rng(3);
    std::vector<SmallGraph> gs = {cycle_graph(12), complete_bipartite(5, 6), complement(cycle_graph(10)),
                                  join(cycle_graph(5), cycle_graph(5)), disjoint_union(cycle_graph(4), cycle_graph(4))};
    // Petersen graph
    SmallGraph pet(10);
    for (int i = 0; i < 5; ++i) {
        pet.add_edge(i, (i + 1) % 5);
        pet.add_edge(i, i + 5);
        pet.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    gs.push_back(pet);
    for (int it = 0; it < 40; ++it) gs.push_back(oracle::random_graph(8 + it % 20, 0.3, rng));
    for (auto& g : gs) {
        auto cf = canonical_form(g);
        for (int r = 0; r < 5; ++r) CHECK(canonical_form(oracle::shuffled(g, rng)) == cf);
        CHECK(is_isomorphic(canonical_graph(g), g));
    }
    CHECK_FALSE(is_isomorphic(pet, complement(cycle_graph(10))));
}

TEST_CASE("packed keys round trip")
{
    std::mt19937_64 rng(9);
    for (int it = 0; it < 200; ++it) {
        auto g = oracle::random_graph(1 + it % 11, 0.5, rng);
        auto key = packed_key(g);
        CHECK(is_isomorphic(unpack_key(key), g));
        CHECK(packed_key(oracle::shuffled(g, rng)) == key);
    }
}
