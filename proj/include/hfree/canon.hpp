#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "hfree/graph.hpp"

namespace hfree {

// Adjacency rows of the canonically relabelled graph. Equal iff isomorphic.
struct CanonicalForm {
    int n = 0;
    std::vector<Mask> rows;

    auto operator<=>(const CanonicalForm&) const = default;
    bool operator==(const CanonicalForm&) const = default;
};

struct CanonicalHash {
    std::size_t operator()(const CanonicalForm& c) const;
};

// order[i] is the vertex placed at position i of the canonical labelling.
std::vector<int> canonical_labeling(const SmallGraph& g);
CanonicalForm canonical_form(const SmallGraph& g);
SmallGraph canonical_graph(const SmallGraph& g);
bool is_isomorphic(const SmallGraph& a, const SmallGraph& b);

// Upper triangle of the canonical graph with n in the top bits; n <= 11.
std::uint64_t packed_key(const SmallGraph& g);
SmallGraph unpack_key(std::uint64_t key);

}  // namespace hfree
