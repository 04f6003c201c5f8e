#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hfree/graph.hpp"

namespace hfree {

// Simple graph without the 64-vertex cap, for gadget assemblies.
class BigGraph {
public:
    BigGraph() = default;
    explicit BigGraph(int n);
    explicit BigGraph(const SmallGraph& g);

    int n() const { return n_; }
    int add_vertex();
    bool adjacent(int u, int v) const { return (rows_[u][v >> 6] >> (v & 63)) & 1; }
    void set_edge(int u, int v, bool on);
    void add_edge(int u, int v) { set_edge(u, v, true); }
    void remove_edge(int u, int v) { set_edge(u, v, false); }
    void flip(int u, int v) { set_edge(u, v, !adjacent(u, v)); }
    int degree(int v) const;
    long long edge_count() const;
    std::vector<int> neighbours(int v) const;

    bool operator==(const BigGraph& o) const = default;

private:
    void grow_words();

    int n_ = 0;
    int words_ = 0;
    std::vector<std::vector<std::uint64_t>> rows_;
};

// Throws std::length_error above 64 vertices.
SmallGraph to_small(const BigGraph& g);
BigGraph induced_subgraph(const BigGraph& g, const std::vector<int>& vs);
// Long-form size header past 62 vertices.
std::string to_graph6(const BigGraph& g);

// Vertex list (indexed by h's labels) of some induced copy of h.
std::optional<std::vector<int>> find_copy(const BigGraph& g, const SmallGraph& h);
// Same, restricted to copies that use vertex v.
std::optional<std::vector<int>> find_copy_through(const BigGraph& g, const SmallGraph& h, int v);
inline bool contains_induced(const BigGraph& g, const SmallGraph& h) { return find_copy(g, h).has_value(); }

}  // namespace hfree
