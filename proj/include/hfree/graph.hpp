#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hfree {

using Mask = std::uint64_t;
using Pair = std::pair<int, int>;

constexpr int kMaxVertices = 64;

constexpr Mask bit(int v) { return Mask{1} << v; }
constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }

std::vector<int> members(Mask m);
Mask mask_of(const std::vector<int>& vs);

// Undirected simple graph on at most 64 vertices, one adjacency word per vertex.
class SmallGraph {
public:
    SmallGraph() = default;
    explicit SmallGraph(int n);

    int n() const { return n_; }
    Mask all() const { return low_bits(n_); }
    Mask row(int v) const { return adj_[v]; }
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1; }
    int degree(int v) const { return popcount(adj_[v]); }
    int edge_count() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    void flip(int u, int v);
    void set_edge(int u, int v, bool on);

    bool operator==(const SmallGraph& o) const;

private:
    int n_ = 0;
    std::array<Mask, kMaxVertices> adj_{};
};

SmallGraph from_edges(int n, const std::vector<Pair>& es);
std::vector<Pair> edges(const SmallGraph& g);
std::vector<Pair> nonedges(const SmallGraph& g);

// Header-less graph6. Throws std::invalid_argument on malformed input.
std::string to_graph6(const SmallGraph& g);
SmallGraph from_graph6(std::string_view s);

SmallGraph complement(const SmallGraph& g);
// Vertices of vs keep their relative order.
SmallGraph induced_subgraph(const SmallGraph& g, Mask vs);
SmallGraph delete_vertices(const SmallGraph& g, Mask vs);
SmallGraph disjoint_union(const SmallGraph& a, const SmallGraph& b);
SmallGraph join(const SmallGraph& a, const SmallGraph& b);
// perm[v] is the new label of v.
SmallGraph relabel(const SmallGraph& g, const std::vector<int>& perm);

SmallGraph complete_graph(int n);
SmallGraph empty_graph(int n);
SmallGraph path_graph(int n);
SmallGraph cycle_graph(int n);
SmallGraph complete_bipartite(int a, int b);
SmallGraph star(int t);

struct DegreePartition {
    int ell = 0;
    int h = 0;
    int h_star = 0;
    Mask v_low = 0;
    Mask v_mid = 0;
    Mask v_high = 0;
};

bool is_regular(const SmallGraph& g);
// nullopt when g is regular.
std::optional<DegreePartition> degree_partition(const SmallGraph& g);

std::vector<Mask> components(const SmallGraph& g);
bool is_connected(const SmallGraph& g);
bool is_connected_on(const SmallGraph& g, Mask vs);
int vertex_connectivity(const SmallGraph& g);
bool is_k_connected(const SmallGraph& g, int k);
inline bool is_3_connected(const SmallGraph& g) { return is_k_connected(g, 3); }

bool is_complete(const SmallGraph& g);
bool is_empty(const SmallGraph& g);
bool is_near_empty(const SmallGraph& g);
bool is_path(const SmallGraph& g);
bool is_cycle(const SmallGraph& g);

// All vertex sets of g inducing a copy of h, each once, ascending.
std::vector<Mask> find_induced(const SmallGraph& g, const SmallGraph& h);
bool contains_induced(const SmallGraph& g, const SmallGraph& h);
// Copy whose sorted vertex list is lexicographically smallest.
std::optional<Mask> first_induced(const SmallGraph& g, const SmallGraph& h);
bool lex_less(Mask a, Mask b);

// Maximal strong modules: components, co-components, or the maximal proper
// modules of a prime graph. Never the whole vertex set when n >= 2.
std::vector<Mask> modular_partition(const SmallGraph& g);
bool is_module(const SmallGraph& g, Mask m);

}  // namespace hfree
