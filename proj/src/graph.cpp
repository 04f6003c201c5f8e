#include "hfree/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace hfree {

std::vector<int> members(Mask m)
{
    std::vector<int> out;
    out.reserve(popcount(m));
    for (; m; m &= m - 1) out.push_back(lowest(m));
    return out;
}

Mask mask_of(const std::vector<int>& vs)
{
    Mask m = 0;
    for (int v : vs) m |= bit(v);
    return m;
}

SmallGraph::SmallGraph(int n) : n_(n)
{
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count " + std::to_string(n) + " outside 0..64");
}

int SmallGraph::edge_count() const
{
    int s = 0;
    for (int v = 0; v < n_; ++v) s += popcount(adj_[v]);
    return s / 2;
}

void SmallGraph::add_edge(int u, int v)
{
    if (u == v) throw std::invalid_argument("self-loop");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

void SmallGraph::remove_edge(int u, int v)
{
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
}

void SmallGraph::flip(int u, int v)
{
    adj_[u] ^= bit(v);
    adj_[v] ^= bit(u);
}

void SmallGraph::set_edge(int u, int v, bool on)
{
    if (on)
        add_edge(u, v);
    else
        remove_edge(u, v);
}

bool SmallGraph::operator==(const SmallGraph& o) const
{
    if (n_ != o.n_) return false;
    for (int v = 0; v < n_; ++v)
        if (adj_[v] != o.adj_[v]) return false;
    return true;
}

SmallGraph from_edges(int n, const std::vector<Pair>& es)
{
    SmallGraph g(n);
    for (auto [u, v] : es) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
        g.add_edge(u, v);
    }
    return g;
}

std::vector<Pair> edges(const SmallGraph& g)
{
    std::vector<Pair> out;
    for (int u = 0; u < g.n(); ++u)
        for (int v : members(g.row(u) & ~low_bits(u + 1))) out.emplace_back(u, v);
    return out;
}

std::vector<Pair> nonedges(const SmallGraph& g)
{
    std::vector<Pair> out;
    for (int u = 0; u < g.n(); ++u)
        for (int v : members(~g.row(u) & g.all() & ~low_bits(u + 1))) out.emplace_back(u, v);
    return out;
}

std::string to_graph6(const SmallGraph& g)
{
    const int n = g.n();
    std::string s;
    s.push_back(static_cast<char>(63 + n));
    int acc = 0, nb = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nb == 6) {
                s.push_back(static_cast<char>(63 + acc));
                acc = nb = 0;
            }
        }
    }
    if (nb) s.push_back(static_cast<char>(63 + (acc << (6 - nb))));
    return s;
}

SmallGraph from_graph6(std::string_view s)
{
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.remove_suffix(1);
    if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
    if (s.empty()) throw std::invalid_argument("empty graph6 string");
    for (char c : s)
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte outside 63..126");
    int n = s[0] - 63;
    if (n > 62) throw std::invalid_argument("graph6: more than 62 vertices is not supported");
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (s.size() != 1 + (bits + 5) / 6)
        throw std::invalid_argument("graph6: length " + std::to_string(s.size()) + " does not match n=" + std::to_string(n));
    SmallGraph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = s[1 + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    if (bits % 6) {
        int tail = s.back() - 63;
        if (tail & ((1 << (6 - bits % 6)) - 1)) throw std::invalid_argument("graph6: nonzero padding bits");
    }
    return g;
}

SmallGraph complement(const SmallGraph& g)
{
    SmallGraph c(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v : members(~g.row(u) & g.all() & ~low_bits(u + 1))) c.add_edge(u, v);
    return c;
}

SmallGraph induced_subgraph(const SmallGraph& g, Mask vs)
{
    if (vs & ~g.all()) throw std::invalid_argument("vertex set not contained in V(g)");
    auto vl = members(vs);
    SmallGraph out(static_cast<int>(vl.size()));
    for (std::size_t i = 0; i < vl.size(); ++i)
        for (std::size_t j = i + 1; j < vl.size(); ++j)
            if (g.adjacent(vl[i], vl[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

SmallGraph delete_vertices(const SmallGraph& g, Mask vs)
{
    if (vs & ~g.all()) throw std::invalid_argument("vertex set not contained in V(g)");
    return induced_subgraph(g, g.all() & ~vs);
}

SmallGraph disjoint_union(const SmallGraph& a, const SmallGraph& b)
{
    SmallGraph out(a.n() + b.n());
    for (auto [u, v] : edges(a)) out.add_edge(u, v);
    for (auto [u, v] : edges(b)) out.add_edge(a.n() + u, a.n() + v);
    return out;
}

SmallGraph join(const SmallGraph& a, const SmallGraph& b)
{
    SmallGraph out = disjoint_union(a, b);
    for (int u = 0; u < a.n(); ++u)
        for (int v = 0; v < b.n(); ++v) out.add_edge(u, a.n() + v);
    return out;
}

SmallGraph relabel(const SmallGraph& g, const std::vector<int>& perm)
{
    SmallGraph out(g.n());
    for (auto [u, v] : edges(g)) out.add_edge(perm[u], perm[v]);
    return out;
}

SmallGraph complete_graph(int n) { return complement(SmallGraph(n)); }
SmallGraph empty_graph(int n) { return SmallGraph(n); }

SmallGraph path_graph(int n)
{
    SmallGraph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

SmallGraph cycle_graph(int n)
{
    SmallGraph g = path_graph(n);
    if (n >= 3) g.add_edge(0, n - 1);
    return g;
}

SmallGraph complete_bipartite(int a, int b) { return join(empty_graph(a), empty_graph(b)); }
SmallGraph star(int t) { return complete_bipartite(1, t); }

bool is_regular(const SmallGraph& g)
{
    for (int v = 1; v < g.n(); ++v)
        if (g.degree(v) != g.degree(0)) return false;
    return true;
}

std::optional<DegreePartition> degree_partition(const SmallGraph& g)
{
    if (g.n() == 0 || is_regular(g)) return std::nullopt;
    DegreePartition p;
    p.ell = g.n();
    p.h = -1;
    for (int v = 0; v < g.n(); ++v) {
        p.ell = std::min(p.ell, g.degree(v));
        p.h = std::max(p.h, g.degree(v));
    }
    for (int v = 0; v < g.n(); ++v) {
        int d = g.degree(v);
        if (d == p.ell)
            p.v_low |= bit(v);
        else if (d == p.h)
            p.v_high |= bit(v);
        else
            p.v_mid |= bit(v);
    }
    p.h_star = g.n() - p.h - 1;
    return p;
}

namespace {

Mask reach(const SmallGraph& g, Mask within, int start)
{
    Mask seen = bit(start), frontier = seen;
    while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= g.row(lowest(f));
        next &= within & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

}  // namespace

bool is_connected_on(const SmallGraph& g, Mask vs)
{
    if (!vs) return true;
    return reach(g, vs, lowest(vs)) == vs;
}

std::vector<Mask> components(const SmallGraph& g)
{
    std::vector<Mask> out;
    Mask left = g.all();
    while (left) {
        Mask c = reach(g, left, lowest(left));
        out.push_back(c);
        left &= ~c;
    }
    return out;
}

bool is_connected(const SmallGraph& g) { return g.n() == 0 || is_connected_on(g, g.all()); }

namespace {

// True when removing any set of fewer than k vertices leaves g connected.
bool survives(const SmallGraph& g, Mask removed, int start, int left)
{
    if (!is_connected_on(g, g.all() & ~removed)) return false;
    if (left == 0) return true;
    for (int v = start; v < g.n(); ++v)
        if (!survives(g, removed | bit(v), v + 1, left - 1)) return false;
    return true;
}

}  // namespace

bool is_k_connected(const SmallGraph& g, int k)
{
    if (k <= 0) return true;
    if (g.n() <= k) return false;
    if (is_complete(g)) return g.n() - 1 >= k;
    return survives(g, 0, 0, k - 1);
}

int vertex_connectivity(const SmallGraph& g)
{
    if (is_complete(g)) return std::max(0, g.n() - 1);
    int k = 0;
    while (is_k_connected(g, k + 1)) ++k;
    return k;
}

bool is_complete(const SmallGraph& g) { return g.edge_count() == g.n() * (g.n() - 1) / 2; }
bool is_empty(const SmallGraph& g) { return g.edge_count() == 0; }
bool is_near_empty(const SmallGraph& g) { return g.edge_count() == 1; }

bool is_path(const SmallGraph& g)
{
    if (g.n() == 0 || !is_connected(g) || g.edge_count() != g.n() - 1) return false;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

bool is_cycle(const SmallGraph& g)
{
    if (g.n() < 3 || !is_connected(g)) return false;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

bool lex_less(Mask a, Mask b)
{
    while (a && b) {
        int la = lowest(a), lb = lowest(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return !a && b;
}

namespace {

class Matcher {
public:
    Matcher(const SmallGraph& g, const SmallGraph& h) : g_(g), h_(h), k_(h.n())
    {
        // Greedy order: each next pattern vertex has the most placed neighbours.
        Mask placed = 0;
        for (int i = 0; i < k_; ++i) {
            int best = -1, bs = -1;
            for (int x = 0; x < k_; ++x) {
                if (placed & bit(x)) continue;
                int s = popcount(h.row(x) & placed) * 64 + h.degree(x);
                if (s > bs) bs = s, best = x;
            }
            order_[i] = best;
            placed |= bit(best);
        }
        for (int i = 0; i < k_; ++i) {
            int x = order_[i];
            back_adj_[i] = back_non_[i] = 0;
            twin_prev_[i] = -1;
            for (int j = 0; j < i; ++j) {
                int y = order_[j];
                if (h.adjacent(x, y))
                    back_adj_[i] |= bit(j);
                else
                    back_non_[i] |= bit(j);
                if ((h.row(x) & ~bit(y)) == (h.row(y) & ~bit(x))) twin_prev_[i] = j;
            }
            int dh = h.degree(x), ch = k_ - 1 - dh;
            allowed_[i] = 0;
            for (int w = 0; w < g.n(); ++w) {
                int dg = g.degree(w);
                if (dg >= dh && g.n() - 1 - dg >= ch) allowed_[i] |= bit(w);
            }
        }
    }

    // Calls f(mask) for each injective match; stops when f returns false.
    template <class F>
    void run(F&& f)
    {
        if (k_ > g_.n()) return;
        if (k_ == 0) {
            f(Mask{0});
            return;
        }
        stop_ = false;
        rec(0, 0, f);
    }

private:
    template <class F>
    void rec(int i, Mask used, F& f)
    {
        if (i == k_) {
            if (!f(used)) stop_ = true;
            return;
        }
        Mask cand = allowed_[i] & ~used;
        for (Mask b = back_adj_[i]; b && cand; b &= b - 1) cand &= g_.row(img_[lowest(b)]);
        for (Mask b = back_non_[i]; b && cand; b &= b - 1) cand &= ~g_.row(img_[lowest(b)]);
        if (twin_prev_[i] >= 0) cand &= ~low_bits(img_[twin_prev_[i]] + 1);
        for (; cand && !stop_; cand &= cand - 1) {
            int w = lowest(cand);
            img_[i] = w;
            rec(i + 1, used | bit(w), f);
        }
    }

    const SmallGraph& g_;
    const SmallGraph& h_;
    int k_;
    bool stop_ = false;
    std::array<int, kMaxVertices> order_{};
    std::array<Mask, kMaxVertices> back_adj_{};
    std::array<Mask, kMaxVertices> back_non_{};
    std::array<int, kMaxVertices> twin_prev_{};
    std::array<Mask, kMaxVertices> allowed_{};
    std::array<int, kMaxVertices> img_{};
};

}  // namespace

std::vector<Mask> find_induced(const SmallGraph& g, const SmallGraph& h)
{
    std::vector<Mask> out;
    Matcher m(g, h);
    m.run([&](Mask s) {
        out.push_back(s);
        return true;
    });
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool contains_induced(const SmallGraph& g, const SmallGraph& h)
{
    bool found = false;
    Matcher m(g, h);
    m.run([&](Mask) {
        found = true;
        return false;
    });
    return found;
}

std::optional<Mask> first_induced(const SmallGraph& g, const SmallGraph& h)
{
    std::optional<Mask> best;
    Matcher m(g, h);
    m.run([&](Mask s) {
        if (!best || lex_less(s, *best)) best = s;
        return true;
    });
    return best;
}

bool is_module(const SmallGraph& g, Mask m)
{
    if (!m) return true;
    Mask outside = g.all() & ~m;
    Mask ref = g.row(lowest(m)) & outside;
    for (Mask r = m; r; r &= r - 1)
        if ((g.row(lowest(r)) & outside) != ref) return false;
    return true;
}

std::vector<Mask> modular_partition(const SmallGraph& g)
{
    std::vector<Mask> parts;
    if (g.n() <= 1) {
        if (g.n() == 1) parts.push_back(bit(0));
        return parts;
    }
    if (!is_connected(g)) {
        parts = components(g);
    } else if (SmallGraph c = complement(g); !is_connected(c)) {
        parts = components(c);
    } else {
        // prime quotient: v, w share a maximal module iff the smallest module
        // containing both is proper
        auto closure = [&](Mask m) {
            for (bool grew = true; grew;) {
                grew = false;
                for (int x : members(g.all() & ~m)) {
                    Mask seen = g.row(x) & m;
                    if (seen != 0 && seen != m) {
                        m |= bit(x);
                        grew = true;
                    }
                }
            }
            return m;
        };
        Mask left = g.all();
        while (left) {
            int v = lowest(left);
            Mask part = bit(v);
            for (int w : members(left & ~bit(v)))
                if (closure(bit(v) | bit(w)) != g.all()) part |= bit(w);
            parts.push_back(part);
            left &= ~part;
        }
    }
    std::sort(parts.begin(), parts.end(), lex_less);
    return parts;
}

}  // namespace hfree
