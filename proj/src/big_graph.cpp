#include "hfree/big_graph.hpp"

#include <stdexcept>

namespace hfree {

BigGraph::BigGraph(int n)
{
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (int i = 0; i < n; ++i) add_vertex();
}

BigGraph::BigGraph(const SmallGraph& g) : BigGraph(g.n())
{
    for (auto [u, v] : edges(g)) add_edge(u, v);
}

void BigGraph::grow_words()
{
    ++words_;
    for (auto& r : rows_) r.push_back(0);
}

int BigGraph::add_vertex()
{
    if (n_ == words_ * 64) grow_words();
    rows_.emplace_back(words_, 0);
    return n_++;
}

void BigGraph::set_edge(int u, int v, bool on)
{
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("bad vertex pair");
    auto bu = std::uint64_t{1} << (v & 63), bv = std::uint64_t{1} << (u & 63);
    if (on) {
        rows_[u][v >> 6] |= bu;
        rows_[v][u >> 6] |= bv;
    } else {
        rows_[u][v >> 6] &= ~bu;
        rows_[v][u >> 6] &= ~bv;
    }
}

int BigGraph::degree(int v) const
{
    int d = 0;
    for (auto w : rows_[v]) d += std::popcount(w);
    return d;
}

long long BigGraph::edge_count() const
{
    long long s = 0;
    for (int v = 0; v < n_; ++v) s += degree(v);
    return s / 2;
}

std::vector<int> BigGraph::neighbours(int v) const
{
    std::vector<int> out;
    for (int w = 0; w < words_; ++w)
        for (auto m = rows_[v][w]; m; m &= m - 1) out.push_back(w * 64 + std::countr_zero(m));
    return out;
}

SmallGraph to_small(const BigGraph& g)
{
    if (g.n() > kMaxVertices) throw std::length_error("graph exceeds 64 vertices");
    SmallGraph s(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.adjacent(u, v)) s.add_edge(u, v);
    return s;
}

BigGraph induced_subgraph(const BigGraph& g, const std::vector<int>& vs)
{
    BigGraph s(static_cast<int>(vs.size()));
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j])) s.add_edge(static_cast<int>(i), static_cast<int>(j));
    return s;
}

std::string to_graph6(const BigGraph& g)
{
    const int n = g.n();
    std::string s;
    if (n <= 62) {
        s.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        s.push_back('~');
        for (int shift : {12, 6, 0}) s.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    } else {
        throw std::length_error("graph6: more than 258047 vertices");
    }
    int acc = 0, nb = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nb == 6) {
                s.push_back(static_cast<char>(63 + acc));
                acc = nb = 0;
            }
        }
    if (nb) s.push_back(static_cast<char>(63 + (acc << (6 - nb))));
    return s;
}

namespace {

// Backtracking over a BFS order of a connected pattern. A disconnected h is
// searched as its complement inside the complement of g.
class Matcher {
public:
    Matcher(const BigGraph& g, const SmallGraph& h) : g_(g), inv_(!is_connected(h)), p_(inv_ ? complement(h) : h)
    {
        map_.assign(p_.n(), -1);
        used_.assign(g.n(), 0);
    }

    std::optional<std::vector<int>> run(int root, int image)
    {
        if (p_.n() == 0) return std::vector<int>{};
        order_.clear();
        anchor_.assign(p_.n(), -1);
        Mask seen = bit(root);
        order_.push_back(root);
        for (std::size_t i = 0; i < order_.size(); ++i)
            for (Mask m = p_.row(order_[i]) & ~seen; m; m &= m - 1) {
                int w = lowest(m);
                seen |= bit(w);
                anchor_[w] = order_[i];
                order_.push_back(w);
            }
        if (image >= 0) {
            if (place(0, image) && extend(1)) return map_;
            return std::nullopt;
        }
        for (int v = 0; v < g_.n(); ++v) {
            if (place(0, v) && extend(1)) return map_;
            unplace(0);
        }
        return std::nullopt;
    }

    int order() const { return p_.n(); }

private:
    bool adj(int a, int b) const { return g_.adjacent(a, b) != inv_; }

    bool place(int i, int v)
    {
        int x = order_[i];
        if (used_[v]) return false;
        for (int j = 0; j < i; ++j) {
            int y = order_[j];
            if (p_.adjacent(x, y) != adj(v, map_[y])) return false;
        }
        map_[x] = v;
        used_[v] = 1;
        return true;
    }

    void unplace(int i)
    {
        int x = order_[i];
        if (map_[x] >= 0) used_[map_[x]] = 0;
        map_[x] = -1;
    }

    bool extend(int i)
    {
        if (i == static_cast<int>(order_.size())) return true;
        int a = map_[anchor_[order_[i]]];
        if (!inv_) {
            for (int v : g_.neighbours(a)) {
                if (place(i, v)) {
                    if (extend(i + 1)) return true;
                    unplace(i);
                }
            }
        } else {
            for (int v = 0; v < g_.n(); ++v) {
                if (v == a || g_.adjacent(a, v)) continue;
                if (place(i, v)) {
                    if (extend(i + 1)) return true;
                    unplace(i);
                }
            }
        }
        return false;
    }

    const BigGraph& g_;
    bool inv_;
    SmallGraph p_;
    std::vector<int> order_, anchor_, map_;
    std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<int>> find_copy(const BigGraph& g, const SmallGraph& h)
{
    if (h.n() > g.n()) return std::nullopt;
    Matcher m(g, h);
    return m.run(0, -1);
}

std::optional<std::vector<int>> find_copy_through(const BigGraph& g, const SmallGraph& h, int v)
{
    if (h.n() > g.n()) return std::nullopt;
    for (int r = 0; r < h.n(); ++r) {
        Matcher m(g, h);
        if (auto c = m.run(r, v)) return c;
    }
    return std::nullopt;
}

}  // namespace hfree
