#include "hfree/canon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hfree {

namespace {

using Colors = std::array<std::uint8_t, kMaxVertices>;

// Equitable refinement. Cells keep their order; each cell splits by the
// vector of neighbour counts into every cell, fragments sorted by that vector.
int refine(const SmallGraph& g, Colors& col, int k)
{
    const int n = g.n();
    std::array<std::uint8_t, kMaxVertices * kMaxVertices> cnt;
    std::array<int, kMaxVertices> idx;
    for (;;) {
        std::array<Mask, kMaxVertices> cell{};
        for (int v = 0; v < n; ++v) cell[col[v]] |= bit(v);
        for (int v = 0; v < n; ++v)
            for (int c = 0; c < k; ++c) cnt[v * kMaxVertices + c] = static_cast<std::uint8_t>(popcount(g.row(v) & cell[c]));
        std::iota(idx.begin(), idx.begin() + n, 0);
        auto less = [&](int a, int b) {
            if (col[a] != col[b]) return col[a] < col[b];
            return std::lexicographical_compare(&cnt[a * kMaxVertices], &cnt[a * kMaxVertices] + k,
                                                &cnt[b * kMaxVertices], &cnt[b * kMaxVertices] + k);
        };
        std::sort(idx.begin(), idx.begin() + n, less);
        Colors next{};
        int nk = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && less(idx[i - 1], idx[i])) ++nk;
            next[idx[i]] = static_cast<std::uint8_t>(nk);
        }
        ++nk;
        col = next;
        if (nk == k) return k;
        k = nk;
    }
}

struct UnionFind {
    std::array<int, kMaxVertices> p;
    explicit UnionFind(int n) { std::iota(p.begin(), p.begin() + n, 0); }
    int find(int x)
    {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

class Search {
public:
    explicit Search(const SmallGraph& g) : g_(g), n_(g.n()) {}

    std::vector<int> run()
    {
        Colors col{};
        for (int v = 0; v < n_; ++v) col[v] = static_cast<std::uint8_t>(g_.degree(v));
        int k = normalise(col);
        k = refine(g_, col, k);
        dfs(col, k, 0, 0);
        std::vector<int> order(n_);
        for (int v = 0; v < n_; ++v) order[best_pos_[v]] = v;
        return order;
    }

private:
    int normalise(Colors& col) const
    {
        std::array<int, 256> seen{};
        for (int v = 0; v < n_; ++v) seen[col[v]] = 1;
        int k = 0;
        for (int& s : seen) s = s ? k++ : -1;
        for (int v = 0; v < n_; ++v) col[v] = static_cast<std::uint8_t>(seen[col[v]]);
        return k;
    }

    std::vector<Mask> certificate(const Colors& pos) const
    {
        std::vector<Mask> rows(n_, 0);
        for (int v = 0; v < n_; ++v) {
            Mask r = 0;
            for (Mask m = g_.row(v); m; m &= m - 1) r |= bit(pos[lowest(m)]);
            rows[pos[v]] = r;
        }
        return rows;
    }

    void record_automorphism(const Colors& pos, const Colors& other)
    {
        std::array<int, kMaxVertices> inv{};
        for (int v = 0; v < n_; ++v) inv[other[v]] = v;
        std::vector<int> gamma(n_);
        bool trivial = true;
        for (int v = 0; v < n_; ++v) {
            gamma[v] = inv[pos[v]];
            trivial &= gamma[v] == v;
        }
        if (!trivial) gens_.push_back(std::move(gamma));
    }

    // Returns -1 to continue normally, or the first-path depth to unwind to.
    int dfs(const Colors& col, int k, int depth, int fp_depth)
    {
        if (k == n_) return leaf(col, fp_depth);
        std::array<int, 256> size{};
        for (int v = 0; v < n_; ++v) ++size[col[v]];
        int target = 0;
        while (size[target] < 2) ++target;
        Mask cellv = 0;
        for (int v = 0; v < n_; ++v)
            if (col[v] == target) cellv |= bit(v);

        const bool on_first = depth == fp_depth;
        Mask explored = 0;
        bool first_child = true;
        for (Mask c = cellv; c; c &= c - 1) {
            int v = lowest(c);
            if (explored && in_explored_orbit(v, explored)) continue;
            Colors child{};
            for (int u = 0; u < n_; ++u) child[u] = static_cast<std::uint8_t>(2 * col[u] + (u == v ? 0 : 1));
            int ck = normalise(child);
            ck = refine(g_, child, ck);
            path_.push_back(v);
            int child_fp = on_first && first_child ? depth + 1 : fp_depth;
            int r = dfs(child, ck, depth + 1, child_fp);
            path_.pop_back();
            explored |= bit(v);
            first_child = false;
            if (r >= 0 && r < depth) return r;
        }
        return -1;
    }

    bool in_explored_orbit(int v, Mask explored)
    {
        UnionFind uf(n_);
        for (const auto& gm : gens_) {
            bool fixes = true;
            for (int p : path_)
                if (gm[p] != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int u = 0; u < n_; ++u) uf.unite(u, gm[u]);
        }
        int rv = uf.find(v);
        for (Mask e = explored; e; e &= e - 1)
            if (uf.find(lowest(e)) == rv) return true;
        return false;
    }

    int leaf(const Colors& pos, int fp_depth)
    {
        auto cert = certificate(pos);
        if (!have_first_) {
            have_first_ = true;
            first_pos_ = best_pos_ = pos;
            first_cert_ = best_cert_ = std::move(cert);
            return -1;
        }
        if (cert == first_cert_) {
            record_automorphism(pos, first_pos_);
            return fp_depth;
        }
        if (cert < best_cert_) {
            best_cert_ = std::move(cert);
            best_pos_ = pos;
        } else if (cert == best_cert_) {
            record_automorphism(pos, best_pos_);
        }
        return -1;
    }

    const SmallGraph& g_;
    int n_;
    bool have_first_ = false;
    Colors first_pos_{}, best_pos_{};
    std::vector<Mask> first_cert_, best_cert_;
    std::vector<std::vector<int>> gens_;
    std::vector<int> path_;
};

}  // namespace

std::size_t CanonicalHash::operator()(const CanonicalForm& c) const
{
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(c.n);
    for (Mask r : c.rows) {
        h ^= r + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
}

std::vector<int> canonical_labeling(const SmallGraph& g)
{
    if (g.n() == 0) return {};
    return Search(g).run();
}

SmallGraph canonical_graph(const SmallGraph& g)
{
    auto order = canonical_labeling(g);
    std::vector<int> perm(g.n());
    for (int i = 0; i < g.n(); ++i) perm[order[i]] = i;
    return relabel(g, perm);
}

CanonicalForm canonical_form(const SmallGraph& g)
{
    SmallGraph c = canonical_graph(g);
    CanonicalForm f;
    f.n = g.n();
    f.rows.resize(g.n());
    for (int v = 0; v < g.n(); ++v) f.rows[v] = c.row(v);
    return f;
}

bool is_isomorphic(const SmallGraph& a, const SmallGraph& b)
{
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

std::uint64_t packed_key(const SmallGraph& g)
{
    if (g.n() > 11) throw std::invalid_argument("packed_key needs n <= 11");
    SmallGraph c = canonical_graph(g);
    std::uint64_t key = 0;
    int b = 0;
    for (int j = 1; j < c.n(); ++j)
        for (int i = 0; i < j; ++i, ++b)
            if (c.adjacent(i, j)) key |= std::uint64_t{1} << b;
    return key | (static_cast<std::uint64_t>(c.n()) << 56);
}

SmallGraph unpack_key(std::uint64_t key)
{
    int n = static_cast<int>(key >> 56);
    SmallGraph g(n);
    int b = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++b)
            if ((key >> b) & 1) g.add_edge(i, j);
    return g;
}

}  // namespace hfree
