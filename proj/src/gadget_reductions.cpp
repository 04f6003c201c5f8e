#include "hfree/gadget_reductions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hfree/catalogue.hpp"

namespace hfree {

void validate(const PropFormula& phi, bool strict)
{
    if (phi.vars < 0) throw std::invalid_argument("negative variable count");
    std::vector<int> seen(phi.vars, 0);
    for (auto& c : phi.clauses) {
        for (int v : c)
            if (v < 0 || v >= phi.vars) throw std::invalid_argument("variable out of range");
        if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) throw std::invalid_argument("repeated variable in a clause");
        for (int v : c)
            if (++seen[v] > 3) throw std::invalid_argument("variable occurs more than three times");
    }
    if (strict)
        for (int s : seen)
            if (s != 3) throw std::invalid_argument("formula is not 3-regular");
}

bool satisfies(const PropFormula& phi, const PropTable& f, const std::vector<bool>& a)
{
    return std::all_of(phi.clauses.begin(), phi.clauses.end(), [&](auto& c) { return f.at(a[c[0]], a[c[1]], a[c[2]]); });
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    int make()
    {
        parent.push_back(static_cast<int>(parent.size()));
        return parent.back();
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

BigInstance con_cai(const PropFormula& phi, int k, const Gadget& s_comp, const Gadget& unit, bool strict)
{
    if (s_comp.role != GadgetRole::SComponent || unit.role != GadgetRole::BasicUnit)
        throw std::invalid_argument("gadget role mismatch");
    if (s_comp.mode != unit.mode) throw std::invalid_argument("gadget modes differ");
    if (k < 0) throw std::invalid_argument("negative budget");
    validate(phi, strict);

    const auto ring = build_truth_setting(unit);
    const int rn = ring.graph.n();
    const int sn = s_comp.graph.n();
    UnionFind uf;
    for (int i = 0; i < phi.vars * rn + static_cast<int>(phi.clauses.size()) * sn; ++i) uf.make();
    auto ring_vertex = [&](int var, int v) { return var * rn + v; };
    auto s_vertex = [&](int clause, int v) { return phi.vars * rn + clause * sn + v; };

    std::vector<int> used(phi.vars, 0);
    for (std::size_t c = 0; c < phi.clauses.size(); ++c)
        for (int t = 0; t < 3; ++t) {
            int var = phi.clauses[c][t];
            Pair junction = ring.allowed[ring.variable[used[var]++]];
            Pair sp = s_comp.allowed[t];
            uf.unite(s_vertex(static_cast<int>(c), sp.first), ring_vertex(var, junction.first));
            uf.unite(s_vertex(static_cast<int>(c), sp.second), ring_vertex(var, junction.second));
        }

    std::vector<int> label(uf.parent.size(), -1);
    BigInstance out;
    out.k = 3 * unit.h.n() * k;
    out.mode = unit.mode;
    auto at = [&](int proto) {
        int r = uf.find(proto);
        if (label[r] < 0) label[r] = out.g.add_vertex();
        return label[r];
    };
    for (int var = 0; var < phi.vars; ++var)
        for (int v = 0; v < rn; ++v)
            for (int w : ring.graph.neighbours(v))
                if (v < w) out.g.add_edge(at(ring_vertex(var, v)), at(ring_vertex(var, w)));
    for (std::size_t c = 0; c < phi.clauses.size(); ++c)
        for (auto [u, v] : edges(s_comp.graph)) out.g.add_edge(at(s_vertex(static_cast<int>(c), u)), at(s_vertex(static_cast<int>(c), v)));
    // isolated proto vertices still need a label
    for (std::size_t p = 0; p < uf.parent.size(); ++p) at(static_cast<int>(p));

    out.variable_pairs.resize(phi.vars);
    for (int var = 0; var < phi.vars; ++var)
        for (auto [a, b] : ring.allowed) {
            out.variable_pairs[var].push_back(static_cast<int>(out.allowed.size()));
            out.allowed.emplace_back(at(ring_vertex(var, a)), at(ring_vertex(var, b)));
        }
    return out;
}

BigGraph apply_assignment(const BigInstance& inst, const std::vector<bool>& assignment)
{
    BigGraph g = inst.g;
    for (std::size_t v = 0; v < inst.variable_pairs.size(); ++v)
        if (assignment.at(v))
            for (int i : inst.variable_pairs[v]) g.set_edge(inst.allowed[i].first, inst.allowed[i].second, inst.mode == Mode::Complete);
    return g;
}

std::optional<std::vector<bool>> solve_ring_closed(const BigInstance& inst, const SmallGraph& h)
{
    const int vars = static_cast<int>(inst.variable_pairs.size());
    if (vars > 20) throw std::length_error("too many variables for ring-closed search");
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << vars); ++s) {
        long long cost = 0;
        std::vector<bool> a(vars);
        for (int v = 0; v < vars; ++v)
            if ((s >> v) & 1) {
                a[v] = true;
                cost += static_cast<long long>(inst.variable_pairs[v].size());
            }
        if (cost > inst.k) continue;
        if (!contains_induced(apply_assignment(inst, a), h)) return a;
    }
    return std::nullopt;
}

namespace {

class Builder {
public:
    explicit Builder(const SmallGraph& base) : n_(base.n()), edges_(edges(base)) {}
    int add()
    {
        return n_++;
    }
    std::vector<int> add(int count)
    {
        std::vector<int> vs(count);
        for (auto& v : vs) v = add();
        return vs;
    }
    void edge(int u, int v) { edges_.emplace_back(u, v); }
    void join(const std::vector<int>& a, const std::vector<int>& b)
    {
        for (int u : a)
            for (int v : b) edge(u, v);
    }
    void join(int u, const std::vector<int>& b) { join(std::vector<int>{u}, b); }
    void clique(const std::vector<int>& a)
    {
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = i + 1; j < a.size(); ++j) edge(a[i], a[j]);
    }
    int n() const { return n_; }
    SmallGraph build() const
    {
        if (n_ > kMaxVertices) throw std::length_error("construction exceeds 64 vertices (" + std::to_string(n_) + ")");
        return from_edges(n_, edges_);
    }

private:
    int n_;
    std::vector<Pair> edges_;
};

}  // namespace

EditInstance enforcer_attach(const EditInstance& inst, const Gadget& enforcer)
{
    validate(inst);
    if (enforcer.role != GadgetRole::Enforcer) throw std::invalid_argument("not an enforcer");
    if (enforcer.mode != inst.mode) throw std::invalid_argument("enforcer mode differs from the instance");
    auto check = verify_enforcer(enforcer, 0, false);
    if (!check.exact || !check.structural) throw std::invalid_argument("unverified enforcer");

    const auto& x = enforcer.graph;
    auto [a, b] = enforcer.allowed[0];
    Builder out(inst.g);
    for (auto [u, v] : inst.forbidden.list())
        for (int c = 0; c <= inst.k; ++c) {
            std::vector<int> place(x.n(), -1);
            place[a] = u;
            place[b] = v;
            for (auto& p : place)
                if (p < 0) p = out.add();
            for (auto [s, t] : edges(x))
                if (!(place[s] < inst.g.n() && place[t] < inst.g.n())) out.edge(place[s], place[t]);
        }
    EditInstance r;
    r.g = out.build();
    r.k = inst.k;
    r.mode = inst.mode;
    return r;
}

TrickyShape tricky_shape(Construction id)
{
    auto c4 = cycle_graph(4);
    switch (id) {
    case Construction::TrickyA6c: return {lookup("co-A1").graph, lookup("co-A6").graph, Mode::Delete, false};
    case Construction::TrickyA7c: return {lookup("co-A7").graph, lookup("co-A7").graph, Mode::Delete, false};
    case Construction::TrickyA8c: return {c4, lookup("co-A8").graph, Mode::Delete, false};
    case Construction::TrickyA9c: return {lookup("co-A9").graph, lookup("co-A9").graph, Mode::Delete, false};
    case Construction::TrickyA1cCom: return {c4, lookup("co-A1").graph, Mode::Complete, true};
    case Construction::TrickyA6cCom: return {c4, lookup("co-A6").graph, Mode::Complete, true};
    default: throw std::invalid_argument("not a tricky construction: " + to_string(id));
    }
}

namespace {

bool is_diamond(const SmallGraph& g) { return g.n() == 4 && g.edge_count() == 5; }

// Every induced co-A1 has a forbidden edge at a degree-2 vertex of its diamond.
std::string diamond_side_condition(const EditInstance& src, const SmallGraph& h)
{
    for (Mask copy : find_induced(src.g, h)) {
        bool guarded = false;
        for (Mask d = copy; d && !guarded; d = (d - 1) & copy) {
            if (popcount(d) != 4 || !is_diamond(induced_subgraph(src.g, d))) continue;
            for (int v : members(d)) {
                if (popcount(src.g.row(v) & d) != 2) continue;
                for (int w : members(src.g.row(v) & d))
                    if (src.forbidden.contains(v, w)) guarded = true;
            }
        }
        if (!guarded) return "a copy of the source graph has no forbidden diamond side edge";
    }
    return "";
}

// No 4-cycle subgraph, induced or not, made of allowed edges only.
std::string allowed_c4_condition(const EditInstance& src)
{
    const auto& g = src.g;
    auto ok = [&](int u, int v) { return g.adjacent(u, v) && !src.forbidden.contains(u, v); };
    for (int a = 0; a < g.n(); ++a)
        for (int b = 0; b < g.n(); ++b)
            for (int c = 0; c < g.n(); ++c)
                for (int d = 0; d < g.n(); ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (ok(a, b) && ok(b, c) && ok(c, d) && ok(d, a)) return "an all-allowed 4-cycle subgraph exists";
                }
    return "";
}

// Cycle order of an induced C4 given by its vertex mask.
std::array<int, 4> cycle_order(const SmallGraph& g, Mask m)
{
    auto vs = members(m);
    int a = vs[0];
    int b = lowest(g.row(a) & m);
    int d = lowest(g.row(a) & m & ~bit(b));
    int c = lowest(m & ~bit(a) & ~bit(b) & ~bit(d));
    return {a, b, c, d};
}

std::string c4_completion_conditions(const EditInstance& src)
{
    const auto& g = src.g;
    std::vector<Pair> allowed;
    for (auto [u, v] : nonedges(g))
        if (!src.forbidden.contains(u, v)) allowed.emplace_back(u, v);
    if (allowed.size() > 16) throw std::length_error("side-condition check is capped at 16 allowed nonedges");

    SmallGraph full = g;
    for (auto [u, v] : allowed) full.add_edge(u, v);
    for (auto [u, v] : src.forbidden.list())
        if (popcount(full.row(u) & full.row(v)) > 2) return "a forbidden nonedge has three common neighbours after completion";

    for (std::uint32_t s = 0; s < (std::uint32_t{1} << allowed.size()); ++s) {
        SmallGraph gs = g;
        for (std::size_t i = 0; i < allowed.size(); ++i)
            if ((s >> i) & 1) gs.add_edge(allowed[i].first, allowed[i].second);
        bool some_thin = false;  // an induced C4 with at most one added edge
        std::vector<std::array<int, 4>> wide;
        for (Mask m : find_induced(gs, cycle_graph(4))) {
            auto o = cycle_order(gs, m);
            bool added[4];
            int count = 0;
            for (int i = 0; i < 4; ++i) count += added[i] = !g.adjacent(o[i], o[(i + 1) % 4]);
            for (int i = 0; i < 4; ++i)
                if (added[i] && added[(i + 1) % 4]) return "two consecutive 4-cycle edges are both added";
            if (count <= 1) {
                some_thin = true;
                if (!src.forbidden.contains(o[0], o[2]) && !src.forbidden.contains(o[1], o[3]))
                    return "a 4-cycle with at most one added edge has no forbidden diagonal";
            } else {
                wide.push_back(o);
            }
        }
        if (!wide.empty() && !some_thin) return "a 4-cycle with two added edges has no thin companion";
    }
    return "";
}

}  // namespace

std::string tricky_side_condition(Construction id, const EditInstance& src)
{
    auto shape = tricky_shape(id);
    if (src.mode != shape.mode) return "source mode must be " + to_string(shape.mode);
    switch (id) {
    case Construction::TrickyA6c: return diamond_side_condition(src, shape.source_h);
    case Construction::TrickyA8c: return allowed_c4_condition(src);
    case Construction::TrickyA1cCom:
    case Construction::TrickyA6cCom: return c4_completion_conditions(src);
    default: return "";
    }
}

EditInstance tricky_reduction(Construction id, const EditInstance& src)
{
    validate(src);
    auto why = tricky_side_condition(id, src);
    if (!why.empty()) throw std::invalid_argument("side condition violated: " + why);
    const int k = src.k;
    const int n0 = src.g.n();
    std::vector<int> base(n0);
    std::iota(base.begin(), base.end(), 0);
    Builder b(src.g);
    EditInstance out;
    out.k = k;
    out.mode = src.mode;

    switch (id) {
    case Construction::TrickyA6c:
        for (auto [u, v] : src.forbidden.list()) {
            auto x = b.add(k + 1), y = b.add(k + 1), z = b.add(k + 1);
            b.join(u, x);
            b.join(u, y);
            b.join(u, z);
            b.join(v, y);
            b.join(v, z);
            for (int i = 0; i <= k; ++i) {
                b.edge(x[i], y[i]);
                b.edge(y[i], z[i]);
            }
        }
        break;
    case Construction::TrickyA7c:
    case Construction::TrickyA9c: {
        auto w = b.add(k);
        b.join(w, base);
        std::vector<int> clique;
        for (auto [u, v] : src.forbidden.list()) {
            auto x = b.add(k), y = b.add(k), z = b.add(k);
            b.join(u, x);
            b.join(v, y);
            b.join(w, x);
            b.join(w, y);
            for (int i = 0; i < k; ++i) {
                b.edge(x[i], z[i]);
                b.edge(y[i], z[i]);
            }
            if (id == Construction::TrickyA9c) {
                auto q = b.add(k);
                b.join(w, q);
                for (int i = 0; i < k; ++i) {
                    b.edge(x[i], q[i]);
                    b.edge(y[i], q[i]);
                }
            }
            clique.insert(clique.end(), x.begin(), x.end());
            clique.insert(clique.end(), y.begin(), y.end());
        }
        b.clique(clique);
        break;
    }
    case Construction::TrickyA8c:
        for (auto [u, v] : src.forbidden.list()) {
            auto x = b.add(k + 2), y = b.add(k + 2), z = b.add(k + 2);
            // v also sees X, so u, v and two X vertices close a 4-cycle
            b.join(u, x);
            b.join(v, x);
            b.join(v, y);
            b.join(v, z);
            for (int i = 0; i < k + 2; ++i) {
                b.edge(x[i], y[i]);
                b.edge(x[i], z[i]);
            }
        }
        break;
    case Construction::TrickyA1cCom:
    case Construction::TrickyA6cCom: {
        for (auto [x, y] : src.forbidden.list()) {
            Mask common = src.g.row(x) & src.g.row(y);
            if (!common) continue;
            int z = lowest(common);
            int v = b.add();
            b.edge(v, x);
            b.edge(v, y);
            b.edge(v, z);
            if (id == Construction::TrickyA6cCom) {
                int u = b.add();
                b.edge(u, v);
                b.edge(u, y);
            }
        }
        break;
    }
    default: throw std::invalid_argument("not a tricky construction: " + to_string(id));
    }

    out.g = b.build();
    if (tricky_shape(id).target_restricted) {
        out.forbidden = src.forbidden;
        // every nonedge touching a new vertex is forbidden
        for (int v = n0; v < out.g.n(); ++v)
            for (int w = 0; w < out.g.n(); ++w)
                if (w != v && !out.g.adjacent(v, w)) out.forbidden.insert(v, w);
    }
    return out;
}

}  // namespace hfree
