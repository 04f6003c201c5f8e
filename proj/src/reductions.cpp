#include "hfree/reductions.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "hfree/canon.hpp"
#include "hfree/catalogue.hpp"
#include "hfree/classifier.hpp"

namespace hfree {

namespace {

constexpr std::array<std::pair<Construction, const char*>, 13> kConstructionNames = {{
    {Construction::ConMain, "ConMain"},
    {Construction::ConMod, "ConMod"},
    {Construction::ConNearUni, "ConNearUni"},
    {Construction::DisjointClique, "DisjointClique"},
    {Construction::LargestComponent, "LargestComponent"},
    {Construction::ConCai, "ConCai"},
    {Construction::EnforcerAttach, "EnforcerAttach"},
    {Construction::TrickyA6c, "TrickyA6c"},
    {Construction::TrickyA7c, "TrickyA7c"},
    {Construction::TrickyA8c, "TrickyA8c"},
    {Construction::TrickyA9c, "TrickyA9c"},
    {Construction::TrickyA1cCom, "TrickyA1cCom"},
    {Construction::TrickyA6cCom, "TrickyA6cCom"},
}};

constexpr std::array<std::pair<Rule, const char*>, 12> kRuleNames = {{
    {Rule::Low, "low"},
    {Rule::High, "high"},
    {Rule::ModuleTrim, "module-trim"},
    {Rule::K23, "k23"},
    {Rule::NearUni, "near-uni"},
    {Rule::NearUniKtEuK1, "near-uni-kt-euk1"},
    {Rule::Path, "path"},
    {Rule::Cut, "cut"},
    {Rule::IsolatedVertex, "isolated-vertex"},
    {Rule::CliqueComponent, "clique-component"},
    {Rule::DegreeThreePair, "degree-three-pair"},
    {Rule::LargestComponent, "largest-component"},
}};

std::string lower(std::string_view s)
{
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

// Paths a - x1 - ... - b whose interior vertices all have degree 2, with at
// least one interior vertex. Vertex lists in walk order, deduplicated by set.
std::vector<std::vector<int>> degree_two_chains(const SmallGraph& h)
{
    std::vector<std::vector<int>> out;
    std::set<Mask> seen;
    for (int a = 0; a < h.n(); ++a)
        for (int x : members(h.row(a))) {
            if (h.degree(x) != 2) continue;
            std::vector<int> walk = {a, x};
            Mask used = bit(a) | bit(x);
            while (true) {
                int cur = walk.back();
                Mask nxt = h.row(cur) & ~bit(walk[walk.size() - 2]);
                if (!nxt) break;
                int y = lowest(nxt);
                if (used & bit(y)) break;
                walk.push_back(y);
                used |= bit(y);
                if (seen.insert(used).second) out.push_back(walk);
                if (h.degree(y) != 2) break;
            }
        }
    return out;
}

struct ChainChoice {
    std::vector<int> path;
    int longest_count = 0;
};

std::optional<ChainChoice> longest_chain(const SmallGraph& h)
{
    auto chains = degree_two_chains(h);
    if (chains.empty()) return std::nullopt;
    std::size_t best = 0;
    for (auto& c : chains) best = std::max(best, c.size());
    ChainChoice ch;
    for (auto& c : chains) {
        if (c.size() != best) continue;
        if (ch.longest_count++ == 0 || lex_less(mask_of(c), mask_of(ch.path))) ch.path = c;
    }
    return ch;
}

void tarjan_blocks(const SmallGraph& g, int v, int parent, int& timer, std::vector<int>& disc, std::vector<int>& low,
                   std::vector<Pair>& stack, std::vector<Mask>& blocks)
{
    disc[v] = low[v] = ++timer;
    for (int w : members(g.row(v))) {
        if (w == parent) continue;
        if (!disc[w]) {
            stack.emplace_back(v, w);
            tarjan_blocks(g, w, v, timer, disc, low, stack, blocks);
            low[v] = std::min(low[v], low[w]);
            if (low[w] >= disc[v]) {
                Mask b = 0;
                while (true) {
                    auto [a, c] = stack.back();
                    stack.pop_back();
                    b |= bit(a) | bit(c);
                    if (a == v && c == w) break;
                }
                blocks.push_back(b);
            }
        } else if (disc[w] < disc[v]) {
            stack.emplace_back(v, w);
            low[v] = std::min(low[v], disc[w]);
        }
    }
}

// Maximal 2-connected pieces (bridges count as blocks of two vertices).
std::vector<Mask> blocks(const SmallGraph& g)
{
    std::vector<int> disc(g.n(), 0), low(g.n(), 0);
    std::vector<Pair> stack;
    std::vector<Mask> out;
    int timer = 0;
    for (int v = 0; v < g.n(); ++v)
        if (!disc[v]) tarjan_blocks(g, v, -1, timer, disc, low, stack, out);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

Mask cut_vertices(const SmallGraph& g)
{
    Mask cuts = 0;
    const int base = static_cast<int>(components(g).size());
    for (int v = 0; v < g.n(); ++v)
        if (static_cast<int>(components(delete_vertices(g, bit(v))).size()) > base) cuts |= bit(v);
    return cuts;
}

struct LeafBlock {
    Mask block = 0;
    int cut = -1;
    int smallest_count = 0;
};

std::optional<LeafBlock> smallest_leaf_block(const SmallGraph& h)
{
    Mask cuts = cut_vertices(h);
    if (!cuts) return std::nullopt;
    LeafBlock lb;
    int best = kMaxVertices + 1;
    for (Mask b : blocks(h)) {
        if (popcount(b & cuts) != 1) continue;
        int s = popcount(b);
        if (s < best) {
            best = s;
            lb = {b, lowest(b & cuts), 1};
        } else if (s == best) {
            ++lb.smallest_count;
        }
    }
    if (lb.cut < 0) return std::nullopt;
    return lb;
}

std::vector<Pair> degree_three_pairs(const SmallGraph& h)
{
    std::vector<Pair> out;
    for (auto [u, v] : edges(h))
        if (h.degree(u) == 3 && h.degree(v) == 3) out.emplace_back(u, v);
    return out;
}

Mask isolated(const SmallGraph& h)
{
    Mask m = 0;
    for (int v = 0; v < h.n(); ++v)
        if (!h.row(v)) m |= bit(v);
    return m;
}

bool is_kt_minus_e_plus_k1(const SmallGraph& h, int* t_out = nullptr)
{
    const int t = h.n() - 1;
    if (t < 2) return false;
    SmallGraph want = complete_graph(t);
    want.remove_edge(0, 1);
    if (!is_isomorphic(h, disjoint_union(want, empty_graph(1)))) return false;
    if (t_out) *t_out = t;
    return true;
}

Mask largest_component(const SmallGraph& h)
{
    Mask best = 0;
    for (Mask c : components(h))
        if (popcount(c) > popcount(best)) best = c;
    return best;
}

bool independent(const SmallGraph& g, Mask s)
{
    for (Mask r = s; r; r &= r - 1)
        if (g.row(lowest(r)) & s) return false;
    return true;
}

bool is_clique_on(const SmallGraph& g, Mask s)
{
    for (Mask r = s; r; r &= r - 1) {
        int v = lowest(r);
        if ((g.row(v) & s) != (s & ~bit(v))) return false;
    }
    return true;
}

// Some independent S, |S| = s >= 2, with every degree >= h - s + 1.
bool heavy_independent_set(const SmallGraph& g, int hmax)
{
    bool found = false;
    std::function<void(int, Mask)> grow = [&](int from, Mask s) {
        if (found) return;
        int sz = popcount(s);
        if (sz >= 2) {
            bool ok = true;
            for (int v : members(s))
                if (g.degree(v) < hmax - sz + 1) ok = false;
            if (ok) {
                found = true;
                return;
            }
        }
        for (int v = from; v < g.n(); ++v)
            if (!(g.row(v) & s)) grow(v + 1, s | bit(v));
    };
    grow(0, 0);
    return found;
}

std::string name_or_graph6(const SmallGraph& g)
{
    auto n = name_of(g);
    return n.empty() ? to_graph6(g) : n;
}

void check_cap(long long n)
{
    if (n > kMaxVertices)
        throw std::length_error("construction would produce " + std::to_string(n) + " vertices, above the 64-vertex cap");
}

long long falling(long long n, long long r)
{
    if (r > n) return 0;
    long long out = 1;
    for (long long i = 0; i < r; ++i) {
        out *= n - i;
        if (out > (1LL << 40)) return out;
    }
    return out;
}

long long binom(long long n, long long r)
{
    if (r < 0 || r > n) return 0;
    long long out = 1;
    for (long long i = 0; i < r; ++i) {
        out = out * (n - i) / (i + 1);
        if (out > (1LL << 40)) return out;
    }
    return out;
}

void for_each_subset(int n, int t, const std::function<void(Mask)>& f)
{
    if (t < 0 || t > n) return;
    std::function<void(int, int, Mask)> rec = [&](int from, int left, Mask s) {
        if (left == 0) {
            f(s);
            return;
        }
        for (int v = from; v <= n - left; ++v) rec(v + 1, left - 1, s | bit(v));
    };
    rec(0, t, 0);
}

}  // namespace

std::string to_string(Construction c)
{
    for (auto [k, v] : kConstructionNames)
        if (k == c) return v;
    return "?";
}

std::optional<Construction> construction_from_string(std::string_view s)
{
    for (auto [k, v] : kConstructionNames)
        if (lower(v) == lower(s)) return k;
    return std::nullopt;
}

std::string to_string(Rule r)
{
    for (auto [k, v] : kRuleNames)
        if (k == r) return v;
    return "?";
}

std::optional<Rule> rule_from_string(std::string_view s)
{
    for (auto [k, v] : kRuleNames)
        if (v == lower(s)) return k;
    return std::nullopt;
}

std::optional<RuleApplication> apply_rule(Rule r, const SmallGraph& h)
{
    auto dp = degree_partition(h);
    RuleApplication app{r, Construction::ConMain, {}, 0, 0};
    auto finish = [&](Mask kept) {
        app.kept = kept;
        app.target = induced_subgraph(h, kept);
        return std::optional<RuleApplication>(app);
    };
    switch (r) {
    case Rule::Low:
        if (!dp) return std::nullopt;
        return finish(h.all() & ~dp->v_low);
    case Rule::High:
        if (!dp) return std::nullopt;
        return finish(h.all() & ~dp->v_high);
    case Rule::ModuleTrim:
    case Rule::K23: {
        if (!dp) return std::nullopt;
        Mask drop = 0;
        for (Mask m : modular_partition(h))
            if ((m & dp->v_low) == m) drop |= bit(lowest(m));
        app.construction = Construction::ConMod;
        app.param = dp->ell;
        return finish(h.all() & ~drop);
    }
    case Rule::NearUni:
        if (!dp) return std::nullopt;
        app.construction = Construction::ConNearUni;
        app.param = dp->h_star;
        return finish(h.all() & ~bit(lowest(dp->v_high)));
    case Rule::NearUniKtEuK1: {
        if (!is_kt_minus_e_plus_k1(h)) return std::nullopt;
        Mask drop = 0;
        const int t = h.n() - 1;
        for (int v = 0; v < h.n(); ++v)
            if (h.degree(v) == t - 2) drop |= bit(v);
        app.construction = Construction::ConNearUni;
        app.param = 1;
        return finish(h.all() & ~drop);
    }
    case Rule::Path: {
        auto ch = longest_chain(h);
        if (!ch) return std::nullopt;
        Mask interior = mask_of(std::vector<int>(ch->path.begin() + 1, ch->path.end() - 1));
        return finish(h.all() & ~interior);
    }
    case Rule::Cut: {
        auto lb = smallest_leaf_block(h);
        if (!lb) return std::nullopt;
        return finish(h.all() & ~(lb->block & ~bit(lb->cut)));
    }
    case Rule::IsolatedVertex: {
        Mask iso = isolated(h);
        if (!iso) return std::nullopt;
        app.construction = Construction::DisjointClique;
        return finish(h.all() & ~bit(lowest(iso)));
    }
    case Rule::CliqueComponent:
        if (!dp) return std::nullopt;
        return finish(h.all() & ~bit(lowest(dp->v_low)));
    case Rule::DegreeThreePair: {
        auto prs = degree_three_pairs(h);
        if (prs.empty()) return std::nullopt;
        return finish(h.all() & ~(bit(prs[0].first) | bit(prs[0].second)));
    }
    case Rule::LargestComponent: {
        if (is_connected(h)) return std::nullopt;
        app.construction = Construction::LargestComponent;
        return finish(largest_component(h));
    }
    }
    return std::nullopt;
}

bool PreconditionReport::ok() const
{
    return std::all_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.holds; });
}

std::string PreconditionReport::failed() const
{
    std::string out;
    for (auto& c : conditions)
        if (!c.holds) out += (out.empty() ? "" : "; ") + c.name;
    return out;
}

PreconditionReport check_preconditions(Rule r, const SmallGraph& h)
{
    PreconditionReport rep;
    auto add = [&](std::string name, bool holds) { rep.conditions.push_back({std::move(name), holds}); };
    auto dp = degree_partition(h);
    switch (r) {
    case Rule::Low:
    case Rule::High:
        add("non-regular", dp.has_value());
        break;
    case Rule::ModuleTrim: {
        add("non-regular", dp.has_value());
        if (!dp) break;
        add("1 <= ell <= 2 and n >= 5", dp->ell >= 1 && dp->ell <= 2 && h.n() >= 5);
        add("V_low independent", independent(h, dp->v_low));
        add("V_high u V_mid connected", is_connected_on(h, dp->v_high | dp->v_mid));
        bool touch = true;
        for (int v : members(dp->v_high))
            if (!(h.row(v) & dp->v_low)) touch = false;
        add("every V_high vertex sees V_low", touch);
        bool outside = true, no_twins = true;
        for (int v : members(dp->v_mid)) {
            if (popcount(h.row(v) & ~dp->v_mid) < dp->ell + 1) outside = false;
            for (int w : members(h.row(v) & dp->v_mid))
                if ((h.row(v) & ~bit(w)) == (h.row(w) & ~bit(v))) no_twins = false;
        }
        add("V_mid has ell+1 outside neighbours or no adjacent twins", outside || no_twins);
        bool split = true;
        for (Mask m : modular_partition(h))
            if ((m & dp->v_low) && (m & ~dp->v_low)) split = false;
        add("no module mixes V_low with the rest", split);
        break;
    }
    case Rule::K23:
        add("h is K_{2,3}", is_isomorphic(h, complete_bipartite(2, 3)));
        break;
    case Rule::NearUni: {
        add("non-regular", dp.has_value());
        if (!dp) break;
        add("V_high is a clique", is_clique_on(h, dp->v_high));
        bool same = true;
        auto first = delete_vertices(h, bit(lowest(dp->v_high)));
        for (int v : members(dp->v_high))
            if (!is_isomorphic(first, delete_vertices(h, bit(v)))) same = false;
        add("h - u isomorphic for all u in V_high", same);
        add("no heavy independent set", !heavy_independent_set(h, dp->h));
        break;
    }
    case Rule::NearUniKtEuK1: {
        int t = 0;
        bool shape = is_kt_minus_e_plus_k1(h, &t);
        add("h is (K_t - e) u K_1", shape);
        add("t >= 6", shape && t >= 6);
        break;
    }
    case Rule::Path: {
        int mindeg = h.n();
        for (int v = 0; v < h.n(); ++v) mindeg = std::min(mindeg, h.degree(v));
        add("minimum degree 2", mindeg >= 2);
        auto ch = longest_chain(h);
        add("degree-2 chain exists", ch.has_value());
        add("longest chain unique", ch && ch->longest_count == 1);
        break;
    }
    case Rule::Cut: {
        add("connected", is_connected(h));
        add("connectivity 1, not complete", is_connected(h) && vertex_connectivity(h) == 1 && !is_complete(h));
        auto lb = smallest_leaf_block(h);
        add("unique smallest leaf block", lb && lb->smallest_count == 1);
        break;
    }
    case Rule::IsolatedVertex: {
        Mask iso = isolated(h);
        add("at least two isolated vertices", popcount(iso) >= 2);
        bool clique_comp = false;
        for (Mask c : components(delete_vertices(h, iso)))
            if (is_clique_on(induced_subgraph(h, h.all() & ~iso), c)) clique_comp = true;
        add("rest has no clique component", !clique_comp);
        break;
    }
    case Rule::CliqueComponent: {
        add("non-regular", dp.has_value());
        if (!dp) break;
        add("V_low induces a clique", is_clique_on(h, dp->v_low));
        bool comp = false;
        for (Mask c : components(h))
            if (c == dp->v_low) comp = true;
        add("V_low is a component", comp);
        break;
    }
    case Rule::DegreeThreePair:
        add("unique adjacent degree-3 pair", degree_three_pairs(h).size() == 1);
        break;
    case Rule::LargestComponent:
        add("disconnected", !is_connected(h));
        break;
    }
    return rep;
}

std::optional<ReductionStep> make_step(Rule r, const SmallGraph& h, bool via_complement)
{
    SmallGraph side = via_complement ? complement(h) : h;
    auto app = apply_rule(r, side);
    if (!app) return std::nullopt;
    ReductionStep s;
    s.rule = r;
    s.construction = app->construction;
    s.via_complement = via_complement;
    s.from = h;
    s.to = via_complement ? complement(app->target) : app->target;
    s.from_name = name_or_graph6(s.from);
    s.to_name = name_or_graph6(s.to);
    s.kept = app->kept;
    s.param = app->param;
    return s;
}

bool chain_terminal(const SmallGraph& g)
{
    if (in_XD(g)) return true;
    auto w = membership_W(g);
    return w && in_W_prime(*w);
}

namespace {

using Entry = std::vector<std::pair<Rule, bool>>;

const std::map<std::string, Entry>& chain_table()
{
    static const std::map<std::string, Entry> t = [] {
        std::map<std::string, Entry> m;
        for (int i : {7, 8, 10, 11, 12, 13, 18, 19, 21, 23, 24, 25, 26, 28, 29, 30})
            m["S" + std::to_string(i)] = {{Rule::ModuleTrim, false}};
        for (int i : {14, 32, 33, 34, 36}) m["S" + std::to_string(i)] = {{Rule::ModuleTrim, true}};
        m["S1"] = {{Rule::K23, false}};
        m["S2"] = m["S3"] = {{Rule::NearUni, false}};
        m["S16"] = m["S17"] = {{Rule::NearUni, false}, {Rule::Low, false}};
        m["S31"] = {{Rule::NearUni, false}, {Rule::Low, false}, {Rule::High, false}};
        m["S4"] = m["S6"] = {{Rule::IsolatedVertex, false}};
        m["S5"] = m["S9"] = m["S22"] = {{Rule::Path, false}};
        m["S15"] = {{Rule::Path, false}, {Rule::High, false}};
        m["S20"] = m["S27"] = {{Rule::Cut, false}};
        m["S35"] = {{Rule::DegreeThreePair, false}};
        m["F1"] = {{Rule::CliqueComponent, true}};
        m["F2"] = m["F3"] = m["F4"] = {{Rule::ModuleTrim, false}};
        m["F5"] = {{Rule::IsolatedVertex, true}};
        m["F6"] = {{Rule::CliqueComponent, true}};
        m["F7"] = {{Rule::LargestComponent, false}};
        m["F8"] = {{Rule::NearUniKtEuK1, true}};
        m["F9"] = m["F10"] = {{Rule::Path, false}};
        return m;
    }();
    return t;
}

}  // namespace

std::vector<ReductionStep> derive_chain(const SmallGraph& h)
{
    std::vector<ReductionStep> chain;
    std::set<CanonicalForm> seen;
    SmallGraph cur = h;
    while (!chain_terminal(cur)) {
        if (!seen.insert(canonical_form(cur)).second)
            throw std::logic_error("chain table cycles at " + to_graph6(cur));
        auto w = membership_W(cur);
        if (!w) throw std::invalid_argument("graph " + to_graph6(cur) + " is not in the catalogue union");
        Entry entry;
        if ((w->constituent == "B" || w->constituent == "D") && w->complement) {
            entry = {{Rule::Low, false}};
        } else {
            auto it = chain_table().find(w->id);
            if (it == chain_table().end()) throw std::invalid_argument("no chain entry for " + w->describe());
            entry = it->second;
            for (auto& [rule, side] : entry) side = side != w->complement;
        }
        for (auto [rule, side] : entry) {
            auto st = make_step(rule, cur, side);
            if (!st) throw std::logic_error("rule " + to_string(rule) + " does not apply to " + to_graph6(cur));
            chain.push_back(*st);
            cur = st->to;
        }
        auto [last_rule, last_side] = entry.back();
        while (last_rule == Rule::IsolatedVertex && !chain_terminal(cur) && !membership_W(cur)) {
            auto st = make_step(last_rule, cur, last_side);
            if (!st) break;
            chain.push_back(*st);
            cur = st->to;
        }
    }
    return chain;
}

long long con_main_size(int n_gprime, int k, int n_h, int n_kept)
{
    return n_gprime + falling(n_gprime, n_kept) * (k + 1) * (n_h - n_kept);
}

SmallGraph con_main(const SmallGraph& gprime, int k, const SmallGraph& h, Mask vprime)
{
    if (vprime & ~h.all()) throw std::invalid_argument("con_main: vprime is not a subset of V(h)");
    if (k < 0) throw std::invalid_argument("con_main: negative budget");
    const auto kept = members(vprime);
    const auto extra = members(h.all() & ~vprime);
    const int n0 = gprime.n();
    check_cap(con_main_size(n0, k, h.n(), static_cast<int>(kept.size())));
    long long total = con_main_size(n0, k, h.n(), static_cast<int>(kept.size()));
    SmallGraph g(static_cast<int>(total));
    for (auto [u, v] : edges(gprime)) g.add_edge(u, v);
    if (extra.empty()) return g;
    int next = n0;
    std::vector<int> f(kept.size());
    std::vector<int> image(h.n(), -1);
    Mask used = 0;
    std::function<void(std::size_t)> place = [&](std::size_t i) {
        if (i == kept.size()) {
            for (int copy = 0; copy <= k; ++copy) {
                for (std::size_t j = 0; j < kept.size(); ++j) image[kept[j]] = f[j];
                for (int x : extra) image[x] = next++;
                for (int x : extra)
                    for (int y : members(h.row(x)))
                        if ((bit(y) & vprime) || y < x) g.add_edge(image[x], image[y]);
            }
            return;
        }
        for (int v = 0; v < n0; ++v) {
            if (used & bit(v)) continue;
            used |= bit(v);
            f[i] = v;
            place(i + 1);
            used &= ~bit(v);
        }
    };
    place(0);
    return g;
}

SmallGraph con_mod(const SmallGraph& gprime, int k, int ell)
{
    if (ell < 1) throw std::invalid_argument("con_mod: ell must be at least 1");
    const int n0 = gprime.n();
    check_cap(n0 + binom(n0, ell) * (k + 1));
    SmallGraph g(static_cast<int>(n0 + binom(n0, ell) * (k + 1)));
    for (auto [u, v] : edges(gprime)) g.add_edge(u, v);
    int next = n0;
    for_each_subset(n0, ell, [&](Mask s) {
        for (int i = 0; i <= k; ++i) {
            for (int j = 0; j < i; ++j) g.add_edge(next + i, next + j);
            for (int v : members(s)) g.add_edge(next + i, v);
        }
        next += k + 1;
    });
    return g;
}

SmallGraph con_near_uni(const SmallGraph& gprime, int k, int t)
{
    if (t < 0) throw std::invalid_argument("con_near_uni: t must be non-negative");
    const int n0 = gprime.n();
    check_cap(n0 + binom(n0, t) * (k + 2));
    SmallGraph g(static_cast<int>(n0 + binom(n0, t) * (k + 2)));
    for (auto [u, v] : edges(gprime)) g.add_edge(u, v);
    int next = n0;
    for_each_subset(n0, t, [&](Mask s) {
        for (int i = 0; i < k + 2; ++i)
            for (int v : members(gprime.all() & ~s)) g.add_edge(next + i, v);
        next += k + 2;
    });
    return g;
}

SmallGraph disjoint_clique(const SmallGraph& gprime, int k)
{
    check_cap(gprime.n() + k + 1LL);
    return disjoint_union(gprime, complete_graph(k + 1));
}

EditInstance largest_component_reduction(const EditInstance& target, const SmallGraph& h)
{
    if (is_connected(h)) throw std::invalid_argument("largest_component_reduction: h must be disconnected");
    if (!target.forbidden.empty()) throw std::invalid_argument("largest_component_reduction: unrestricted input expected");
    Mask big = largest_component(h);
    SmallGraph comp = induced_subgraph(h, big);
    Mask copies = 0;
    for (Mask c : components(h))
        if (popcount(c) == popcount(big) && is_isomorphic(induced_subgraph(h, c), comp)) copies |= c;
    const int c = popcount(copies) / popcount(big);
    SmallGraph block = comp;
    for (int i = 0; i < target.k; ++i) block = join(block, comp);
    check_cap(target.g.n() + static_cast<long long>(c - 1) * block.n());
    SmallGraph mid = target.g;
    for (int i = 1; i < c; ++i) mid = disjoint_union(mid, block);
    return {con_main(mid, target.k, h, copies), target.k, target.mode, {}};
}

EditInstance execute_step(const ReductionStep& step, const EditInstance& target)
{
    if (!target.forbidden.empty()) throw std::invalid_argument("execute_step: restricted instances are not supported");
    EditInstance in = target;
    SmallGraph h = step.from;
    if (step.via_complement) {
        in.g = complement(in.g);
        in.mode = complement_mode(in.mode);
        h = complement(h);
    }
    EditInstance out{{}, in.k, in.mode, {}};
    switch (step.construction) {
    case Construction::ConMain: out.g = con_main(in.g, in.k, h, step.kept); break;
    case Construction::ConMod: out.g = con_mod(in.g, in.k, step.param); break;
    case Construction::ConNearUni: out.g = con_near_uni(in.g, in.k, step.param); break;
    case Construction::DisjointClique: out.g = disjoint_clique(in.g, in.k); break;
    case Construction::LargestComponent: out = largest_component_reduction(in, h); break;
    default: throw std::invalid_argument("execute_step: construction " + to_string(step.construction) + " is not a pattern step");
    }
    if (step.via_complement) {
        out.g = complement(out.g);
        out.mode = complement_mode(out.mode);
    }
    return out;
}

}  // namespace hfree
