#include "hfree/gadgets.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hfree/catalogue.hpp"
#include "hfree/enumeration.hpp"

namespace hfree {

std::string to_string(GadgetRole r)
{
    switch (r) {
    case GadgetRole::SComponent: return "s-component";
    case GadgetRole::BasicUnit: return "basic-unit";
    case GadgetRole::Enforcer: return "enforcer";
    }
    return "?";
}

namespace {

std::size_t pair_count(GadgetRole r)
{
    switch (r) {
    case GadgetRole::SComponent: return 3;
    case GadgetRole::BasicUnit: return 2;
    case GadgetRole::Enforcer: return 1;
    }
    return 0;
}

void modify(SmallGraph& g, Pair p, Mode m) { g.set_edge(p.first, p.second, m == Mode::Complete); }
void modify(BigGraph& g, Pair p, Mode m, bool on)
{
    // on: the pair is modified; off: restored
    bool edge = (m == Mode::Complete) == on;
    g.set_edge(p.first, p.second, edge);
}

std::string pair_text(Pair p) { return std::to_string(p.first) + "-" + std::to_string(p.second); }

}  // namespace

Gadget make_gadget(const SmallGraph& graph, GadgetRole role, Mode mode, std::vector<Pair> allowed, const SmallGraph& h)
{
    if (mode == Mode::Edit) throw std::invalid_argument("gadget mode must be delete or complete");
    if (allowed.size() != pair_count(role))
        throw std::invalid_argument(to_string(role) + " needs " + std::to_string(pair_count(role)) + " pairs");
    std::set<Pair> seen;
    for (auto& [u, v] : allowed) {
        if (u == v || u < 0 || v < 0 || u >= graph.n() || v >= graph.n())
            throw std::invalid_argument("pair " + pair_text({u, v}) + " out of range");
        if (graph.adjacent(u, v) != (mode == Mode::Delete))
            throw std::invalid_argument("pair " + pair_text({u, v}) + (mode == Mode::Delete ? " is not an edge" : " is an edge"));
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second) throw std::invalid_argument("repeated pair");
    }
    Gadget g;
    g.graph = graph;
    g.role = role;
    g.mode = mode;
    g.allowed = std::move(allowed);
    g.h = h;
    return g;
}

Gadget make_gadget(const SmallGraph& graph, GadgetRole role, Mode mode, std::vector<Pair> allowed, const std::string& h_id)
{
    auto g = make_gadget(graph, role, mode, std::move(allowed), lookup(h_id).graph);
    g.h_id = h_id;
    return g;
}

bool check_propagational(const PropTable& t)
{
    return !t.at(1, 0, 0) && t.at(0, 0, 0) && t.at(1, 0, 1) && t.at(1, 1, 0) && t.at(1, 1, 1);
}

SComponentReport verify_s_component(const Gadget& g)
{
    if (g.role != GadgetRole::SComponent) throw std::invalid_argument("not an s-component");
    SComponentReport r;
    for (int s = 0; s < 8; ++s) {
        SmallGraph m = g.graph;
        for (int i = 0; i < 3; ++i)
            if ((s >> (2 - i)) & 1) modify(m, g.allowed[i], g.mode);
        r.table.f[s] = !contains_induced(m, g.h);
    }
    if (!r.table.at(0, 0, 0))
        r.error = "not h-free";
    else if (!check_propagational(r.table))
        r.error = "not propagational";
    r.ok = r.error.empty();
    return r;
}

std::optional<Gadget> generic_s_component(const SmallGraph& h, Mode mode)
{
    auto xs = mode == Mode::Delete ? nonedges(h) : edges(h);
    auto ys = mode == Mode::Delete ? edges(h) : nonedges(h);
    if (xs.empty() || ys.size() < 2) return std::nullopt;
    SmallGraph g = h;
    g.flip(xs[0].first, xs[0].second);
    return make_gadget(g, GadgetRole::SComponent, mode, {xs[0], ys[0], ys[1]}, h);
}

TruthSetting build_truth_setting(const Gadget& unit, bool flipped)
{
    if (unit.role != GadgetRole::BasicUnit) throw std::invalid_argument("not a basic unit");
    auto [ep, e] = std::pair{unit.allowed[0], unit.allowed[1]};
    if (ep.first == e.first || ep.first == e.second || ep.second == e.first || ep.second == e.second)
        throw std::invalid_argument("unit pairs share a vertex");
    const int p = unit.h.n();
    if (p < 2) throw std::invalid_argument("chain needs p >= 2");
    const int m = 3 * p;

    TruthSetting tc;
    tc.mode = unit.mode;
    tc.h = unit.h;
    tc.p = p;
    tc.flipped = flipped;
    std::vector<Pair> junction(m);
    for (auto& j : junction) j = {tc.graph.add_vertex(), tc.graph.add_vertex()};
    for (int i = 0; i < m; ++i) {
        std::vector<int> place(unit.graph.n(), -1);
        place[ep.first] = junction[i].first;
        place[ep.second] = junction[i].second;
        auto nx = junction[(i + 1) % m];
        place[e.first] = flipped ? nx.second : nx.first;
        place[e.second] = flipped ? nx.first : nx.second;
        for (auto& v : place)
            if (v < 0) v = tc.graph.add_vertex();
        for (auto [u, v] : edges(unit.graph)) tc.graph.add_edge(place[u], place[v]);
    }
    tc.allowed = junction;
    tc.variable = {0, p, 2 * p};
    return tc;
}

namespace {

bool copy_near(const BigGraph& g, const SmallGraph& h, const std::vector<Pair>& pairs, std::uint64_t set)
{
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((set >> i) & 1)
            if (find_copy_through(g, h, pairs[i].first)) return true;
    return false;
}

std::string set_text(const std::vector<Pair>& pairs, std::uint64_t set)
{
    std::string s;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((set >> i) & 1) s += (s.empty() ? "" : " ") + pair_text(pairs[i]);
    return s;
}

}  // namespace

TruthSettingReport verify_truth_setting(const TruthSetting& tc, int exhaustive_limit)
{
    if (exhaustive_limit > 21) throw std::length_error("exhaustive truth-setting check is capped at 21 pairs");
    TruthSettingReport r;
    const int m = static_cast<int>(tc.allowed.size());
    BigGraph g = tc.graph;
    const std::uint64_t full = (std::uint64_t{1} << m) - 1;

    if (contains_induced(g, tc.h)) {
        r.error = "h-free check failed for the empty set";
        return r;
    }
    for (auto p : tc.allowed) modify(g, p, tc.mode, true);
    if (contains_induced(g, tc.h)) {
        r.error = "h-free check failed for the full set";
        return r;
    }
    for (auto p : tc.allowed) modify(g, p, tc.mode, false);
    r.subsets = 2;

    if (m <= exhaustive_limit) {
        r.exhaustive = true;
        std::uint64_t state = 0;
        for (std::uint64_t j = 1; j <= full; ++j) {
            int b = std::countr_zero(j);
            state ^= std::uint64_t{1} << b;
            modify(g, tc.allowed[b], tc.mode, (state >> b) & 1);
            if (state == full) continue;
            ++r.subsets;
            if (!copy_near(g, tc.h, tc.allowed, state)) {
                r.error = "h-free after modifying {" + set_text(tc.allowed, state) + "}";
                return r;
            }
        }
    } else {
        for (int start = 0; start < m; ++start)
            for (int len = 1; len < m; ++len) {
                std::uint64_t set = 0;
                for (int t = 0; t < len; ++t) set |= std::uint64_t{1} << ((start + t) % m);
                for (int i = 0; i < m; ++i)
                    if ((set >> i) & 1) modify(g, tc.allowed[i], tc.mode, true);
                bool hit = copy_near(g, tc.h, tc.allowed, set);
                for (int i = 0; i < m; ++i)
                    if ((set >> i) & 1) modify(g, tc.allowed[i], tc.mode, false);
                ++r.subsets;
                if (!hit) {
                    r.error = "h-free after modifying arc {" + set_text(tc.allowed, set) + "}";
                    return r;
                }
            }
    }
    r.ok = true;
    return r;
}

BasicUnitReport verify_basic_unit(const Gadget& unit, int exhaustive_limit)
{
    BasicUnitReport r;
    bool pattern[4];
    for (int s = 0; s < 4; ++s) {
        SmallGraph g = unit.graph;
        if (s & 1) modify(g, unit.allowed[0], unit.mode);
        if (s & 2) modify(g, unit.allowed[1], unit.mode);
        pattern[s] = !contains_induced(g, unit.h);
    }
    // a single modification of the trigger pair re-creates h
    r.unit_ok = pattern[0] && pattern[3] && (!pattern[1] || !pattern[2]);
    r.trigger = !pattern[1] && !pattern[2] ? "both" : !pattern[1] ? "e'" : "e";
    if (!r.unit_ok) {
        r.error = "unit does not force its second pair";
        return r;
    }
    for (bool flipped : {false, true}) {
        auto ring = verify_truth_setting(build_truth_setting(unit, flipped), exhaustive_limit);
        if (ring.ok || !flipped) {
            r.ring = ring;
            r.flipped = flipped;
        }
        if (ring.ok) {
            r.ok = true;
            return r;
        }
    }
    r.error = r.ring.error;
    r.flipped = false;
    return r;
}

namespace {

// Whether h[c + {u, v}] embeds induced in x with {u, v} onto {a, b}.
bool embeds_on_pair(const SmallGraph& h, Mask c, int u, int v, const SmallGraph& x, int a, int b)
{
    Mask part = c | bit(u) | bit(v);
    auto piece = induced_subgraph(h, part);
    auto vs = members(part);
    int pu = static_cast<int>(std::find(vs.begin(), vs.end(), u) - vs.begin());
    int pv = static_cast<int>(std::find(vs.begin(), vs.end(), v) - vs.begin());
    for (Mask copy : find_induced(x, piece)) {
        if (!(copy & bit(a)) || !(copy & bit(b))) continue;
        // test every labelled embedding of the piece on this vertex set
        auto img = members(copy);
        std::vector<int> perm(img.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
        do {
            bool ok = true;
            for (std::size_t i = 0; i < perm.size() && ok; ++i)
                for (std::size_t j = i + 1; j < perm.size() && ok; ++j)
                    ok = piece.adjacent(static_cast<int>(i), static_cast<int>(j)) == x.adjacent(img[perm[i]], img[perm[j]]);
            if (!ok) continue;
            int iu = img[perm[pu]], iv = img[perm[pv]];
            if ((iu == a && iv == b) || (iu == b && iv == a)) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return false;
}

bool layer_structural(const Gadget& g, EnforcerReport& r)
{
    const auto& h = g.h;
    if (!is_k_connected(h, 2)) {
        r.structural_rule = "h is not 2-connected";
        return false;
    }
    const bool want_edge = g.mode == Mode::Delete;
    auto [a, b] = g.allowed[0];
    bool x_common = (g.graph.row(a) & g.graph.row(b)) != 0;

    int separators = 0;
    bool all_common = true, all_blocked = true;
    for (int u = 0; u < h.n(); ++u)
        for (int v = u + 1; v < h.n(); ++v) {
            if (h.adjacent(u, v) != want_edge) continue;
            Mask rest = h.all() & ~bit(u) & ~bit(v);
            auto comps = components(induced_subgraph(h, rest));
            if (comps.size() < 2) continue;
            ++separators;
            auto vs = members(rest);
            for (Mask cm : comps) {
                Mask c = 0;
                for (int i : members(cm)) c |= bit(vs[i]);
                if (!(h.row(u) & h.row(v) & c)) all_common = false;
                if (embeds_on_pair(h, c, u, v, g.graph, a, b)) all_blocked = false;
            }
        }
    if (separators == 0) {
        r.structural_rule = "no-separator";
        return true;
    }
    if (all_common && !x_common) {
        r.structural_rule = "common-neighbour";
        return true;
    }
    if (all_blocked) {
        r.structural_rule = "per-component";
        return true;
    }
    r.structural_rule = "a separator component embeds at the distinguished pair";
    return false;
}

}  // namespace

EnforcerReport verify_enforcer(const Gadget& g, int n_host, bool run_falsification)
{
    if (g.role != GadgetRole::Enforcer) throw std::invalid_argument("not an enforcer");
    EnforcerReport r;
    r.n_host = n_host;
    auto [a, b] = g.allowed[0];
    SmallGraph flipped = g.graph;
    modify(flipped, g.allowed[0], g.mode);
    r.exact = !contains_induced(g.graph, g.h) && contains_induced(flipped, g.h);
    r.structural = layer_structural(g, r);
    if (!run_falsification) return r;

    const int nx = g.graph.n();
    const bool want_edge = g.mode == Mode::Delete;
    r.falsification = true;
    for (int n = 2; n <= n_host && r.falsification; ++n) {
        for (const auto& host : enumerate_graphs(n)) {
            for (int x = 0; x < n && r.falsification; ++x)
                for (int y = 0; y < n && r.falsification; ++y) {
                    if (x == y || host.adjacent(x, y) != want_edge) continue;
                    // x receives a, y receives b; both orders are covered by (x, y) and (y, x)
                    std::vector<int> place(nx, -1);
                    place[a] = x;
                    place[b] = y;
                    int next = n;
                    for (auto& p : place)
                        if (p < 0) p = next++;
                    SmallGraph glued(next);
                    for (auto [u, v] : edges(host)) glued.add_edge(u, v);
                    for (auto [u, v] : edges(g.graph)) glued.add_edge(place[u], place[v]);
                    Mask host_side = low_bits(n), x_side = 0;
                    for (int p : place) x_side |= bit(p);
                    ++r.attachments;
                    for (Mask c : find_induced(glued, g.h)) {
                        if ((c & ~host_side) == 0 || (c & ~x_side) == 0) continue;
                        r.falsification = false;
                        r.counterexample = "host " + to_graph6(host) + " pair " + pair_text({x, y});
                        break;
                    }
                }
            if (!r.falsification) break;
        }
    }
    return r;
}

namespace {

// <h> <cell> <graph6> <pairs>; S pairs are x y z, unit pairs e' e.
constexpr const char* kRows = R"(co-A1 SD D}k 1-0 2-4 4-3
co-A1 BD D}k 1-0 2-4
co-A1 ED D^k 2-3
co-A1 EC DUk 1-2
co-A2 SD EjVg 3-1 1-0 4-5
co-A2 BD EjVg 3-1 4-5
co-A2 ED ElVg 0-3
co-A2 SC EHVg 1-0 3-1 3-5
co-A2 BC EhV_ 4-5 3-1
co-A2 EC EgVg 2-3
A3 SD ElFG 0-3 2-1 3-2
A3 BD ElFG 0-3 1-2
A3 ED ElFG 0-3
A3 EC E`FG 1-2
co-A3 SD Eldg 2-5 3-4 2-3
co-A3 BD Eldg 2-5 3-4
co-A3 ED Eldg 2-5
A4 SD GxkL[c 7-3 1-2 6-5
A4 BD GxkL[c 7-3 6-5
A4 ED GxkL[c 3-7
A4 EC GXkL[C 0-1
A5 SD HnFWMlH 8-4 2-3 7-6
A5 BD HnFWMlH 8-4 7-6
A5 ED HnFWMlH 4-8
A5 EC HfFWMl@ 1-2
co-A6 EC ETFW 2-1
co-A7 SD EnFW 3-0 3-4 3-2
co-A7 BD EnFW 3-0 1-2
co-A7 SC EjBW 4-3 0-2 0-4
co-A7 BC EbFW 1-2 3-0
co-A7 EC EjBW 3-4
co-A8 SC EWFg 2-3 0-1 1-3
co-A8 BC EWFg 2-3 0-1
co-A8 EC EXBg 4-3
co-A9 SD FnFYW 4-6 2-1 2-3
co-A9 BD FnFYW 4-6 2-1
co-A9 SC FmFYG 3-2 4-6 6-2
co-A9 BC FfFYG 2-1 4-6
co-A9 EC FnFWG 1-6
co-B1 SC Ej[w 0-5 2-0 0-4
co-B1 BC Ei]w 3-2 0-4
co-B1 EC Ej[w 0-5
co-B2 SC FnfY? 6-5 4-2 2-6
co-B2 BC FnfY? 6-5 4-2
co-B2 EC FnfY? 5-6
co-B3 SC G{jjAG 4-3 3-6 6-7
co-B3 BC G{jjAG 4-3 6-7
co-B3 EC G{jjAG 3-4
)";

GadgetRole role_of(char c)
{
    switch (c) {
    case 'S': return GadgetRole::SComponent;
    case 'B': return GadgetRole::BasicUnit;
    case 'E': return GadgetRole::Enforcer;
    }
    throw std::invalid_argument("bad gadget cell");
}

std::vector<GadgetRow> parse_rows()
{
    std::vector<GadgetRow> rows;
    std::istringstream in(kRows);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        GadgetRow row;
        std::string g6, tok;
        ls >> row.h_id >> row.cell >> g6;
        std::vector<Pair> pairs;
        while (ls >> tok) {
            auto dash = tok.find('-');
            pairs.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
        }
        Mode mode = row.cell[1] == 'D' ? Mode::Delete : Mode::Complete;
        row.gadget = make_gadget(from_graph6(g6), role_of(row.cell[0]), mode, pairs, row.h_id);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

const std::vector<GadgetRow>& gadget_rows()
{
    static const auto rows = parse_rows();
    return rows;
}

const std::vector<std::string>& gadget_targets()
{
    static const std::vector<std::string> ids{"co-A1", "co-A2", "A3", "co-A3", "A4", "A5", "co-A6",
                                              "co-A7", "co-A8", "co-A9", "co-B1", "co-B2", "co-B3"};
    return ids;
}

std::optional<GadgetRow> find_row(std::string_view h_id, std::string_view cell)
{
    for (auto& r : gadget_rows())
        if (r.h_id == h_id && r.cell == cell) return r;
    return std::nullopt;
}

RowReport verify_row(const GadgetRow& row, int n_host, int exhaustive_limit)
{
    RowReport r;
    r.h_id = row.h_id;
    r.cell = row.cell;
    switch (row.gadget.role) {
    case GadgetRole::SComponent:
        r.s = verify_s_component(row.gadget);
        r.passed = r.s->ok;
        break;
    case GadgetRole::BasicUnit:
        r.unit = verify_basic_unit(row.gadget, exhaustive_limit);
        r.passed = r.unit->ok;
        break;
    case GadgetRole::Enforcer:
        r.enforcer = verify_enforcer(row.gadget, n_host);
        r.passed = r.enforcer->passed();
        break;
    }
    return r;
}

std::vector<ControlReport> mutation_controls(int n_host)
{
    std::vector<ControlReport> out;
    const auto h = lookup("co-A1").graph;

    {
        auto es = edges(h);
        auto g = make_gadget(h, GadgetRole::SComponent, Mode::Delete, {es[0], es[1], es[2]}, "co-A1");
        auto r = verify_s_component(g);
        out.push_back({"s-component equal to h", !r.ok, r.ok ? "accepted" : r.error});
    }
    {
        auto unit = find_row("co-A1", "BD")->gadget;
        std::set<Pair> allowed;
        for (auto [u, v] : unit.allowed) allowed.insert({std::min(u, v), std::max(u, v)});
        Pair target{-1, -1};
        for (int u = 0; u < unit.graph.n() && target.first < 0; ++u)
            for (int v = u + 1; v < unit.graph.n(); ++v)
                if (!allowed.count({u, v})) {
                    target = {u, v};
                    break;
                }
        unit.graph.flip(target.first, target.second);
        auto r = verify_basic_unit(unit);
        out.push_back({"basic unit with forbidden pair " + pair_text(target) + " flipped", !r.ok,
                       r.ok ? "accepted" : r.error});
    }
    {
        auto es = edges(h);
        auto g = make_gadget(h, GadgetRole::Enforcer, Mode::Delete, {es[0]}, "co-A1");
        auto r = verify_enforcer(g, n_host);
        out.push_back({"enforcer equal to h", !r.exact, r.exact ? "layer (a) passed" : "layer (a) failed"});
    }
    {
        // h minus an edge leaves a 2K1 separator whose component fits at the pair
        Pair x{1, 2};
        SmallGraph naive = h;
        naive.remove_edge(x.first, x.second);
        auto g = make_gadget(naive, GadgetRole::Enforcer, Mode::Complete, {x}, "co-A1");
        auto r = verify_enforcer(g, n_host);
        out.push_back({"naive completion enforcer h - " + pair_text(x), !r.falsification,
                       r.falsification ? "layer (c) passed" : "layer (c): " + r.counterexample});
    }
    return out;
}

}  // namespace hfree
