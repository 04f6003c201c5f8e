#include "hfree/catalogue.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "catalogue_data.hpp"
#include "hfree/canon.hpp"

namespace hfree {

namespace {

struct Index {
    std::vector<NamedGraph> entries;
    std::map<std::string, std::size_t, std::less<>> by_id;
    std::unordered_map<CanonicalForm, std::string, CanonicalHash> any;
    std::unordered_map<CanonicalForm, std::string, CanonicalHash> w_series;
};

bool is_series_id(std::string_view id)
{
    if (id.size() < 2) return false;
    if (id[0] != 'H' && id[0] != 'A' && id[0] != 'B' && id[0] != 'D' && id[0] != 'S') return false;
    for (char c : id.substr(1))
        if (c < '0' || c > '9') return false;
    return true;
}

const Index& index()
{
    static const Index idx = [] {
        Index x;
        for (const auto& raw : data::raw_catalogue()) {
            x.by_id.emplace(raw.id, x.entries.size());
            x.entries.push_back({raw.id, from_graph6(raw.graph6), raw.source});
        }
        auto add = [&](bool series, bool comp) {
            for (const auto& e : x.entries) {
                if (is_series_id(e.id) != series) continue;
                auto g = comp ? complement(e.graph) : e.graph;
                auto name = comp ? "co-" + e.id : e.id;
                auto cf = canonical_form(g);
                x.any.emplace(cf, name);
                if (series) x.w_series.emplace(cf, name);
            }
        };
        add(true, false);
        add(false, false);
        add(true, true);
        add(false, true);
        return x;
    }();
    return idx;
}

}  // namespace

const std::vector<NamedGraph>& catalogue() { return index().entries; }

bool has_id(std::string_view id)
{
    if (id.starts_with("co-")) id.remove_prefix(3);
    return index().by_id.contains(id);
}

NamedGraph lookup(std::string_view id)
{
    bool comp = id.starts_with("co-");
    std::string_view base = comp ? id.substr(3) : id;
    auto it = index().by_id.find(base);
    if (it == index().by_id.end()) throw std::out_of_range("unknown catalogue id '" + std::string(id) + "'");
    NamedGraph e = index().entries[it->second];
    if (comp) {
        e.id = std::string(id);
        e.graph = complement(e.graph);
        e.source = "complement of " + std::string(base);
    }
    return e;
}

char series_of(std::string_view id) { return is_series_id(id) ? id[0] : 0; }

std::optional<std::string> identify(const SmallGraph& g)
{
    auto it = index().any.find(canonical_form(g));
    if (it == index().any.end()) return std::nullopt;
    return it->second;
}

int family_min_t(int family)
{
    static const int mins[] = {0, 4, 5, 4, 4, 4, 4, 4, 6, 3, 3};
    if (family < 1 || family > 10) throw std::invalid_argument("family index outside 1..10");
    return mins[family];
}

int family_order(int family, int t)
{
    static const int offset[] = {0, 2, 1, 2, 3, 2, 2, 3, 1, 4, 4};
    if (family < 1 || family > 10) throw std::invalid_argument("family index outside 1..10");
    return t + offset[family];
}

namespace {

SmallGraph clique_minus_edge(int t)
{
    SmallGraph g = complete_graph(t);
    g.remove_edge(0, 1);
    return g;
}

}  // namespace

SmallGraph generate_family(FamilyId fid)
{
    const int t = fid.t;
    if (t < family_min_t(fid.family))
        throw std::invalid_argument(family_name(fid) + " is below the family constraint t >= " +
                                    std::to_string(family_min_t(fid.family)));
    if (family_order(fid.family, t) > kMaxVertices) throw std::invalid_argument("family member exceeds 64 vertices");
    switch (fid.family) {
    case 1: return complete_bipartite(2, t);
    case 2: return star(t);
    case 3: return join(complete_graph(2), empty_graph(t));
    case 4: {
        SmallGraph g(t + 3);
        g.add_edge(0, 1);
        for (int i = 0; i < t; ++i) g.add_edge(0, 2 + i);
        g.add_edge(1, t + 2);
        return g;
    }
    case 5: return complement(disjoint_union(clique_minus_edge(t), empty_graph(2)));
    case 6: return complement(disjoint_union(clique_minus_edge(t), complete_graph(2)));
    case 7: return disjoint_union(star(t), complete_graph(2));
    case 8: return complement(disjoint_union(clique_minus_edge(t), empty_graph(1)));
    case 9: {
        SmallGraph k = join(complete_graph(2), empty_graph(t));
        SmallGraph g(t + 4);
        for (auto [u, v] : edges(k)) g.add_edge(u, v);
        g.add_edge(1, t + 2);
        g.add_edge(t + 2, t + 3);
        g.add_edge(t + 3, 0);
        return g;
    }
    case 10: {
        SmallGraph k = complete_bipartite(2, t);
        SmallGraph g(t + 4);
        for (auto [u, v] : edges(k)) g.add_edge(u, v);
        g.add_edge(0, t + 2);
        g.add_edge(t + 2, t + 3);
        g.add_edge(t + 3, 1);
        return g;
    }
    }
    throw std::invalid_argument("family index outside 1..10");
}

std::string family_name(FamilyId fid) { return "F" + std::to_string(fid.family) + "(t=" + std::to_string(fid.t) + ")"; }

std::optional<FamilyId> recognize_family(const SmallGraph& g)
{
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::pair<CanonicalForm, int>> cache;
    std::optional<CanonicalForm> cf;
    for (int f = 1; f <= 10; ++f) {
        int t = g.n() - family_order(f, 0);
        if (t < family_min_t(f)) continue;
        std::pair<CanonicalForm, int> member;
        {
            std::lock_guard lock(mu);
            auto it = cache.find({f, t});
            if (it == cache.end()) {
                auto gen = generate_family({f, t});
                it = cache.emplace(std::pair{f, t}, std::pair{canonical_form(gen), gen.edge_count()}).first;
            }
            member = it->second;
        }
        if (member.second != g.edge_count()) continue;
        if (!cf) cf = canonical_form(g);
        if (*cf == member.first) return FamilyId{f, t};
    }
    return std::nullopt;
}

std::string WReason::describe() const
{
    std::string base = family ? family_name(*family) : id;
    return complement ? "complement of " + base : base;
}

std::optional<WReason> membership_W(const SmallGraph& g, Variant)
{
    const auto& idx = index();
    auto it = idx.w_series.find(canonical_form(g));
    if (it != idx.w_series.end()) {
        WReason r;
        r.complement = it->second.starts_with("co-");
        r.id = r.complement ? it->second.substr(3) : it->second;
        r.constituent = std::string(1, r.id[0]);
        return r;
    }
    if (auto f = recognize_family(g)) return WReason{"F", "F" + std::to_string(f->family), false, f};
    if (auto f = recognize_family(complement(g))) return WReason{"F", "F" + std::to_string(f->family), true, f};
    return std::nullopt;
}

bool in_W_prime(const WReason& r)
{
    if (r.constituent == "H" || r.constituent == "A") return true;
    if (r.constituent == "B" || r.constituent == "D") return !r.complement;
    return false;
}

std::string name_of(const SmallGraph& g)
{
    if (auto id = identify(g)) return *id;
    if (auto f = recognize_family(g)) return family_name(*f);
    if (auto f = recognize_family(complement(g))) return "co-" + family_name(*f);
    return {};
}

}  // namespace hfree
