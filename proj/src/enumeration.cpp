#include "hfree/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "hfree/canon.hpp"
#include "hfree/catalogue.hpp"
#include "hfree/classifier.hpp"
#include "hfree/report.hpp"

namespace hfree {

namespace fs = std::filesystem;

void check_enumeration_bound(int n, bool allow_large)
{
    if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
    const int cap = allow_large ? 11 : 10;
    if (n > cap)
        throw std::length_error("n = " + std::to_string(n) + " exceeds the enumeration guardrail of " +
                                std::to_string(cap) + (allow_large ? "" : " (pass --allow-large to reach 11)"));
}

namespace {

// Runs body(i) for i in [0, count) on the given number of threads, handing out
// indices in chunks. The first exception is rethrown after all threads stop.
void parallel_for(std::size_t count, int workers, std::size_t chunk, const std::function<void(int, std::size_t)>& body)
{
    workers = std::max(1, workers);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr err;
    std::mutex err_mu;
    auto run = [&](int w) {
        try {
            while (!failed) {
                std::size_t start = next.fetch_add(chunk);
                if (start >= count) break;
                std::size_t end = std::min(count, start + chunk);
                for (std::size_t i = start; i < end; ++i) body(w, i);
            }
        } catch (...) {
            std::lock_guard lock(err_mu);
            if (!err) err = std::current_exception();
            failed = true;
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }
    if (err) std::rethrow_exception(err);
}

void sort_unique(std::vector<std::uint64_t>& v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

struct LevelCache {
    std::mutex mu;
    std::map<int, std::vector<std::uint64_t>> levels;
};

LevelCache& cache()
{
    static LevelCache c;
    return c;
}

const std::vector<std::uint64_t>& level(int n, int workers, const std::string& dir)
{
    auto& c = cache();
    {
        std::lock_guard lock(c.mu);
        auto it = c.levels.find(n);
        if (it != c.levels.end()) return it->second;
    }
    std::vector<std::uint64_t> keys;
    const std::string path = dir.empty() ? "" : (fs::path(dir) / ("level_" + std::to_string(n) + ".g6")).string();
    if (!path.empty() && fs::exists(path)) {
        keys = read_level(path);
    } else if (n == 1) {
        keys = {packed_key(SmallGraph(1))};
    } else {
        keys = extend_level(level(n - 1, workers, dir), workers);
        if (!path.empty()) write_level(path, keys);
    }
    std::lock_guard lock(c.mu);
    return c.levels.emplace(n, std::move(keys)).first->second;
}

}  // namespace

std::vector<std::uint64_t> extend_level(const std::vector<std::uint64_t>& parents, int workers)
{
    workers = std::max(1, workers);
    std::vector<std::vector<std::uint64_t>> local(workers);
    parallel_for(parents.size(), workers, 16, [&](int w, std::size_t i) {
        SmallGraph p = unpack_key(parents[i]);
        const int n = p.n();
        auto& out = local[w];
        for (Mask nb = 0; nb < bit(n); ++nb) {
            SmallGraph c(n + 1);
            for (int u = 0; u < n; ++u)
                for (int v : members(p.row(u) & ~low_bits(u + 1))) c.add_edge(u, v);
            for (int v : members(nb)) c.add_edge(n, v);
            out.push_back(packed_key(c));
        }
        if (out.size() > (std::size_t{1} << 22)) sort_unique(out);
    });
    std::vector<std::uint64_t> all;
    for (auto& l : local) {
        sort_unique(l);
        all.insert(all.end(), l.begin(), l.end());
        l = {};
    }
    sort_unique(all);
    return all;
}

const std::vector<std::uint64_t>& graph_keys(int n, int workers, bool allow_large)
{
    check_enumeration_bound(n, allow_large);
    return level(n, workers, "");
}

std::vector<SmallGraph> enumerate_graphs(int n, int workers, bool allow_large)
{
    std::vector<SmallGraph> out;
    for (auto k : graph_keys(n, workers, allow_large)) out.push_back(unpack_key(k));
    return out;
}

void write_level(const std::string& path, const std::vector<std::uint64_t>& keys)
{
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp);
        if (!f) throw std::runtime_error("cannot write " + tmp);
        for (auto k : keys) f << to_graph6(unpack_key(k)) << '\n';
    }
    fs::rename(tmp, path);
}

std::vector<std::uint64_t> read_level(const std::string& path)
{
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::vector<std::uint64_t> keys;
    std::string line;
    while (std::getline(f, line))
        if (!line.empty()) keys.push_back(packed_key(from_graph6(line)));
    sort_unique(keys);
    return keys;
}

std::string to_string(Campaign c)
{
    switch (c) {
    case Campaign::CaseLemmas: return "case_lemmas";
    case Campaign::RegularTail: return "regular_tail";
    case Campaign::ChurnTotality: return "churn_totality";
    case Campaign::WClosure: return "W_closure";
    }
    return "?";
}

std::optional<Campaign> campaign_from_string(std::string_view s)
{
    for (auto c : {Campaign::CaseLemmas, Campaign::RegularTail, Campaign::ChurnTotality, Campaign::WClosure})
        if (std::ranges::equal(s, to_string(c), [](char a, char b) { return std::tolower(a) == std::tolower(b); }))
            return c;
    return std::nullopt;
}

namespace {

const std::vector<CellType> kCells{CellType::Complete, CellType::Empty, CellType::YPrime, CellType::NearEmpty};

std::string cell_key(CellType low, CellType high) { return to_string(low) + "/" + to_string(high); }

// Name for a regular graph: C<n>, <c>K<t>, co-C<n>, co-<c>K<t>, else graph6.
std::string regular_name(const SmallGraph& g)
{
    auto union_of_cliques = [](const SmallGraph& x) -> std::string {
        auto comps = components(x);
        int t = popcount(comps[0]);
        for (Mask c : comps) {
            SmallGraph part = induced_subgraph(x, c);
            if (popcount(c) != t || !is_complete(part)) return {};
        }
        return (comps.size() > 1 ? std::to_string(comps.size()) : "") + "K" + std::to_string(t);
    };
    if (is_cycle(g)) return "C" + std::to_string(g.n());
    if (auto s = union_of_cliques(g); !s.empty()) return s;
    if (is_cycle(complement(g))) return "co-C" + std::to_string(g.n());
    if (auto s = union_of_cliques(complement(g)); !s.empty()) return "co-" + s;
    return to_graph6(g);
}

struct Partial {
    long long hypothesis = 0;
    std::map<std::string, long long> cells;
    std::vector<std::string> bad;
    std::vector<std::string> exceptions;
};

void scan_graph(Campaign c, const SmallGraph& g, Partial& out)
{
    const int n = g.n();
    switch (c) {
    case Campaign::CaseLemmas: {
        if (n < 5 || in_XE(g) || in_YD(g)) return;
        auto dp = degree_partition(g);
        if (!dp) return;
        auto tl = cell_type(delete_vertices(g, dp->v_low));
        auto th = cell_type(delete_vertices(g, dp->v_high));
        if (!tl || !th) return;
        ++out.hypothesis;
        ++out.cells[cell_key(*tl, *th)];
        if (!membership_W(g)) out.bad.push_back(to_graph6(g));
        return;
    }
    case Campaign::RegularTail: {
        if (!is_regular(g) || is_complete(g) || is_empty(g)) return;
        if (g.degree(0) <= n - 5) return;
        ++out.hypothesis;
        if (is_3_connected(g) || is_3_connected(complement(g))) return;
        std::string name = regular_name(g);
        out.exceptions.push_back(name);
        if (name != "2K2" && name != "C4" && name != "C5") out.bad.push_back(to_graph6(g));
        return;
    }
    case Campaign::ChurnTotality: {
        if (n < 5) return;
        if (!in_YD(g)) {
            ++out.hypothesis;
            if (classify(g, Problem::Deletion).status == Status::Unclassified) out.bad.push_back("del:" + to_graph6(g));
        }
        if (!in_YE(g) && classify(g, Problem::Editing).status == Status::Unclassified)
            out.bad.push_back("edit:" + to_graph6(g));
        return;
    }
    case Campaign::WClosure: {
        bool a = membership_W(g).has_value();
        if (a) ++out.hypothesis;
        if (a != membership_W(complement(g)).has_value()) out.bad.push_back(to_graph6(g));
        return;
    }
    }
}

void merge_sorted(std::vector<std::string>& into, std::vector<std::string> more)
{
    into.insert(into.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    std::sort(into.begin(), into.end());
    into.erase(std::unique(into.begin(), into.end()), into.end());
}

void check_named_closure(CampaignReport& rep)
{
    std::vector<std::string> bad;
    auto check = [&](const SmallGraph& g, const std::string& label) {
        if (!membership_W(g) || !membership_W(complement(g))) bad.push_back("catalogue:" + label);
    };
    for (auto& e : catalogue())
        if (series_of(e.id)) check(e.graph, e.id);
    for (int f = 1; f <= 10; ++f)
        for (int t = family_min_t(f); t <= 8; ++t)
            if (family_order(f, t) <= kMaxVertices) check(generate_family({f, t}), family_name({f, t}));
    merge_sorted(rep.counterexamples, std::move(bad));
}

void save_progress(const CampaignReport& rep, const std::string& dir)
{
    if (dir.empty()) return;
    const fs::path p = fs::path(dir) / "progress.json";
    const std::string tmp = p.string() + ".tmp";
    {
        std::ofstream f(tmp);
        f << dump(to_json(rep));
    }
    fs::rename(tmp, p);
}

std::optional<CampaignReport> load_progress(Campaign c, const EnumConfig& cfg)
{
    if (cfg.checkpoint_dir.empty()) return std::nullopt;
    const fs::path p = fs::path(cfg.checkpoint_dir) / "progress.json";
    if (!fs::exists(p)) return std::nullopt;
    std::ifstream f(p);
    auto rep = campaign_report_from_json(Json::parse(f));
    if (rep.campaign != to_string(c) || rep.n_max != cfg.n_max) return std::nullopt;
    return rep;
}

}  // namespace

CampaignReport run_search_campaign(Campaign c, const EnumConfig& cfg)
{
    check_enumeration_bound(cfg.n_max, cfg.allow_large);
    const auto t0 = std::chrono::steady_clock::now();
    if (!cfg.checkpoint_dir.empty()) fs::create_directories(cfg.checkpoint_dir);

    CampaignReport rep;
    if (auto prev = load_progress(c, cfg)) {
        rep = *prev;
        rep.error.clear();
    } else {
        rep.campaign = to_string(c);
        rep.n_max = cfg.n_max;
        if (c == Campaign::CaseLemmas)
            for (auto lo : kCells)
                for (auto hi : kCells) rep.cells[cell_key(lo, hi)] = 0;
        if (c == Campaign::WClosure) check_named_closure(rep);
    }
    const std::set<int> done(rep.completed_levels.begin(), rep.completed_levels.end());
    const int workers = std::max(1, cfg.workers);

    try {
        for (int n = 1; n <= cfg.n_max; ++n) {
            if (done.count(n)) continue;
            const auto& keys = level(n, workers, cfg.checkpoint_dir);
            if (cfg.on_level) cfg.on_level(n, static_cast<long long>(keys.size()));
            std::vector<Partial> parts(workers);
            std::vector<long long> seen(workers, 0);
            parallel_for(keys.size(), workers, 256, [&](int w, std::size_t i) {
                SmallGraph g = unpack_key(keys[i]);
                if (cfg.connected_only && !is_connected(g)) return;
                ++seen[w];
                scan_graph(c, g, parts[w]);
            });
            long long scanned = 0, hyp = 0;
            std::vector<std::string> bad, exc;
            for (int w = 0; w < workers; ++w) {
                scanned += seen[w];
                hyp += parts[w].hypothesis;
                for (auto& [k, v] : parts[w].cells) rep.cells[k] += v;
                bad.insert(bad.end(), parts[w].bad.begin(), parts[w].bad.end());
                exc.insert(exc.end(), parts[w].exceptions.begin(), parts[w].exceptions.end());
            }
            rep.scanned[n] = scanned;
            rep.hypothesis[n] = hyp;
            merge_sorted(rep.counterexamples, std::move(bad));
            merge_sorted(rep.exceptions, std::move(exc));
            rep.completed_levels.push_back(n);
            std::sort(rep.completed_levels.begin(), rep.completed_levels.end());
            save_progress(rep, cfg.checkpoint_dir);
        }
        rep.complete = true;
        rep.resume_token.clear();
    } catch (const std::exception& e) {
        rep.complete = false;
        rep.error = e.what();
        rep.resume_token = cfg.checkpoint_dir;
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    save_progress(rep, cfg.checkpoint_dir);
    return rep;
}

CaseLemmaReport verify_case_lemma(CellType low, CellType high, int n_max, int workers)
{
    check_enumeration_bound(n_max);
    CaseLemmaReport rep{low, high, n_max, 0, {}};
    std::mutex mu;
    for (int n = 5; n <= n_max; ++n) {
        const auto& keys = graph_keys(n, workers);
        parallel_for(keys.size(), workers, 256, [&](int, std::size_t i) {
            SmallGraph g = unpack_key(keys[i]);
            if (in_XE(g) || in_YD(g)) return;
            auto dp = degree_partition(g);
            if (!dp) return;
            if (cell_type(delete_vertices(g, dp->v_low)) != low) return;
            if (cell_type(delete_vertices(g, dp->v_high)) != high) return;
            bool in_w = membership_W(g).has_value();
            std::lock_guard lock(mu);
            ++rep.hypothesis_count;
            if (!in_w) rep.counterexamples.push_back(g);
        });
    }
    std::sort(rep.counterexamples.begin(), rep.counterexamples.end(),
              [](const SmallGraph& a, const SmallGraph& b) { return packed_key(a) < packed_key(b); });
    return rep;
}

}  // namespace hfree
