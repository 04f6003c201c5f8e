#include <filesystem>
#include <fstream>
#include <set>
#include <unistd.h>

#include "doctest.h"
#include "hfree/canon.hpp"
#include "hfree/enumeration.hpp"
#include "hfree/report.hpp"
#include "oracle.hpp"

using namespace hfree;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name)
{
    auto p = fs::temp_directory_path() / ("hfree_test_" + name + "_" + std::to_string(::getpid()));
    fs::remove_all(p);
    return p;
}

Json stable(const CampaignReport& r)
{
    Json j = to_json(r);
    j.erase("seconds");
    return j;
}

}  // namespace

TEST_CASE("enumeration counts up to 8 vertices")
{
    const std::vector<std::size_t> expected{1, 2, 4, 11, 34, 156, 1044, 12346};
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        CHECK(graph_keys(n).size() == expected[n - 1]);
        CHECK(graph_keys(n).size() == oracle::burnside_count(n));
    }
}

TEST_CASE("enumeration matches labelled dedup up to 7 vertices")
{
    for (int n = 1; n <= 7; ++n) {
        std::set<std::uint64_t> mine, ref;
        for (auto& g : enumerate_graphs(n)) CHECK(mine.insert(oracle::brute_canon(g)).second);
        for (auto& g : oracle::all_graphs(n)) ref.insert(oracle::brute_canon(g));
        CAPTURE(n);
        CHECK(mine == ref);
    }
}

TEST_CASE("enumeration is complement-closed")
{
    for (int n = 1; n <= 7; ++n) {
        const auto& keys = graph_keys(n);
        std::set<std::uint64_t> all(keys.begin(), keys.end()), images;
        for (auto k : keys) images.insert(packed_key(complement(unpack_key(k))));
        CHECK(images == all);
    }
}

TEST_CASE("parallel extension equals serial extension")
{
    const auto& parents = graph_keys(6);
    CHECK(extend_level(parents, 1) == extend_level(parents, 3));
    CHECK(extend_level(parents, 3) == graph_keys(7));
}

TEST_CASE("guardrails")
{
    CHECK_THROWS_AS(check_enumeration_bound(0), std::invalid_argument);
    CHECK_THROWS_AS(check_enumeration_bound(11), std::length_error);
    CHECK_NOTHROW(check_enumeration_bound(11, true));
    CHECK_THROWS_AS(check_enumeration_bound(12, true), std::length_error);
    EnumConfig cfg;
    cfg.n_max = 12;
    CHECK_THROWS_AS(run_search_campaign(Campaign::RegularTail, cfg), std::length_error);
}

TEST_CASE("level files round-trip")
{
    auto dir = scratch("level");
    fs::create_directories(dir);
    auto path = (dir / "level_6.g6").string();
    write_level(path, graph_keys(6));
    CHECK(read_level(path) == graph_keys(6));
    fs::remove_all(dir);
}

TEST_CASE("campaign names")
{
    for (auto c : {Campaign::CaseLemmas, Campaign::RegularTail, Campaign::ChurnTotality, Campaign::WClosure})
        CHECK(campaign_from_string(to_string(c)) == c);
    CHECK_FALSE(campaign_from_string("nope"));
}

TEST_CASE("regular tail up to 8 vertices has exactly the three exceptions")
{
    EnumConfig cfg;
    cfg.n_max = 8;
    auto r = run_search_campaign(Campaign::RegularTail, cfg);
    CHECK(r.complete);
    CHECK(r.exceptions == std::vector<std::string>{"2K2", "C4", "C5"});
    CHECK(r.counterexamples.empty());
}

TEST_CASE("campaigns at 8 vertices find no counterexamples")
{
    for (auto c : {Campaign::CaseLemmas, Campaign::ChurnTotality, Campaign::WClosure}) {
        EnumConfig cfg;
        cfg.n_max = 8;
        cfg.workers = 2;
        auto r = run_search_campaign(c, cfg);
        CAPTURE(to_string(c));
        CHECK(r.complete);
        CHECK(r.counterexamples.empty());
        CHECK(r.scanned.at(8) == 12346);
    }
}

TEST_CASE("case lemma cells")
{
    EnumConfig cfg;
    cfg.n_max = 8;
    auto r = run_search_campaign(Campaign::CaseLemmas, cfg);
    CHECK(r.cells.size() == 16);
    CHECK(r.cells.at("empty/complete") == 0);
    long long total = 0;
    for (auto& [k, v] : r.cells) total += v;
    long long hyp = 0;
    for (auto& [n, v] : r.hypothesis) hyp += v;
    CHECK(total == hyp);
    CHECK(verify_case_lemma(CellType::Complete, CellType::Empty, 8).hypothesis_count == r.cells.at("complete/empty"));
}

TEST_CASE("reports do not depend on worker count")
{
    for (auto c : {Campaign::CaseLemmas, Campaign::ChurnTotality}) {
        EnumConfig a, b;
        a.n_max = b.n_max = 7;
        a.workers = 1;
        b.workers = 4;
        CHECK(stable(run_search_campaign(c, a)) == stable(run_search_campaign(c, b)));
    }
}

TEST_CASE("connected-only filter")
{
    EnumConfig cfg;
    cfg.n_max = 5;
    cfg.connected_only = true;
    auto r = run_search_campaign(Campaign::WClosure, cfg);
    CHECK(r.scanned.at(5) == 21);
    CHECK(r.scanned.at(4) == 6);
}

TEST_CASE("checkpoint and resume")
{
    auto dir = scratch("resume");
    EnumConfig cfg;
    cfg.n_max = 7;
    cfg.checkpoint_dir = dir.string();
    auto full = run_search_campaign(Campaign::CaseLemmas, cfg);
    CHECK(full.complete);
    CHECK(fs::exists(dir / "progress.json"));

    // cut the progress back to level 5 and resume
    auto j = Json::parse(std::ifstream(dir / "progress.json"));
    auto partial = campaign_report_from_json(j);
    partial.completed_levels = {1, 2, 3, 4, 5};
    for (int n : {6, 7}) {
        partial.scanned.erase(n);
        partial.hypothesis.erase(n);
    }
    EnumConfig plain;
    plain.n_max = 5;
    auto upto5 = run_search_campaign(Campaign::CaseLemmas, plain);
    partial.cells = upto5.cells;
    partial.counterexamples = upto5.counterexamples;
    partial.complete = false;
    std::ofstream(dir / "progress.json") << dump(to_json(partial));

    auto resumed = run_search_campaign(Campaign::CaseLemmas, cfg);
    CHECK(stable(resumed) == stable(full));
    fs::remove_all(dir);
}

TEST_CASE("a failing level yields a partial report with a resume token")
{
    auto dir = scratch("fail");
    EnumConfig cfg;
    cfg.n_max = 4;
    cfg.checkpoint_dir = dir.string();
    cfg.on_level = [](int n, long long) {
        if (n == 3) throw std::runtime_error("worker lost");
    };
    auto r = run_search_campaign(Campaign::RegularTail, cfg);
    CHECK_FALSE(r.complete);
    CHECK_FALSE(r.error.empty());
    CHECK(r.resume_token == dir.string());
    CHECK(r.completed_levels.size() == 2);
    cfg.on_level = nullptr;
    auto resumed = run_search_campaign(Campaign::RegularTail, cfg);
    CHECK(resumed.complete);
    CHECK(resumed.completed_levels.size() == 4);
    fs::remove_all(dir);
}

TEST_CASE("report JSON round-trips byte for byte")
{
    EnumConfig cfg;
    cfg.n_max = 6;
    auto r = run_search_campaign(Campaign::CaseLemmas, cfg);
    std::string once = dump(to_json(r));
    std::string twice = dump(to_json(campaign_report_from_json(Json::parse(once))));
    CHECK(once == twice);
}
