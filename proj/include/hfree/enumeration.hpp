#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hfree/graph.hpp"

namespace hfree {

struct EnumConfig {
    int n_max = 9;
    int workers = 1;
    bool allow_large = false;    // lifts the n <= 10 guardrail to 11
    bool connected_only = false; // campaigns skip disconnected graphs
    std::string checkpoint_dir;  // empty: no checkpointing
    std::function<void(int n, long long graphs)> on_level;  // called before scanning level n
};

// Throws std::invalid_argument for n < 1 and std::length_error past the guardrail.
void check_enumeration_bound(int n, bool allow_large = false);

// Packed canonical keys of all graphs on n vertices, sorted. Levels are cached
// for the lifetime of the process.
const std::vector<std::uint64_t>& graph_keys(int n, int workers = 1, bool allow_large = false);
std::vector<SmallGraph> enumerate_graphs(int n, int workers = 1, bool allow_large = false);

// Children of every parent by one new vertex, deduplicated by canonical form.
std::vector<std::uint64_t> extend_level(const std::vector<std::uint64_t>& parents, int workers);

// Level file: one graph6 per line.
void write_level(const std::string& path, const std::vector<std::uint64_t>& keys);
std::vector<std::uint64_t> read_level(const std::string& path);

enum class Campaign { CaseLemmas, RegularTail, ChurnTotality, WClosure };
std::string to_string(Campaign c);
std::optional<Campaign> campaign_from_string(std::string_view s);

struct CampaignReport {
    std::string campaign;
    int n_max = 0;
    std::map<int, long long> scanned;     // graphs visited per n
    std::map<int, long long> hypothesis;  // graphs meeting the campaign hypothesis per n
    std::map<std::string, long long> cells;  // case_lemmas: "low/high" -> hypothesis count
    std::vector<std::string> counterexamples;  // graph6, sorted
    std::vector<std::string> exceptions;       // regular_tail: named exceptions, sorted
    std::vector<int> completed_levels;
    bool complete = false;
    std::string resume_token;  // checkpoint directory of a partial run
    std::string error;
    double seconds = 0;
};

CampaignReport run_search_campaign(Campaign c, const EnumConfig& cfg);

}  // namespace hfree
