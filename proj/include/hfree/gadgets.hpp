#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hfree/big_graph.hpp"
#include "hfree/graph.hpp"
#include "hfree/instance.hpp"

namespace hfree {

enum class GadgetRole { SComponent, BasicUnit, Enforcer };
std::string to_string(GadgetRole r);

struct Gadget {
    SmallGraph graph;
    GadgetRole role = GadgetRole::SComponent;
    Mode mode = Mode::Delete;  // Delete or Complete
    // Edges in delete mode, nonedges in complete mode. S: (x, y, z); unit: (e', e)
    // where modifying e' alone creates h.
    std::vector<Pair> allowed;
    std::string h_id;
    SmallGraph h;
};

// Gadget for a catalogue target; throws std::invalid_argument when the pair
// count does not match the role or a pair has the wrong adjacency.
Gadget make_gadget(const SmallGraph& graph, GadgetRole role, Mode mode, std::vector<Pair> allowed,
                   const std::string& h_id);
Gadget make_gadget(const SmallGraph& graph, GadgetRole role, Mode mode, std::vector<Pair> allowed,
                   const SmallGraph& h);

// Entry index x*4 + y*2 + z.
struct PropTable {
    std::array<bool, 8> f{};
    bool at(int x, int y, int z) const { return f[x * 4 + y * 2 + z]; }
    bool& at(int x, int y, int z) { return f[x * 4 + y * 2 + z]; }
};

// f(1,0,0) = 0 and f(0,0,0) = f(1,0,1) = f(1,1,0) = f(1,1,1) = 1.
bool check_propagational(const PropTable& t);

struct SComponentReport {
    bool ok = false;
    std::string error;  // "not h-free" or "not propagational"
    PropTable table;
};

// Table entry 1 iff modifying the pairs valued 1 leaves the gadget h-free.
SComponentReport verify_s_component(const Gadget& g);

// h + x for a nonedge x and edges y, z of h; nullopt when h has no such pairs.
std::optional<Gadget> generic_s_component(const SmallGraph& h, Mode mode = Mode::Delete);

// Three chains of p = |V(h)| unit copies, closed into one ring: e of each copy is
// identified with e' of the next. `flipped` reverses the endpoints at every
// identification.
struct TruthSetting {
    BigGraph graph;
    Mode mode = Mode::Delete;
    SmallGraph h;
    int p = 0;
    bool flipped = false;
    std::vector<Pair> allowed;    // ring order, 3p pairs
    std::array<int, 3> variable{};  // indices into allowed of the chain junctions
};

// Throws std::invalid_argument unless role is BasicUnit with disjoint pairs and p >= 2.
TruthSetting build_truth_setting(const Gadget& unit, bool flipped = false);

struct TruthSettingReport {
    bool ok = false;
    bool exhaustive = false;
    long long subsets = 0;  // modification sets examined
    std::string error;
};

// Exhaustive when 3p <= exhaustive_limit: exactly the empty set and the full
// allowed set keep the graph h-free. Otherwise both of those are h-free and
// every proper cyclic arc of allowed pairs creates h. Throws
// std::length_error when exhaustive_limit exceeds 21.
TruthSettingReport verify_truth_setting(const TruthSetting& tc, int exhaustive_limit = 15);

struct BasicUnitReport {
    bool ok = false;
    bool unit_ok = false;  // U and U with both pairs modified h-free, one single modification not
    std::string trigger;   // pair whose lone modification creates h: "e'", "e" or "both"
    bool flipped = false;  // orientation that passed
    TruthSettingReport ring;
    std::string error;
};

// Tries the stored orientation first, then the flipped one.
BasicUnitReport verify_basic_unit(const Gadget& unit, int exhaustive_limit = 15);

struct EnforcerReport {
    bool exact = false;
    bool structural = false;
    std::string structural_rule;  // "no-separator", "per-component" or the failure
    bool falsification = false;
    int n_host = 0;
    long long attachments = 0;
    std::string counterexample;  // host graph6 and host pair of a crossing copy
    bool passed() const { return exact && structural && falsification; }
};

// (a) X h-free and X with e modified contains h; (b) h 2-connected and every
// 2-separator of the pair's type fails to embed on the enforcer side; (c) no
// induced h crosses the boundary for any host with at most n_host vertices.
// Layer (c) is bounded evidence only.
EnforcerReport verify_enforcer(const Gadget& g, int n_host = 6, bool run_falsification = true);

struct GadgetRow {
    std::string h_id;
    std::string cell;  // SD BD ED SC BC EC
    Gadget gadget;
};

const std::vector<GadgetRow>& gadget_rows();
const std::vector<std::string>& gadget_targets();  // row order of the table
std::optional<GadgetRow> find_row(std::string_view h_id, std::string_view cell);

struct RowReport {
    std::string h_id;
    std::string cell;
    bool passed = false;
    std::optional<SComponentReport> s;
    std::optional<BasicUnitReport> unit;
    std::optional<EnforcerReport> enforcer;
};

RowReport verify_row(const GadgetRow& row, int n_host = 6, int exhaustive_limit = 15);

struct ControlReport {
    std::string name;
    bool failed_as_expected = false;
    std::string detail;
};

// Deliberately broken gadgets, one per role; each must be rejected.
std::vector<ControlReport> mutation_controls(int n_host = 5);

}  // namespace hfree
