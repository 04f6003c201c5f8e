#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hfree/graph.hpp"
#include "hfree/instance.hpp"

namespace hfree {

enum class Construction {
    ConMain,
    ConMod,
    ConNearUni,
    DisjointClique,
    LargestComponent,
    ConCai,
    EnforcerAttach,
    TrickyA6c,
    TrickyA7c,
    TrickyA8c,
    TrickyA9c,
    TrickyA1cCom,
    TrickyA6cCom,
};

std::string to_string(Construction c);
std::optional<Construction> construction_from_string(std::string_view s);

// Transformations of a pattern h into a pattern h' that h simulates.
enum class Rule {
    Low,              // h - V_low
    High,             // h - V_high
    ModuleTrim,       // drop one vertex from every module inside V_low
    K23,              // K_{2,3} to C_4
    NearUni,          // drop one vertex of V_high, clique V_high
    NearUniKtEuK1,    // (K_t - e) u K_1 to K_{t-2} u K_1
    Path,             // drop the interior of the unique longest degree-2 chain
    Cut,              // drop the unique smallest leaf block minus its cut vertex
    IsolatedVertex,   // J u tK_1 to J u (t-1)K_1
    CliqueComponent,  // J u K_t with K_t = V_low, drop one clique vertex
    DegreeThreePair,  // drop the unique adjacent pair of degree-3 vertices
    LargestComponent, // keep a largest component
};

std::string to_string(Rule r);
std::optional<Rule> rule_from_string(std::string_view s);

struct RuleApplication {
    Rule rule;
    Construction construction;
    SmallGraph target;
    Mask kept = 0;  // vertices of h inducing the target
    int param = 0;  // ell for ConMod, t for ConNearUni
};

// Structural effect of a rule; nullopt when the rule has nothing to act on.
std::optional<RuleApplication> apply_rule(Rule r, const SmallGraph& h);

struct Condition {
    std::string name;
    bool holds = false;
};

struct PreconditionReport {
    std::vector<Condition> conditions;
    bool ok() const;
    std::string failed() const;
};

// Hypotheses under which the rule's reduction is proved correct.
PreconditionReport check_preconditions(Rule r, const SmallGraph& h);

struct ReductionStep {
    Rule rule;
    Construction construction;
    bool via_complement = false;  // rule applied to the complements of from/to
    SmallGraph from;
    SmallGraph to;
    std::string from_name;
    std::string to_name;
    Mask kept = 0;  // on the side the rule acts on
    int param = 0;
    std::string k_map = "k' = k";
};

// One step from h; with via_complement the rule acts on complement(h).
std::optional<ReductionStep> make_step(Rule r, const SmallGraph& h, bool via_complement);

// Steps from h (a member of the catalogue union, families and complements)
// through the chain table until the current graph is in the finite refinement
// or in X_D. Throws std::invalid_argument when h has no table entry.
std::vector<ReductionStep> derive_chain(const SmallGraph& h);

// Graphs at which a chain stops: H, co-H, A, co-A, B, D members or X_D.
bool chain_terminal(const SmallGraph& g);

// Builds an instance of the from-problem out of an instance of the to-problem.
// Throws std::length_error above 64 vertices and std::invalid_argument for
// restricted input.
EditInstance execute_step(const ReductionStep& step, const EditInstance& target);

// For every injective f: vprime -> V(gprime), k+1 satellites copying h - vprime.
SmallGraph con_main(const SmallGraph& gprime, int k, const SmallGraph& h, Mask vprime);
// For every ell-subset S, a (k+1)-clique joined to S.
SmallGraph con_mod(const SmallGraph& gprime, int k, int ell);
// For every t-subset S, an independent (k+2)-set adjacent to V(gprime) - S.
SmallGraph con_near_uni(const SmallGraph& gprime, int k, int t);
// gprime u K_{k+1}.
SmallGraph disjoint_clique(const SmallGraph& gprime, int k);
// Union with joins of k+1 copies of a largest component, then con_main.
EditInstance largest_component_reduction(const EditInstance& target, const SmallGraph& h);

// Vertex count con_main would produce, without building it.
long long con_main_size(int n_gprime, int k, int n_h, int n_kept);

}  // namespace hfree
