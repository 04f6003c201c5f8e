#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hfree/catalogue.hpp"
#include "hfree/graph.hpp"
#include "hfree/reductions.hpp"

namespace hfree {

enum class Problem { Editing, Deletion, Completion };
std::string to_string(Problem p);
Problem problem_from_string(const std::string& s);

struct SetMembership {
    bool in_XD = false;
    bool in_XE = false;
    bool in_YE = false;
    bool in_YD = false;
    bool in_Yprime = false;
    std::string witness;  // first matching reason, empty when in no set
};

SetMembership set_membership(const SmallGraph& g);
bool in_XD(const SmallGraph& g);
bool in_XE(const SmallGraph& g);
bool in_YE(const SmallGraph& g);
bool in_YD(const SmallGraph& g);
// Name of the small easy graph (P3, co-P3, P4, claw, ...), or nullopt.
std::optional<std::string> yprime_name(const SmallGraph& g);

enum class CellType { Complete, Empty, YPrime, NearEmpty };
std::string to_string(CellType t);
// complete, then empty, then the small easy list, then one edge.
std::optional<CellType> cell_type(const SmallGraph& g);

struct ChurnStep {
    bool low = true;  // removed V_low, else V_high
    SmallGraph from;
    SmallGraph to;
};

struct ChurnResult {
    SmallGraph result;
    std::vector<ChurnStep> trace;
};

// Peels V_low or V_high while the result leaves Y_D.
ChurnResult churn(const SmallGraph& g);

enum class Status { PolyKernel, Incompressible, OpenCatalogue, ClawExcluded, Unclassified };
std::string to_string(Status s);

struct Verdict {
    Problem problem = Problem::Editing;
    Status status = Status::Unclassified;
    std::string reason;
    std::string open_member;  // named open case for OpenCatalogue
    std::vector<ReductionStep> chain;
};

// Memoized by canonical form; safe to call from several threads.
Verdict classify(const SmallGraph& g, Problem p);

struct CaseLemmaReport {
    CellType low;
    CellType high;
    int n_max = 0;
    long long hypothesis_count = 0;
    std::vector<SmallGraph> counterexamples;
};

// Checks that every H outside X u Y with 5 <= n <= n_max whose V_low and V_high
// deletions have the given types lies in W.
CaseLemmaReport verify_case_lemma(CellType low, CellType high, int n_max, int workers = 1);

}  // namespace hfree
