#pragma once

#include <cstdint>
#include <vector>

#include "hfree/graph.hpp"
#include "hfree/instance.hpp"

namespace hfree {

struct Solution {
    bool feasible = false;
    std::vector<Pair> witness;
};

struct SolveLimits {
    int max_n = 20;
    int max_k = 4;
    std::uint64_t max_subsets = 10'000'000;
};

// Bounded search tree: branch on the pairs of the lexicographically smallest
// induced copy of h. Throws std::length_error past the guardrails.
Solution solve(const EditInstance& inst, const SmallGraph& h, const SolveLimits& lim = {});

// Every permissible pair set of size at most k, smallest first.
Solution solve_exhaustive(const EditInstance& inst, const SmallGraph& h, const SolveLimits& lim = {});

// Applies the witness and re-checks mode, restrictions, size and h-freeness.
bool witness_valid(const EditInstance& inst, const SmallGraph& h, const std::vector<Pair>& witness);

}  // namespace hfree
