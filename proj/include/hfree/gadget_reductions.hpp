#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hfree/big_graph.hpp"
#include "hfree/gadgets.hpp"
#include "hfree/instance.hpp"
#include "hfree/reductions.hpp"

namespace hfree {

struct PropFormula {
    int vars = 0;
    std::vector<std::array<int, 3>> clauses;  // ordered (x, y, z), distinct within a clause
};

// Throws std::invalid_argument on a bad variable, a repeated variable in a
// clause, or more than three occurrences (exactly three when strict).
void validate(const PropFormula& phi, bool strict);
bool satisfies(const PropFormula& phi, const PropTable& f, const std::vector<bool>& assignment);

// Restricted instance too large for SmallGraph. Pairs outside `allowed` are forbidden.
struct BigInstance {
    BigGraph g;
    int k = 0;
    Mode mode = Mode::Delete;
    std::vector<Pair> allowed;
    std::vector<std::vector<int>> variable_pairs;  // per variable, indices into allowed
};

// One s-component per clause and one truth-setting ring per variable; the i-th
// occurrence of a variable is glued to the i-th junction pair of its ring.
// Budget 3|V(h)|k. Occurrence counts up to three are accepted unless strict.
BigInstance con_cai(const PropFormula& phi, int k, const Gadget& s_comp, const Gadget& unit, bool strict = false);

// Modifies every allowed pair of the rings of the true variables.
BigGraph apply_assignment(const BigInstance& inst, const std::vector<bool>& assignment);

// Searches modification sets that are unions of whole rings, of total cost at
// most k. Returns the assignment whose result is h-free, if any.
std::optional<std::vector<bool>> solve_ring_closed(const BigInstance& inst, const SmallGraph& h);

// k+1 copies of the enforcer per forbidden pair, distinguished pair glued in
// order; the result is unrestricted. Throws std::invalid_argument when the
// enforcer fails layer (a) or (b) or its mode differs from the instance.
EditInstance enforcer_attach(const EditInstance& inst, const Gadget& enforcer);

struct TrickyShape {
    SmallGraph source_h;
    SmallGraph target_h;
    Mode mode = Mode::Delete;
    bool target_restricted = false;
};

TrickyShape tricky_shape(Construction id);
// Empty when the instance meets the source problem's side condition.
std::string tricky_side_condition(Construction id, const EditInstance& src);
// Throws std::invalid_argument when the side condition fails and
// std::length_error above 64 vertices. Budget unchanged.
EditInstance tricky_reduction(Construction id, const EditInstance& src);

}  // namespace hfree
