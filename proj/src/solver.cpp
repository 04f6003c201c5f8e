#include "hfree/solver.hpp"

#include <stdexcept>
#include <string>

namespace hfree {

std::string to_string(Mode m)
{
    switch (m) {
    case Mode::Edit: return "edit";
    case Mode::Delete: return "del";
    case Mode::Complete: return "comp";
    }
    return "?";
}

Mode mode_from_string(const std::string& s)
{
    if (s == "edit" || s == "editing") return Mode::Edit;
    if (s == "del" || s == "delete" || s == "deletion") return Mode::Delete;
    if (s == "comp" || s == "complete" || s == "completion") return Mode::Complete;
    throw std::invalid_argument("unknown mode '" + s + "' (expected edit, del or comp)");
}

Mode complement_mode(Mode m)
{
    if (m == Mode::Delete) return Mode::Complete;
    if (m == Mode::Complete) return Mode::Delete;
    return Mode::Edit;
}

void PairSet::insert(int u, int v)
{
    if (u == v) throw std::invalid_argument("pair with equal endpoints");
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
}

void PairSet::erase(int u, int v)
{
    rows_[u] &= ~bit(v);
    rows_[v] &= ~bit(u);
}

int PairSet::size() const
{
    int s = 0;
    for (Mask r : rows_) s += popcount(r);
    return s / 2;
}

std::vector<Pair> PairSet::list() const
{
    std::vector<Pair> out;
    for (int u = 0; u < kMaxVertices; ++u)
        for (int v : members(rows_[u] & ~low_bits(u + 1))) out.emplace_back(u, v);
    return out;
}

PairSet pair_set(const std::vector<Pair>& ps)
{
    PairSet s;
    for (auto [u, v] : ps) s.insert(u, v);
    return s;
}

void validate(const EditInstance& inst)
{
    if (inst.k < 0) throw std::invalid_argument("budget k must be non-negative");
    for (auto [u, v] : inst.forbidden.list()) {
        if (u >= inst.g.n() || v >= inst.g.n()) throw std::invalid_argument("forbidden pair outside the graph");
        if (inst.mode == Mode::Delete && !inst.g.adjacent(u, v))
            throw std::invalid_argument("restricted deletion: forbidden pair " + std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
        if (inst.mode == Mode::Complete && inst.g.adjacent(u, v))
            throw std::invalid_argument("restricted completion: forbidden pair " + std::to_string(u) + "-" + std::to_string(v) + " is an edge");
    }
}

bool permissible(const EditInstance& inst, const SmallGraph& current, int u, int v)
{
    if (inst.forbidden.contains(u, v)) return false;
    if (inst.mode == Mode::Delete) return current.adjacent(u, v);
    if (inst.mode == Mode::Complete) return !current.adjacent(u, v);
    return true;
}

namespace {

void check_limits(const EditInstance& inst, const SmallGraph& h, const SolveLimits& lim)
{
    validate(inst);
    if (inst.g.n() > lim.max_n)
        throw std::length_error("solve: graph has " + std::to_string(inst.g.n()) + " vertices, guardrail is " + std::to_string(lim.max_n));
    if (inst.k > lim.max_k)
        throw std::length_error("solve: budget " + std::to_string(inst.k) + " exceeds guardrail " + std::to_string(lim.max_k));
    if (h.n() == 0) throw std::invalid_argument("pattern graph must have at least one vertex");
}

class Brancher {
public:
    Brancher(const EditInstance& inst, const SmallGraph& h) : inst_(inst), h_(h), g_(inst.g) {}

    bool run(int k)
    {
        auto copy = first_induced(g_, h_);
        if (!copy) return true;
        if (k == 0) return false;
        auto vs = members(*copy);
        std::vector<Pair> decided;
        bool ok = false;
        for (std::size_t i = 0; i < vs.size() && !ok; ++i)
            for (std::size_t j = i + 1; j < vs.size() && !ok; ++j) {
                int u = vs[i], v = vs[j];
                if (fixed_.contains(u, v) || !permissible(inst_, g_, u, v)) continue;
                g_.flip(u, v);
                fixed_.insert(u, v);
                path_.emplace_back(u, v);
                ok = run(k - 1);
                if (!ok) path_.pop_back();
                g_.flip(u, v);
                // sibling branches may assume this pair stays untouched
                decided.emplace_back(u, v);
            }
        for (auto [u, v] : decided) fixed_.erase(u, v);
        return ok;
    }

    std::vector<Pair> path_;

private:
    const EditInstance& inst_;
    const SmallGraph& h_;
    SmallGraph g_;
    PairSet fixed_;
};

}  // namespace

Solution solve(const EditInstance& inst, const SmallGraph& h, const SolveLimits& lim)
{
    check_limits(inst, h, lim);
    Brancher b(inst, h);
    Solution s;
    s.feasible = b.run(inst.k);
    if (s.feasible) s.witness = b.path_;
    return s;
}

Solution solve_exhaustive(const EditInstance& inst, const SmallGraph& h, const SolveLimits& lim)
{
    validate(inst);
    if (h.n() == 0) throw std::invalid_argument("pattern graph must have at least one vertex");
    std::vector<Pair> cand;
    for (int u = 0; u < inst.g.n(); ++u)
        for (int v = u + 1; v < inst.g.n(); ++v)
            if (permissible(inst, inst.g, u, v)) cand.emplace_back(u, v);
    const int m = static_cast<int>(cand.size());
    const int kk = std::min(inst.k, m);
    // number of subsets of size <= k
    long double total = 0, term = 1;
    for (int i = 0; i <= kk; ++i) {
        total += term;
        term = term * (m - i) / (i + 1);
    }
    if (total > static_cast<long double>(lim.max_subsets))
        throw std::length_error("solve_exhaustive: " + std::to_string(static_cast<double>(total)) + " subsets exceed guardrail");

    SmallGraph g = inst.g;
    std::vector<int> pick;
    Solution s;
    // subsets in order of size, lexicographic within a size
    for (int size = 0; size <= kk && !s.feasible; ++size) {
        pick.resize(size);
        for (int i = 0; i < size; ++i) pick[i] = i;
        for (;;) {
            for (int i : pick) g.flip(cand[i].first, cand[i].second);
            bool free = !contains_induced(g, h);
            for (int i : pick) g.flip(cand[i].first, cand[i].second);
            if (free) {
                s.feasible = true;
                for (int i : pick) s.witness.push_back(cand[i]);
                break;
            }
            int i = size - 1;
            while (i >= 0 && pick[i] == m - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return s;
}

bool witness_valid(const EditInstance& inst, const SmallGraph& h, const std::vector<Pair>& witness)
{
    if (static_cast<int>(witness.size()) > inst.k) return false;
    SmallGraph g = inst.g;
    PairSet seen;
    for (auto [u, v] : witness) {
        if (u == v || u < 0 || v < 0 || u >= g.n() || v >= g.n()) return false;
        if (seen.contains(u, v) || !permissible(inst, inst.g, u, v)) return false;
        seen.insert(u, v);
        g.flip(u, v);
    }
    return !contains_induced(g, h);
}

}  // namespace hfree
