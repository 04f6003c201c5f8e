#include "hfree/classifier.hpp"

#include <array>
#include <map>
#include <set>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "hfree/canon.hpp"

namespace hfree {

std::string to_string(Problem p)
{
    switch (p) {
    case Problem::Editing: return "editing";
    case Problem::Deletion: return "deletion";
    case Problem::Completion: return "completion";
    }
    return "?";
}

Problem problem_from_string(const std::string& s)
{
    if (s == "edit" || s == "editing") return Problem::Editing;
    if (s == "del" || s == "delete" || s == "deletion") return Problem::Deletion;
    if (s == "comp" || s == "complete" || s == "completion") return Problem::Completion;
    throw std::invalid_argument("unknown problem '" + s + "' (expected edit, del or comp)");
}

std::string to_string(CellType t)
{
    switch (t) {
    case CellType::Complete: return "complete";
    case CellType::Empty: return "empty";
    case CellType::YPrime: return "small";
    case CellType::NearEmpty: return "near-empty";
    }
    return "?";
}

std::string to_string(Status s)
{
    switch (s) {
    case Status::PolyKernel: return "PolyKernel";
    case Status::Incompressible: return "Incompressible";
    case Status::OpenCatalogue: return "OpenCatalogue";
    case Status::ClawExcluded: return "ClawExcluded";
    case Status::Unclassified: return "Unclassified";
    }
    return "?";
}

std::optional<std::string> yprime_name(const SmallGraph& g)
{
    static const auto table = [] {
        std::map<CanonicalForm, std::string> m;
        for (const char* id : {"P3", "co-P3", "P4", "claw", "co-claw", "paw", "co-paw", "diamond", "co-diamond"})
            m.emplace(canonical_form(lookup(id).graph), id);
        return m;
    }();
    if (g.n() < 3 || g.n() > 4) return std::nullopt;
    auto it = table.find(canonical_form(g));
    if (it == table.end()) return std::nullopt;
    return it->second;
}

namespace {

bool near_empty_big(const SmallGraph& g) { return g.n() >= 5 && is_near_empty(g); }

std::string xd_reason(const SmallGraph& g)
{
    const int n = g.n();
    const SmallGraph c = complement(g);
    if (n >= 4 && is_cycle(g)) return "cycle length>=4";
    if (n >= 4 && is_cycle(c)) return "complement of cycle length>=4";
    if (n >= 5 && is_path(g)) return "path length>=5";
    if (n >= 5 && is_path(c)) return "complement of path length>=5";
    if (is_regular(g) && !is_complete(g) && !is_empty(g)) return "regular non-trivial";
    if (!is_complete(g) && is_3_connected(g)) return "3-connected non-complete";
    if (g.edge_count() >= 2 && is_3_connected(c)) return "complement 3-connected";
    return {};
}

std::string y_reason(const SmallGraph& g)
{
    if (is_complete(g)) return "complete";
    if (is_empty(g)) return "empty";
    if (auto y = yprime_name(g)) return *y;
    return {};
}

}  // namespace

SetMembership set_membership(const SmallGraph& g)
{
    SetMembership m;
    std::string xd = xd_reason(g);
    std::string y = y_reason(g);
    bool ne = near_empty_big(g);
    m.in_XD = !xd.empty();
    m.in_XE = m.in_XD || ne;
    m.in_YE = !y.empty();
    m.in_YD = m.in_YE || ne;
    m.in_Yprime = yprime_name(g).has_value();
    if (!xd.empty())
        m.witness = xd;
    else if (!y.empty())
        m.witness = y;
    else if (ne)
        m.witness = "one edge >=5 vertices";
    return m;
}

bool in_XD(const SmallGraph& g) { return !xd_reason(g).empty(); }
bool in_XE(const SmallGraph& g) { return in_XD(g) || near_empty_big(g); }
bool in_YE(const SmallGraph& g) { return !y_reason(g).empty(); }
bool in_YD(const SmallGraph& g) { return in_YE(g) || near_empty_big(g); }

std::optional<CellType> cell_type(const SmallGraph& g)
{
    if (is_complete(g)) return CellType::Complete;
    if (is_empty(g)) return CellType::Empty;
    if (yprime_name(g)) return CellType::YPrime;
    if (near_empty_big(g)) return CellType::NearEmpty;
    return std::nullopt;
}

ChurnResult churn(const SmallGraph& g)
{
    ChurnResult res{g, {}};
    while (true) {
        auto dp = degree_partition(res.result);
        if (!dp) return res;
        SmallGraph low = delete_vertices(res.result, dp->v_low);
        SmallGraph high = delete_vertices(res.result, dp->v_high);
        if (!in_YD(low)) {
            res.trace.push_back({true, res.result, low});
            res.result = low;
        } else if (!in_YD(high)) {
            res.trace.push_back({false, res.result, high});
            res.result = high;
        } else {
            return res;
        }
    }
}

namespace {

std::string flip_name(const std::string& name)
{
    if (name.empty()) return name;
    return name.starts_with("co-") ? name.substr(3) : "co-" + name;
}

std::string display_name(const SmallGraph& g)
{
    auto n = name_of(g);
    return n.empty() ? to_graph6(g) : n;
}

Verdict terminal_verdict(const SmallGraph& term, Problem p)
{
    Verdict v;
    v.problem = p;
    if (in_XD(term)) {
        v.status = Status::Incompressible;
        v.reason = "reaches X_D member (" + xd_reason(term) + ")";
        return v;
    }
    auto w = membership_W(term);
    if (!w || !in_W_prime(*w)) {
        v.status = Status::Unclassified;
        v.reason = "chain ends outside the finite refinement";
        return v;
    }
    const std::string name = (w->complement ? "co-" : "") + w->id;
    if (w->constituent == "H" || (w->constituent == "D" && p == Problem::Deletion)) {
        v.status = Status::OpenCatalogue;
        v.open_member = name;
        v.reason = "open case " + name;
    } else if (w->constituent == "A") {
        v.status = Status::Incompressible;
        v.reason = "two-connected hard graph " + name;
    } else if (w->constituent == "B") {
        v.status = Status::Incompressible;
        v.reason = p == Problem::Editing ? "two-connected hard graph " + name + " (editing via its complement)"
                                         : "two-connected hard graph " + name;
    } else {
        v.status = Status::Incompressible;
        v.reason = "deletion-open graph " + name + " (editing via reduction from the one-edge 5-vertex graph)";
    }
    return v;
}

int strength(Status s)
{
    switch (s) {
    case Status::Incompressible: return 2;
    case Status::OpenCatalogue: return 1;
    default: return 0;
    }
}

// Depth-first over the low/high peels. A branch is entered when the peeled
// graph is not easy; the first hard branch wins, otherwise the first open one.
class Explorer {
public:
    explicit Explorer(Problem p) : p_(p), editing_(p == Problem::Editing) {}

    Verdict run(const SmallGraph& g)
    {
        Verdict v = visit(g);
        v.problem = p_;
        return v;
    }

private:
    Verdict visit(const SmallGraph& cur)
    {
        Verdict v;
        if (!seen_.insert(canonical_form(cur)).second) {
            v.reason = "already explored";
            return v;
        }
        std::string xr = xd_reason(cur);
        if (xr.empty() && editing_ && near_empty_big(cur)) xr = "one edge >=5 vertices";
        if (!xr.empty()) {
            v.status = Status::Incompressible;
            v.reason = "X member (" + xr + ")";
            return v;
        }
        if (membership_W(cur)) {
            try {
                v.chain = derive_chain(cur);
                SmallGraph term = v.chain.empty() ? cur : v.chain.back().to;
                Verdict t = terminal_verdict(term, p_);
                v.status = t.status;
                v.reason = t.reason;
                v.open_member = t.open_member;
            } catch (const std::exception& e) {
                v.status = Status::Unclassified;
                v.reason = std::string("chain table: ") + e.what();
                v.chain.clear();
            }
            if (v.status == Status::Incompressible) return v;
        }
        for (Rule side : {Rule::Low, Rule::High}) {
            auto st = make_step(side, cur, false);
            if (!st || (editing_ ? in_YE(st->to) : in_YD(st->to))) continue;
            Verdict sub = visit(st->to);
            if (strength(sub.status) <= strength(v.status)) continue;
            sub.chain.insert(sub.chain.begin(), *st);
            v = std::move(sub);
            if (v.status == Status::Incompressible) return v;
        }
        if (v.status == Status::Unclassified && v.reason.empty())
            v.reason = "churn stops outside X and the catalogue union";
        return v;
    }

    Problem p_;
    bool editing_;
    std::set<CanonicalForm> seen_;
};

Verdict easy_verdict(const SmallGraph& g, Problem p)
{
    Verdict v;
    v.problem = p;
    auto y = yprime_name(g);
    if (y && (*y == "claw" || *y == "co-claw")) {
        v.status = Status::ClawExcluded;
        v.reason = "excluded from the conjecture (" + *y + ")";
        return v;
    }
    v.status = Status::PolyKernel;
    std::string why = y_reason(g);
    if (why.empty())
        v.reason = "one edge >=5 vertices, polynomial kernel for deletion";
    else if (why == "complete" || why == "empty")
        v.reason = "trivial kernel (" + why + ")";
    else
        v.reason = "small graph kernel (" + why + ")";
    return v;
}

// Same verdict read on the complement side: chain graphs complemented and
// names recomputed.
Verdict complemented(Verdict d, Problem p, const std::string& prefix)
{
    Verdict v;
    v.problem = p;
    v.status = d.status;
    v.open_member = flip_name(d.open_member);
    v.reason = prefix + d.reason;
    for (auto st : d.chain) {
        st.from = complement(st.from);
        st.to = complement(st.to);
        st.from_name = display_name(st.from);
        st.to_name = display_name(st.to);
        st.via_complement = !st.via_complement;
        v.chain.push_back(std::move(st));
    }
    return v;
}

Verdict classify_direct(const SmallGraph& g, Problem p)
{
    if (p == Problem::Editing ? in_YE(g) : in_YD(g)) return easy_verdict(g, p);
    Verdict v = Explorer(p).run(g);
    if (p == Problem::Editing && v.status != Status::Incompressible) {
        // editing is complement-invariant; a hard route from the complement counts
        Verdict c = Explorer(p).run(complement(g));
        if (strength(c.status) > strength(v.status)) v = complemented(std::move(c), p, "via complement: ");
    }
    return v;
}

constexpr std::size_t kMemoCap = 1 << 17;

struct Memo {
    std::shared_mutex mu;
    std::array<std::unordered_map<CanonicalForm, Verdict, CanonicalHash>, 2> maps;
};

Memo& memo()
{
    static Memo m;
    return m;
}

Verdict classify_cached(const SmallGraph& g, Problem p)
{
    const SmallGraph cg = canonical_graph(g);
    const CanonicalForm key = canonical_form(cg);
    auto& m = memo();
    const auto slot = static_cast<std::size_t>(p);
    {
        std::shared_lock lock(m.mu);
        auto it = m.maps[slot].find(key);
        if (it != m.maps[slot].end()) return it->second;
    }
    Verdict v = classify_direct(cg, p);
    std::unique_lock lock(m.mu);
    if (m.maps[slot].size() >= kMemoCap) m.maps[slot].clear();
    m.maps[slot][key] = v;
    return v;
}

}  // namespace

Verdict classify(const SmallGraph& g, Problem p)
{
    if (p != Problem::Completion) return classify_cached(g, p);
    return complemented(classify_cached(complement(g), Problem::Deletion), Problem::Completion,
                        "complement of deletion verdict: ");
}

}  // namespace hfree
