#include "hfree/report.hpp"

namespace hfree {

Json to_json(const ReductionStep& step)
{
    Json j;
    j["from"] = to_graph6(step.from);
    j["to"] = to_graph6(step.to);
    j["from_name"] = step.from_name;
    j["to_name"] = step.to_name;
    j["construction"] = to_string(step.construction);
    j["citation"] = to_string(step.rule);
    j["via_complement"] = step.via_complement;
    j["param"] = step.param;
    j["k_map"] = step.k_map;
    return j;
}

Json to_json(const Verdict& v, const SmallGraph& g)
{
    Json j;
    j["graph"] = to_graph6(g);
    j["n"] = g.n();
    j["problem"] = to_string(v.problem);
    j["status"] = to_string(v.status);
    j["reason"] = v.reason;
    if (!v.open_member.empty()) j["open_member"] = v.open_member;
    j["chain"] = Json::array();
    for (auto& st : v.chain) j["chain"].push_back(to_json(st));
    return j;
}

Json to_json(const ChurnResult& c)
{
    Json j;
    j["result"] = to_graph6(c.result);
    j["regular"] = is_regular(c.result);
    j["trace"] = Json::array();
    for (auto& st : c.trace)
        j["trace"].push_back({{"removed", st.low ? "low" : "high"}, {"from", to_graph6(st.from)}, {"to", to_graph6(st.to)}});
    return j;
}

namespace {

template <class M>
Json int_map(const M& m)
{
    Json j = Json::object();
    for (auto& [k, v] : m) j[std::to_string(k)] = v;
    return j;
}

}  // namespace

Json to_json(const CampaignReport& r)
{
    Json j;
    j["campaign"] = r.campaign;
    j["n_max"] = r.n_max;
    j["complete"] = r.complete;
    j["scanned"] = int_map(r.scanned);
    j["hypothesis"] = int_map(r.hypothesis);
    j["cells"] = Json::object();
    for (auto& [k, v] : r.cells) j["cells"][k] = v;
    j["counterexamples"] = r.counterexamples;
    j["exceptions"] = r.exceptions;
    j["completed_levels"] = r.completed_levels;
    j["resume_token"] = r.resume_token;
    j["error"] = r.error;
    j["seconds"] = r.seconds;
    return j;
}

CampaignReport campaign_report_from_json(const Json& j)
{
    CampaignReport r;
    r.campaign = j.at("campaign").get<std::string>();
    r.n_max = j.at("n_max").get<int>();
    r.complete = j.at("complete").get<bool>();
    for (auto& [k, v] : j.at("scanned").items()) r.scanned[std::stoi(k)] = v.get<long long>();
    for (auto& [k, v] : j.at("hypothesis").items()) r.hypothesis[std::stoi(k)] = v.get<long long>();
    for (auto& [k, v] : j.at("cells").items()) r.cells[k] = v.get<long long>();
    r.counterexamples = j.at("counterexamples").get<std::vector<std::string>>();
    r.exceptions = j.at("exceptions").get<std::vector<std::string>>();
    r.completed_levels = j.at("completed_levels").get<std::vector<int>>();
    r.resume_token = j.at("resume_token").get<std::string>();
    r.error = j.at("error").get<std::string>();
    r.seconds = j.at("seconds").get<double>();
    return r;
}

Json pairs_json(const std::vector<Pair>& ps)
{
    Json j = Json::array();
    for (auto [u, v] : ps) j.push_back({u, v});
    return j;
}

Json to_json(const EditInstance& inst)
{
    Json j;
    j["graph"] = to_graph6(inst.g);
    j["n"] = inst.g.n();
    j["k"] = inst.k;
    j["mode"] = to_string(inst.mode);
    j["forbidden"] = pairs_json(inst.forbidden.list());
    return j;
}

Json to_json(const BigInstance& inst)
{
    Json j;
    j["graph"] = to_graph6(inst.g);
    j["n"] = inst.g.n();
    j["edges"] = inst.g.edge_count();
    j["k"] = inst.k;
    j["mode"] = to_string(inst.mode);
    j["allowed"] = pairs_json(inst.allowed);
    return j;
}

Json to_json(const Solution& s)
{
    Json j;
    j["feasible"] = s.feasible;
    j["witness"] = pairs_json(s.witness);
    return j;
}

Json to_json(const SComponentReport& r)
{
    Json j;
    j["ok"] = r.ok;
    j["error"] = r.error;
    Json t = Json::array();
    for (bool b : r.table.f) t.push_back(b ? 1 : 0);
    j["table"] = t;
    return j;
}

Json to_json(const TruthSettingReport& r)
{
    Json j;
    j["ok"] = r.ok;
    j["exhaustive"] = r.exhaustive;
    j["subsets"] = r.subsets;
    j["error"] = r.error;
    return j;
}

Json to_json(const BasicUnitReport& r)
{
    Json j;
    j["ok"] = r.ok;
    j["unit_ok"] = r.unit_ok;
    j["trigger"] = r.trigger;
    j["flipped"] = r.flipped;
    j["ring"] = to_json(r.ring);
    j["error"] = r.error;
    return j;
}

Json to_json(const EnforcerReport& r)
{
    Json j;
    j["exact"] = r.exact;
    j["structural"] = r.structural;
    j["structural_rule"] = r.structural_rule;
    j["falsification"] = r.falsification;
    j["n_host"] = r.n_host;
    j["attachments"] = r.attachments;
    j["counterexample"] = r.counterexample;
    j["passed"] = r.passed();
    return j;
}

Json to_json(const RowReport& r)
{
    Json j;
    j["h"] = r.h_id;
    j["cell"] = r.cell;
    j["passed"] = r.passed;
    if (r.s) j["s_component"] = to_json(*r.s);
    if (r.unit) j["basic_unit"] = to_json(*r.unit);
    if (r.enforcer) j["enforcer"] = to_json(*r.enforcer);
    return j;
}

Json to_json(const ControlReport& r)
{
    return Json{{"name", r.name}, {"failed_as_expected", r.failed_as_expected}, {"detail", r.detail}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hfree
