#pragma once

#include <string>

#include <json.hpp>

#include "hfree/classifier.hpp"
#include "hfree/enumeration.hpp"
#include "hfree/gadget_reductions.hpp"
#include "hfree/gadgets.hpp"
#include "hfree/reductions.hpp"
#include "hfree/solver.hpp"

namespace hfree {

using Json = nlohmann::ordered_json;

Json to_json(const ReductionStep& step);
Json to_json(const Verdict& v, const SmallGraph& g);
Json to_json(const ChurnResult& c);
Json to_json(const CampaignReport& r);
CampaignReport campaign_report_from_json(const Json& j);

Json pairs_json(const std::vector<Pair>& ps);
Json to_json(const EditInstance& inst);
Json to_json(const BigInstance& inst);
Json to_json(const Solution& s);
Json to_json(const SComponentReport& r);
Json to_json(const TruthSettingReport& r);
Json to_json(const BasicUnitReport& r);
Json to_json(const EnforcerReport& r);
Json to_json(const RowReport& r);
Json to_json(const ControlReport& r);

// Two-space indented, trailing newline.
std::string dump(const Json& j);

}  // namespace hfree
