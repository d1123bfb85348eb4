#pragma once

#include <nlohmann/json.hpp>

#include "abcvote/search.hpp"

namespace abc {

using Json = nlohmann::ordered_json;

// JSON documents carry only deterministic fields; wall-clock statistics are
// reported on stderr instead so identical invocations stay byte-identical.

Json committee_json(Mask members);
Json profile_json(const ApprovalProfile& p);
Json trace_json(const SelectionTrace& t);
Json rule_result_json(const ApprovalProfile& p, const RuleResult& r,
                      const Rational& score);
Json verdict_json(const AxiomVerdict& v);
Json report_json(const SearchReport& r);

}  // namespace abc
