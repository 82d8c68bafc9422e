#pragma once

#include "fairdiv/fairness.hpp"
#include "fairdiv/rules.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

namespace fairdiv {

/// Wire formats. Goods travel as their string ids, agents as 0-based
/// indices, rationals as canonical strings ("p" or "p/q") so nothing is
/// ever rounded. Instance values may also arrive as JSON integers;
/// fractional JSON numbers are rejected to keep parsing exact.
nlohmann::json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::json& j);

/// {"bundles": [[ids] per agent], "pool": [ids]}. On input the pool key
/// may be omitted and is then inferred as the unmentioned goods.
nlohmann::json allocation_to_json(const Instance& inst, const Allocation& alloc);
Allocation allocation_from_json(const Instance& inst, const nlohmann::json& j);

/// Potential as a flat array: representative values as strings, then the
/// two size totals as integers.
nlohmann::json phi_to_json(const PhiVector& v);
PhiVector phi_from_json(const nlohmann::json& j);

nlohmann::json trace_to_json(const Instance& inst, const std::vector<RuleTrace>& trace);

nlohmann::json violation_to_json(const Instance& inst, const Violation& v);

/// Full solve output: bundles, pool, the four certificates, the trace.
nlohmann::json solve_output_json(const Instance& inst, const Allocation& alloc,
                                 const std::vector<RuleTrace>& trace);

struct TraceCheck {
    bool ok = true;
    std::string detail;        ///< first offence when !ok
    std::size_t rule_steps = 0;
    std::size_t phase_steps = 0;
};

/// Re-validates a serialized trace: the potential must strictly increase
/// across consecutive rule entries. Completion-phase entries are ignored
/// for the ordering.
TraceCheck validate_trace_json(const nlohmann::json& trace_array);

} // namespace fairdiv
