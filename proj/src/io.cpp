#include "fairdiv/io.hpp"

#include "fairdiv/errors.hpp"

#include <nlohmann/json.hpp>

namespace fairdiv {

using nlohmann::json;

namespace {

const json& need(const json& j, const char* key, const char* where) {
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string(where) + " is missing key '" + key + "'");
    return j.at(key);
}

Value value_from_json(const json& j) {
    if (j.is_string()) return Value::parse(j.get<std::string>());
    if (j.is_number_unsigned()) return Value{j.get<unsigned long long>()};
    if (j.is_number_integer()) {
        const long long v = j.get<long long>();
        if (v < 0) throw InputError("negative value in input");
        return Value{v};
    }
    if (j.is_number_float())
        throw InputError("fractional values must be written as strings (\"3.25\" or \"13/4\") "
                         "to stay exact");
    throw InputError("value must be a string or a non-negative integer");
}

json ids_of(const Instance& inst, const GoodSet& S) {
    json out = json::array();
    for (int g : S) out.push_back(inst.good_id(g));
    return out;
}

} // namespace

json instance_to_json(const Instance& inst) {
    json goods = json::array();
    for (int g = 0; g < inst.goods(); ++g)
        goods.push_back({{"id", inst.good_id(g)}, {"value", inst.inherent_value(g).str()}});

    json interest = json::array();
    for (int i = 0; i < inst.agents(); ++i) {
        json row = json::array();
        for (int g = 0; g < inst.goods(); ++g)
            if (inst.interested(i, g)) row.push_back(inst.good_id(g));
        interest.push_back(std::move(row));
    }
    return {{"agents", inst.agents()}, {"goods", std::move(goods)}, {"interest", std::move(interest)}};
}

Instance instance_from_json(const json& j) {
    const json& agents = need(j, "agents", "instance");
    if (!agents.is_number_integer() || agents.get<long long>() < 1)
        throw InputError("'agents' must be a positive integer");
    const int n = agents.get<int>();

    const json& goods_j = need(j, "goods", "instance");
    if (!goods_j.is_array()) throw InputError("'goods' must be an array");
    std::vector<GoodSpec> goods;
    goods.reserve(goods_j.size());
    for (const json& g : goods_j) {
        const json& id = need(g, "id", "good");
        if (!id.is_string()) throw InputError("good id must be a string");
        goods.push_back({id.get<std::string>(), value_from_json(need(g, "value", "good"))});
    }

    const json& interest_j = need(j, "interest", "instance");
    if (!interest_j.is_array() || static_cast<int>(interest_j.size()) != n)
        throw InputError("'interest' must list one array per agent");

    // Ids resolve against the goods array just read.
    std::vector<std::vector<int>> interest(n);
    Instance probe(n, goods, interest); // id table for lookup, interests come next
    for (int i = 0; i < n; ++i) {
        if (!interest_j[i].is_array()) throw InputError("interest rows must be arrays");
        for (const json& id : interest_j[i]) {
            if (!id.is_string()) throw InputError("interest entries must be good ids");
            interest[i].push_back(probe.good_index(id.get<std::string>()));
        }
    }
    return Instance(n, std::move(goods), interest);
}

json allocation_to_json(const Instance& inst, const Allocation& alloc) {
    json bundles = json::array();
    for (const GoodSet& b : alloc.bundles) bundles.push_back(ids_of(inst, b));
    return {{"bundles", std::move(bundles)}, {"pool", ids_of(inst, alloc.pool)}};
}

Allocation allocation_from_json(const Instance& inst, const json& j) {
    const json& bundles = need(j, "bundles", "allocation");
    if (!bundles.is_array() || static_cast<int>(bundles.size()) != inst.agents())
        throw InputError("'bundles' must list one array per agent");

    Allocation out;
    out.bundles.assign(inst.agents(), {});
    std::vector<bool> mentioned(inst.goods(), false);
    auto resolve = [&](const json& id) {
        if (!id.is_string()) throw InputError("allocation entries must be good ids");
        const int g = inst.good_index(id.get<std::string>());
        mentioned[g] = true;
        return g;
    };
    for (int i = 0; i < inst.agents(); ++i)
        for (const json& id : bundles[i]) out.bundles[i].insert(resolve(id));

    if (j.contains("pool")) {
        for (const json& id : j.at("pool")) out.pool.insert(resolve(id));
    } else {
        for (int g = 0; g < inst.goods(); ++g)
            if (!mentioned[g]) out.pool.insert(g);
    }
    return out;
}

json phi_to_json(const PhiVector& v) {
    json out = json::array();
    for (const Value& r : v.rep_values) out.push_back(r.str());
    out.push_back(v.nonrep_size_total);
    out.push_back(v.rep_size_total);
    return out;
}

PhiVector phi_from_json(const json& j) {
    if (!j.is_array() || j.size() < 2) throw InputError("potential must be an array of >= 2 entries");
    PhiVector out;
    std::size_t idx = 0;
    for (; idx < j.size() && j[idx].is_string(); ++idx)
        out.rep_values.push_back(Value::parse(j[idx].get<std::string>()));
    if (j.size() - idx != 2)
        throw InputError("potential must end with exactly two size totals");
    const auto is_size = [](const json& e) {
        return e.is_number_integer() && e.get<long long>() >= 0;
    };
    if (!is_size(j[idx]) || !is_size(j[idx + 1]))
        throw InputError("potential size totals must be non-negative integers");
    out.nonrep_size_total = j[idx].get<std::size_t>();
    out.rep_size_total = j[idx + 1].get<std::size_t>();
    return out;
}

namespace {

json witness_to_json(const Instance& inst, const RuleWitness& w) {
    return std::visit(
        [&](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, U0Witness>)
                return {{"good", inst.good_id(v.good)}, {"group", v.group}};
            else if constexpr (std::is_same_v<T, U1Witness>) {
                json cycle = json::array();
                for (const CycleEdge& e : v.cycle)
                    cycle.push_back({{"from", e.from},
                                     {"to", e.to},
                                     {"label", e.good < 0 ? json() : json(inst.good_id(e.good))}});
                return {{"cycle", std::move(cycle)}};
            } else if constexpr (std::is_same_v<T, U2Witness>)
                return {{"group", v.group}, {"good", inst.good_id(v.good)}};
            else if constexpr (std::is_same_v<T, U3Witness>)
                return {{"agent", v.agent},
                        {"witness", v.witness_agent},
                        {"good", inst.good_id(v.good)}};
            else if constexpr (std::is_same_v<T, U4Witness>)
                return {{"champion", v.champion}, {"path", v.path}};
            else
                return {{"agent", v.agent}, {"good", inst.good_id(v.good)}};
        },
        w);
}

const char* rule_label(RuleId rule) {
    switch (rule) {
        case RuleId::U0: return "U0";
        case RuleId::U1: return "U1";
        case RuleId::U2: return "U2";
        case RuleId::U3: return "U3";
        case RuleId::U4: return "U4";
        case RuleId::Phase: return "phase";
    }
    return "?";
}

} // namespace

json trace_to_json(const Instance& inst, const std::vector<RuleTrace>& trace) {
    json out = json::array();
    for (const RuleTrace& t : trace)
        out.push_back({{"rule", rule_label(t.rule)},
                       {"witness", witness_to_json(inst, t.witness)},
                       {"phi", phi_to_json(t.phi_after)}});
    return out;
}

json violation_to_json(const Instance& inst, const Violation& v) {
    return {{"envier", v.envier},
            {"envied", v.envied},
            {"removed", ids_of(inst, v.removed)},
            {"lhs", v.lhs.str()},
            {"rhs", v.rhs.str()}};
}

json solve_output_json(const Instance& inst, const Allocation& alloc,
                       const std::vector<RuleTrace>& trace) {
    json out = allocation_to_json(inst, alloc);
    out["certificates"] = {{"efx", !check_efkx(inst, alloc, 1).has_value()},
                           {"ef2x", !check_efkx(inst, alloc, 2).has_value()},
                           {"efx_plus", !check_efx_plus(inst, alloc).has_value()},
                           {"nonwasteful", check_nonwasteful(inst, alloc).empty()}};
    out["trace"] = trace_to_json(inst, trace);
    return out;
}

TraceCheck validate_trace_json(const json& trace_array) {
    if (!trace_array.is_array()) throw InputError("trace must be an array");
    TraceCheck check;
    bool have_prev = false;
    PhiVector prev;
    std::size_t index = 0;
    for (const json& entry : trace_array) {
        const json& rule = need(entry, "rule", "trace entry");
        if (!rule.is_string()) throw InputError("trace rule must be a string");
        if (rule.get<std::string>() == "phase") {
            ++check.phase_steps;
            ++index;
            continue;
        }
        const PhiVector current = phi_from_json(need(entry, "phi", "trace entry"));
        ++check.rule_steps;
        if (have_prev && check.ok &&
            phi_compare(current, prev) != Ordering::Greater) {
            check.ok = false;
            check.detail = "potential did not increase at trace entry " + std::to_string(index);
        }
        prev = current;
        have_prev = true;
        ++index;
    }
    return check;
}

} // namespace fairdiv
