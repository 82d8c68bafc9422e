#pragma once

#include "fairdiv/allocation.hpp"
#include "fairdiv/instance.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace testutil {

/// Instance from (id, rational-literal) good specs and per-agent interest
/// lists given by good id.
inline fairdiv::Instance make_instance(
    int agents, const std::vector<std::pair<std::string, std::string>>& goods,
    const std::vector<std::vector<std::string>>& interest) {
    std::vector<fairdiv::GoodSpec> specs;
    specs.reserve(goods.size());
    for (const auto& [id, value] : goods) specs.push_back({id, fairdiv::Value::parse(value)});

    auto index_of = [&](const std::string& id) {
        for (std::size_t g = 0; g < specs.size(); ++g)
            if (specs[g].id == id) return static_cast<int>(g);
        throw std::logic_error("test fixture references unknown good id: " + id);
    };
    std::vector<std::vector<int>> sets(interest.size());
    for (std::size_t i = 0; i < interest.size(); ++i)
        for (const std::string& id : interest[i]) sets[i].push_back(index_of(id));
    return fairdiv::Instance(agents, std::move(specs), sets);
}

/// Two agents, three goods: g1 worth 2 to both, g2 worth 1 to agent 0
/// only, g3 worth 1 to agent 1 only.
inline fairdiv::Instance two_agent_fixture() {
    return make_instance(2, {{"g1", "2"}, {"g2", "1"}, {"g3", "1"}},
                         {{"g1", "g2"}, {"g1", "g3"}});
}

inline fairdiv::GoodSet ids(const fairdiv::Instance& inst, const std::vector<std::string>& names) {
    fairdiv::GoodSet out;
    for (const std::string& id : names) out.insert(inst.good_index(id));
    return out;
}

/// Allocation from per-agent id lists; everything unmentioned is pooled.
inline fairdiv::Allocation alloc_of(const fairdiv::Instance& inst,
                                    const std::vector<std::vector<std::string>>& bundles) {
    fairdiv::Allocation out = fairdiv::Allocation::empty_of(inst);
    if (bundles.size() != out.bundles.size())
        throw std::logic_error("test fixture bundle count does not match the instance");
    for (std::size_t i = 0; i < bundles.size(); ++i) {
        for (const std::string& id : bundles[i]) {
            const int g = inst.good_index(id);
            out.pool.erase(g);
            out.bundles[i].insert(g);
        }
    }
    return out;
}

} // namespace testutil
