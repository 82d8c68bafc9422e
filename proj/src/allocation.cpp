#include "fairdiv/allocation.hpp"

#include "fairdiv/errors.hpp"

#include <algorithm>

namespace fairdiv {

Allocation Allocation::empty_of(const Instance& inst) {
    Allocation a;
    a.bundles.assign(inst.agents(), {});
    for (int g = 0; g < inst.goods(); ++g) a.pool.insert(g);
    return a;
}

Value bundle_value(const Instance& inst, int agent, const GoodSet& S) {
    inst.require_agent(agent);
    Value total;
    for (int g : S) total += inst.agent_value(agent, g); // range-checks g
    return total;
}

Value min_removal_value(const Instance& inst, int agent, const GoodSet& S, int count) {
    inst.require_agent(agent);
    if (count < 0) throw InputError("negative removal count");
    if (count > static_cast<int>(S.size()))
        throw InputError("removal count " + std::to_string(count) + " exceeds set size " +
                         std::to_string(S.size()));
    std::vector<Value> vals;
    vals.reserve(S.size());
    for (int g : S) vals.push_back(inst.agent_value(agent, g));
    std::sort(vals.begin(), vals.end());
    Value total;
    for (int i = 0; i < count; ++i) total += vals[i];
    return total;
}

bool is_wasted(const Instance& inst, int agent, int good) {
    return !inst.interested(agent, good);
}

std::vector<std::string> validate_allocation(const Instance& inst, const Allocation& alloc) {
    std::vector<std::string> findings;
    if (static_cast<int>(alloc.bundles.size()) != inst.agents()) {
        findings.push_back("expected " + std::to_string(inst.agents()) + " bundles, got " +
                           std::to_string(alloc.bundles.size()));
        return findings;
    }

    std::vector<int> holders(inst.goods(), 0);
    auto account = [&](int g, const std::string& where) {
        if (g < 0 || g >= inst.goods()) {
            findings.push_back("good index " + std::to_string(g) + " out of range in " + where);
            return;
        }
        if (++holders[g] == 2)
            findings.push_back("good '" + inst.good_id(g) + "' appears more than once");
    };
    for (std::size_t i = 0; i < alloc.bundles.size(); ++i)
        for (int g : alloc.bundles[i]) account(g, "bundle " + std::to_string(i));
    for (int g : alloc.pool) account(g, "pool");

    for (int g = 0; g < inst.goods(); ++g)
        if (holders[g] == 0)
            findings.push_back("good '" + inst.good_id(g) + "' is missing");
    return findings;
}

Value own_value(const Instance& inst, const Allocation& alloc, int agent) {
    inst.require_agent(agent);
    return bundle_value(inst, agent, alloc.bundles[agent]);
}

bool bundles_nonwasteful(const Instance& inst, const Allocation& alloc,
                         const std::set<int>& exempt) {
    for (int i = 0; i < static_cast<int>(alloc.bundles.size()); ++i) {
        if (exempt.count(i)) continue;
        for (int g : alloc.bundles[i])
            if (is_wasted(inst, i, g)) return false;
    }
    return true;
}

} // namespace fairdiv
