#include "fairdiv/elim.hpp"

#include "fairdiv/errors.hpp"

#include <algorithm>

namespace fairdiv {

Allocation remove_wasted(const Instance& inst, Allocation alloc) {
    if (auto findings = validate_allocation(inst, alloc); !findings.empty())
        throw InputError("malformed allocation: " + findings.front());
    for (int i = 0; i < inst.agents(); ++i) {
        for (auto it = alloc.bundles[i].begin(); it != alloc.bundles[i].end();) {
            if (is_wasted(inst, i, *it)) {
                alloc.pool.insert(*it);
                it = alloc.bundles[i].erase(it);
            } else {
                ++it;
            }
        }
    }
    return alloc;
}

Configuration envy_eliminate(const Instance& inst, Allocation alloc) {
    Allocation work = remove_wasted(inst, std::move(alloc));
    const int n = inst.agents();

    std::vector<bool> assigned(n, false);
    std::vector<std::vector<int>> groups;

    // Unassigned bundles are untouched until their owner joins a group,
    // so own values can be tracked lazily.
    auto value_of = [&](int i) { return bundle_value(inst, i, work.bundles[i]); };

    int placed = 0;
    while (placed < n) {
        int seed = -1;
        Value seed_value;
        for (int i = 0; i < n; ++i) {
            if (assigned[i]) continue;
            const Value v = value_of(i);
            if (seed == -1 || v < seed_value) {
                seed = i;
                seed_value = v;
            }
        }

        std::vector<int> group{seed};
        assigned[seed] = true;
        ++placed;

        // Pull in agents envied by a group member above the seed value,
        // scanning members then candidates in ascending index, restarting
        // after every addition. `group` stays sorted so the member scan
        // order is by agent index, not insertion order.
        for (bool grew = true; grew;) {
            grew = false;
            for (std::size_t jj = 0; jj < group.size() && !grew; ++jj) {
                const int j = group[jj];
                for (int i = 0; i < n && !grew; ++i) {
                    if (assigned[i]) continue;
                    if (bundle_value(inst, j, work.bundles[i]) <= seed_value) continue;
                    const GoodSet kept = top_set(inst, j, work.bundles[i], seed_value);
                    for (int g : work.bundles[i])
                        if (!kept.count(g)) work.pool.insert(g);
                    work.bundles[i] = kept;
                    group.push_back(i);
                    std::sort(group.begin(), group.end());
                    assigned[i] = true;
                    ++placed;
                    grew = true;
                }
            }
        }
        groups.push_back(std::move(group));
    }
    return make_configuration(inst, std::move(work), std::move(groups));
}

} // namespace fairdiv
