#include "fairdiv/fairness.hpp"

#include "fairdiv/errors.hpp"

#include <algorithm>

namespace fairdiv {

namespace {

/// The `count` goods of S the agent values least, ties by good index.
/// This is the worst-case removal set: it maximizes the residual value.
GoodSet min_value_subset(const Instance& inst, int agent, const GoodSet& S, int count) {
    std::vector<int> order(S.begin(), S.end());
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return inst.agent_value(agent, a) < inst.agent_value(agent, b);
    });
    return GoodSet(order.begin(), order.begin() + count);
}

Value residual_value(const Instance& inst, int agent, const GoodSet& S, const GoodSet& removed) {
    Value total;
    for (int g : S)
        if (!removed.count(g)) total += inst.agent_value(agent, g);
    return total;
}

void require_structure(const Instance& inst, const Allocation& alloc) {
    if (static_cast<int>(alloc.bundles.size()) != inst.agents())
        throw InputError("allocation does not match instance agent count");
}

} // namespace

CheckResult check_efkx(const Instance& inst, const Allocation& alloc, int k) {
    return check_c_efkx(inst, alloc, k, Value{1});
}

CheckResult check_c_efkx(const Instance& inst, const Allocation& alloc, int k, const Value& c) {
    if (k < 0) throw InputError("negative k");
    if (c.is_zero() || c > Value{1}) throw InputError("approximation factor must satisfy 0 < c <= 1");
    require_structure(inst, alloc);

    for (int i = 0; i < inst.agents(); ++i) {
        const Value own = bundle_value(inst, i, alloc.bundles[i]);
        for (int j = 0; j < inst.agents(); ++j) {
            if (i == j) continue;
            const GoodSet& other = alloc.bundles[j];
            const int take = std::min<int>(k, static_cast<int>(other.size()));
            const GoodSet removed = min_value_subset(inst, i, other, take);
            const Value rhs = c * residual_value(inst, i, other, removed);
            if (own < rhs) return Violation{i, j, removed, own, rhs};
        }
    }
    return std::nullopt;
}

CheckResult check_efx_plus(const Instance& inst, const Allocation& alloc) {
    require_structure(inst, alloc);
    for (int i = 0; i < inst.agents(); ++i) {
        const Value own = bundle_value(inst, i, alloc.bundles[i]);
        for (int j = 0; j < inst.agents(); ++j) {
            if (i == j) continue;
            // Worst allowed removal: the least valuable good i still values.
            int worst = -1;
            for (int g : alloc.bundles[j]) {
                if (inst.agent_value(i, g).is_zero()) continue;
                if (worst < 0 || inst.agent_value(i, g) < inst.agent_value(i, worst)) worst = g;
            }
            if (worst < 0) continue; // i values nothing in X_j: nothing to check
            const Value rhs = residual_value(inst, i, alloc.bundles[j], GoodSet{worst});
            if (own < rhs) return Violation{i, j, GoodSet{worst}, own, rhs};
        }
    }
    return std::nullopt;
}

CheckResult check_ef(const Instance& inst, const Allocation& alloc) {
    return check_efkx(inst, alloc, 0);
}

CheckResult check_ef1(const Instance& inst, const Allocation& alloc) {
    require_structure(inst, alloc);
    for (int i = 0; i < inst.agents(); ++i) {
        const Value own = bundle_value(inst, i, alloc.bundles[i]);
        for (int j = 0; j < inst.agents(); ++j) {
            if (i == j) continue;
            const GoodSet& other = alloc.bundles[j];
            // Best single removal: the good i values most, ties by index.
            int best = -1;
            for (int g : other)
                if (best < 0 || inst.agent_value(i, g) > inst.agent_value(i, best)) best = g;
            GoodSet removed;
            if (best >= 0) removed.insert(best);
            const Value rhs = residual_value(inst, i, other, removed);
            if (own < rhs) return Violation{i, j, removed, own, rhs};
        }
    }
    return std::nullopt;
}

std::vector<std::pair<int, int>> check_nonwasteful(const Instance& inst, const Allocation& alloc,
                                                   const std::set<int>& exempt) {
    require_structure(inst, alloc);
    std::vector<std::pair<int, int>> wasted;
    for (int i = 0; i < inst.agents(); ++i) {
        if (exempt.count(i)) continue;
        for (int g : alloc.bundles[i])
            if (is_wasted(inst, i, g)) wasted.emplace_back(i, g);
    }
    return wasted;
}

std::optional<Allocation> check_pareto_bruteforce(const Instance& inst, const Allocation& alloc,
                                                  std::uint64_t cap) {
    require_structure(inst, alloc);
    const int n = inst.agents();
    const int m = inst.goods();

    std::uint64_t total = 1;
    for (int g = 0; g < m; ++g) {
        total *= static_cast<std::uint64_t>(n);
        if (total > cap) throw InputError("instance too large for brute-force Pareto check");
    }

    std::vector<Value> base(n);
    for (int i = 0; i < n; ++i) base[i] = bundle_value(inst, i, alloc.bundles[i]);

    std::vector<int> digits(m, 0);
    while (true) {
        std::vector<Value> vals(n);
        for (int g = 0; g < m; ++g) vals[digits[g]] += inst.agent_value(digits[g], g);

        bool weakly = true, strictly = false;
        for (int i = 0; i < n && weakly; ++i) {
            if (vals[i] < base[i]) weakly = false;
            else if (vals[i] > base[i]) strictly = true;
        }
        if (weakly && strictly) {
            Allocation out;
            out.bundles.assign(n, {});
            for (int g = 0; g < m; ++g) out.bundles[digits[g]].insert(g);
            return out;
        }

        int pos = m - 1;
        while (pos >= 0 && digits[pos] == n - 1) digits[pos--] = 0;
        if (pos < 0) break;
        ++digits[pos];
    }
    return std::nullopt;
}

bool strongly_envies(const Instance& inst, const Allocation& alloc, int i, int j) {
    require_structure(inst, alloc);
    inst.require_agent(i);
    inst.require_agent(j);
    if (alloc.bundles[j].empty()) return false;
    const Value own = bundle_value(inst, i, alloc.bundles[i]);
    const Value other = bundle_value(inst, i, alloc.bundles[j]);
    return other > own + min_removal_value(inst, i, alloc.bundles[j], 1);
}

} // namespace fairdiv
