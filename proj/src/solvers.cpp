#include "fairdiv/solvers.hpp"

#include "fairdiv/errors.hpp"

#include <algorithm>

namespace fairdiv {

namespace {

struct RuleLoop {
    const Instance& inst;
    const SolveOptions& opts;
    Configuration config;
    std::vector<RuleTrace> trace;
    std::size_t steps = 0;

    void take(RuleStep step) {
        if (++steps > opts.step_cap)
            throw InternalError("rule loop exceeded its step budget of " +
                                std::to_string(opts.step_cap));
        trace.push_back(std::move(step.second));
        config = std::move(step.first);
    }

    /// Runs the given rule set (by minimum index) to quiescence.
    void run(bool with_u3, bool with_u4) {
        for (;;) {
            if (auto w = u0_find(inst, config)) {
                take(u0_apply(inst, config, *w));
                continue;
            }
            const ChampionGraph graph = build_champion_graph(inst, config);
            if (auto w = u1_find_cycle(inst, config, graph, opts.cycle_expansion_cap)) {
                take(u1_apply(inst, config, *w));
                continue;
            }
            if (auto w = u2_find(inst, config)) {
                take(u2_apply(inst, config, *w));
                continue;
            }
            if (with_u3) {
                if (auto w = u3_find(inst, config, graph)) {
                    take(u3_apply(inst, config, *w));
                    continue;
                }
            }
            if (with_u4) {
                if (auto w = u4_find(inst, config, graph)) {
                    take(u4_apply(inst, config, *w));
                    continue;
                }
            }
            break;
        }
        // Quiescence with U0 and U1 dead implies a pool smaller than the
        // number of groups.
        if (config.alloc.pool.size() >= static_cast<std::size_t>(config.group_count()))
            throw InternalError("rule loop stopped with pool size " +
                                std::to_string(config.alloc.pool.size()) +
                                " not below the group count " +
                                std::to_string(config.group_count()));
    }
};

} // namespace

SolveResult solve_ef2x(const Instance& inst, const SolveOptions& opts) {
    RuleLoop loop{inst, opts, singleton_configuration(inst, Allocation::empty_of(inst)), {}};
    loop.run(/*with_u3=*/true, /*with_u4=*/false);

    const Configuration exit_config = loop.config;
    const PhiVector exit_phi = phi(inst, exit_config);
    const std::vector<int> dist =
        regular_distances(exit_config, build_champion_graph(inst, exit_config));

    Allocation work = exit_config.alloc;
    std::vector<bool> fresh(inst.agents(), true);
    auto note_phase = [&](int agent, int good) {
        work.pool.erase(good);
        work.bundles[agent].insert(good);
        fresh[agent] = false;
        loop.trace.push_back({RuleId::Phase, PhaseWitness{agent, good}, exit_phi, exit_phi});
    };

    // Farthest members of the last groups first; every receiver takes its
    // single most valued pool good and retires.
    for (int t = exit_config.group_count() - 1; t >= 0; --t) {
        for (;;) {
            int pick = -1;
            for (int i : exit_config.groups[t]) {
                if (!fresh[i] || bundle_value(inst, i, work.pool).is_zero()) continue;
                if (pick == -1 || dist[i] > dist[pick]) pick = i;
            }
            if (pick == -1) break;
            int best = -1;
            for (int g : work.pool)
                if (best == -1 || inst.agent_value(pick, g) > inst.agent_value(pick, best))
                    best = g;
            note_phase(pick, best);
        }
    }

    // Whatever survives is worthless to every agent that has not drawn a
    // good yet; park one good per remaining agent.
    std::vector<int> leftovers(work.pool.begin(), work.pool.end());
    std::vector<int> receivers;
    for (int i = 0; i < inst.agents(); ++i)
        if (fresh[i]) receivers.push_back(i);
    if (leftovers.size() > receivers.size())
        throw InternalError("completion phase ran out of agents for leftover goods");
    for (std::size_t t = 0; t < leftovers.size(); ++t) {
        for (int i : receivers)
            if (!inst.agent_value(i, leftovers[t]).is_zero())
                throw InternalError("leftover pool good '" + inst.good_id(leftovers[t]) +
                                    "' is still valued by a fresh agent");
        note_phase(receivers[t], leftovers[t]);
    }

    if (!work.pool.empty()) throw InternalError("completion phase left the pool non-empty");
    return {std::move(work), std::move(loop.trace), exit_config};
}

SolveResult solve_efx_charity(const Instance& inst, const SolveOptions& opts) {
    RuleLoop loop{inst, opts, singleton_configuration(inst, Allocation::empty_of(inst)), {}};
    loop.run(/*with_u3=*/false, /*with_u4=*/true);
    return {loop.config.alloc, std::move(loop.trace), std::move(loop.config)};
}

Allocation solve_efx_plus(const Instance& inst, bool complete_dump) {
    const int n = inst.agents();
    const int m = inst.goods();

    std::vector<int> order;
    order.reserve(m);
    for (int g = 0; g < m; ++g) order.push_back(g);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return inst.inherent_value(a) > inst.inherent_value(b);
    });

    Allocation out;
    out.bundles.assign(n, {});
    std::vector<Value> running(n);
    for (int g : order) {
        int pick = -1;
        for (int i = 0; i < n; ++i) {
            if (!inst.interested(i, g)) continue;
            if (pick == -1 || running[i] < running[pick]) pick = i;
        }
        if (pick == -1) {
            if (complete_dump) out.bundles[0].insert(g);
            else out.pool.insert(g);
            continue;
        }
        out.bundles[pick].insert(g);
        running[pick] += inst.inherent_value(g);
    }
    return out;
}

} // namespace fairdiv
