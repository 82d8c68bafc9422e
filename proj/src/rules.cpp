#include "fairdiv/rules.hpp"

#include "fairdiv/elim.hpp"
#include "fairdiv/errors.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

namespace fairdiv {

namespace {

const char* rule_name(RuleId rule) {
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

RuleStep finish_step(const Instance& inst, const Configuration& before, Configuration after,
                     RuleId rule, RuleWitness witness) {
    RuleTrace trace{rule, std::move(witness), phi(inst, before), phi(inst, after)};
    if (phi_compare(trace.phi_after, trace.phi_before) != Ordering::Greater)
        throw InternalError(std::string("rule ") + rule_name(rule) +
                            " failed to improve the potential");
    return {std::move(after), std::move(trace)};
}

/// New allocation formed by reassigning `replaced` bundles; every good
/// not covered by a bundle falls back into the pool.
Allocation reassemble(const Instance& inst, std::vector<GoodSet> bundles) {
    Allocation out;
    out.bundles = std::move(bundles);
    std::vector<bool> held(inst.goods(), false);
    for (const GoodSet& b : out.bundles)
        for (int g : b) held[g] = true;
    for (int g = 0; g < inst.goods(); ++g)
        if (!held[g]) out.pool.insert(g);
    return out;
}

} // namespace

// ---------------------------------------------------------------- U0 ----

std::optional<U0Witness> u0_find(const Instance& inst, const Configuration& config) {
    const int n = inst.agents();
    std::vector<Value> own(n);
    for (int i = 0; i < n; ++i) own[i] = bundle_value(inst, i, config.alloc.bundles[i]);

    for (int g : config.alloc.pool) {
        for (int l = 0; l < config.group_count(); ++l) {
            const int rep = config.reps[l];
            if (!inst.agent_value(rep, g).is_zero()) continue;
            bool admissible = true;
            for (int i = 0; i < n && admissible; ++i) {
                const Value grown =
                    bundle_value(inst, i, config.alloc.bundles[rep]) + inst.agent_value(i, g);
                if (grown > config.threshold_of(i)) admissible = false;
            }
            if (admissible) return U0Witness{g, l};
        }
    }
    return std::nullopt;
}

RuleStep u0_apply(const Instance& inst, const Configuration& config, const U0Witness& w) {
    if (!config.alloc.pool.count(w.good)) throw InputError("U0 good is not in the pool");
    if (w.group < 0 || w.group >= config.group_count()) throw InputError("U0 group out of range");

    Allocation next = config.alloc;
    next.pool.erase(w.good);
    next.bundles[config.reps[w.group]].insert(w.good);
    // The partition survives as is; the receiving representative's value
    // is unchanged, so no envy elimination is needed.
    return finish_step(inst, config, make_configuration(inst, std::move(next), config.groups),
                       RuleId::U0, w);
}

// ---------------------------------------------------------------- U1 ----

namespace {

/// Looks for a cycle through the representative of group `anchor` that
/// never touches an earlier group. Anchoring makes the earliest group on
/// the cycle one whose representative takes part in the rotation; a cycle
/// that merely swaps bundles among non-representatives (legal edge-wise)
/// would leave every representative value and the potential unchanged.
struct CycleSearch {
    const Configuration& config;
    const std::vector<std::vector<int>>& regular;
    std::vector<std::vector<ChampionGraph::ChampionEdge>> champion_by_source{};
    std::uint64_t budget = 0;

    int start = -1;
    int anchor = -1;
    std::vector<bool> on_path{};
    std::vector<bool> label_used{};
    std::vector<CycleEdge> path{};

    bool dfs(int u) {
        if (budget-- == 0)
            throw InputError("champion cycle search exceeded its expansion cap");

        for (int w : regular[u]) {
            if (w == start) {
                path.push_back({u, w, -1});
                return true;
            }
            if (on_path[w] || config.group_of[w] < anchor) continue;
            path.push_back({u, w, -1});
            on_path[w] = true;
            if (dfs(w)) return true;
            on_path[w] = false;
            path.pop_back();
        }
        for (const auto& e : champion_by_source[u]) {
            if (!config.is_rep(e.to)) continue;
            if (label_used[e.good]) continue;
            if (e.to == start) {
                path.push_back({u, e.to, e.good});
                return true;
            }
            if (on_path[e.to] || config.group_of[e.to] < anchor) continue;
            path.push_back({u, e.to, e.good});
            on_path[e.to] = true;
            label_used[e.good] = true;
            if (dfs(e.to)) return true;
            label_used[e.good] = false;
            on_path[e.to] = false;
            path.pop_back();
        }
        return false;
    }
};

} // namespace

std::optional<U1Witness> u1_find_cycle(const Instance& inst, const Configuration& config,
                                       const ChampionGraph& graph, std::uint64_t expansion_cap) {
    const int n = inst.agents();
    CycleSearch search{config, graph.regular, {}, expansion_cap};
    search.champion_by_source.resize(n);
    for (const auto& e : graph.champion_edges) search.champion_by_source[e.from].push_back(e);
    search.on_path.assign(n, false);
    search.label_used.assign(inst.goods(), false);

    for (int l = 0; l < config.group_count(); ++l) {
        const int s = config.reps[l];
        search.start = s;
        search.anchor = l;
        search.on_path.assign(n, false);
        search.label_used.assign(inst.goods(), false);
        search.path.clear();
        search.on_path[s] = true;
        if (search.dfs(s)) return U1Witness{search.path};
    }
    return std::nullopt;
}

RuleStep u1_apply(const Instance& inst, const Configuration& config, const U1Witness& w) {
    if (w.cycle.empty()) throw InputError("empty champion cycle");
    const auto& cycle = w.cycle;
    for (std::size_t t = 0; t < cycle.size(); ++t) {
        const CycleEdge& e = cycle[t];
        inst.require_agent(e.from);
        inst.require_agent(e.to);
        if (e.to != cycle[(t + 1) % cycle.size()].from)
            throw InputError("champion cycle edges do not chain");
        if (e.good == -1 && e.from == e.to)
            throw InputError("regular self-loop in champion cycle");
    }
    std::set<int> labels;
    for (const CycleEdge& e : cycle) {
        if (e.good == -1) continue;
        if (!config.alloc.pool.count(e.good))
            throw InputError("champion cycle label is not a pool good");
        if (!labels.insert(e.good).second)
            throw InputError("duplicate champion label in cycle");
    }
    // The potential argument hinges on the earliest group touched by the
    // cycle rotating through its representative; without it the rotation
    // can shuffle bundles inside one group and change nothing.
    int earliest = config.group_of[cycle.front().from];
    for (const CycleEdge& e : cycle) earliest = std::min(earliest, config.group_of[e.from]);
    const int lead = config.reps[earliest];
    if (std::none_of(cycle.begin(), cycle.end(),
                     [&](const CycleEdge& e) { return e.from == lead; }))
        throw InputError("champion cycle misses the representative of its earliest group");

    // All reads are against the pre-rotation bundles.
    std::vector<GoodSet> bundles = config.alloc.bundles;
    for (const CycleEdge& e : cycle) {
        if (e.good == -1) {
            bundles[e.from] = config.alloc.bundles[e.to];
        } else {
            GoodSet S = config.alloc.bundles[e.to];
            S.insert(e.good);
            bundles[e.from] = top_set(inst, e.from, S, config.threshold_of(e.from));
        }
    }
    return finish_step(inst, config, envy_eliminate(inst, reassemble(inst, std::move(bundles))),
                       RuleId::U1, w);
}

// ---------------------------------------------------------------- U2 ----

std::optional<U2Witness> u2_find(const Instance& inst, const Configuration& config) {
    for (int l = 0; l < config.group_count(); ++l)
        for (int g : config.alloc.pool)
            if (inst.interested(config.reps[l], g)) return U2Witness{l, g};
    return std::nullopt;
}

RuleStep u2_apply(const Instance& inst, const Configuration& config, const U2Witness& w) {
    if (!config.alloc.pool.count(w.good)) throw InputError("U2 good is not in the pool");
    if (w.group < 0 || w.group >= config.group_count()) throw InputError("U2 group out of range");

    Allocation next = config.alloc;
    next.pool.erase(w.good);
    next.bundles[config.reps[w.group]].insert(w.good);
    return finish_step(inst, config, envy_eliminate(inst, std::move(next)), RuleId::U2, w);
}

// ---------------------------------------------------------------- U3 ----

std::optional<U3Witness> u3_find(const Instance& inst, const Configuration& config,
                                 const ChampionGraph& graph) {
    const int n = inst.agents();
    const std::vector<int> dist = regular_distances(config, graph);
    for (int i = 0; i < n; ++i)
        if (dist[i] < 0)
            throw InternalError("agent " + std::to_string(i) +
                                " unreachable from its representative");

    std::vector<Value> own(n);
    for (int i = 0; i < n; ++i) own[i] = bundle_value(inst, i, config.alloc.bundles[i]);

    std::vector<int> candidates;
    for (int i = 0; i < n; ++i)
        if (!config.is_rep(i)) candidates.push_back(i);
    std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
        if (config.group_of[a] != config.group_of[b]) return config.group_of[a] < config.group_of[b];
        if (dist[a] != dist[b]) return dist[a] < dist[b];
        return a < b;
    });

    for (int i : candidates) {
        for (int g : config.alloc.pool) {
            if (!inst.interested(i, g)) continue;
            GoodSet grown = config.alloc.bundles[i];
            grown.insert(g);
            if (grown.size() < 2) continue; // two distinct removals impossible

            int best = -1;
            for (int w = 0; w < n; ++w) {
                if (w == i) continue;
                // Witness must sit no later than the candidate in the
                // (group, distance) lexicographic order.
                const bool no_later =
                    config.group_of[w] < config.group_of[i] ||
                    (config.group_of[w] == config.group_of[i] && dist[w] <= dist[i]);
                if (!no_later) continue;
                if (bundle_value(inst, w, grown) <=
                    own[w] + min_removal_value(inst, w, grown, 2))
                    continue;
                if (best == -1) {
                    best = w;
                    continue;
                }
                const auto key = [&](int a) { return std::tuple(config.group_of[a], dist[a], a); };
                if (key(w) < key(best)) best = w;
            }
            if (best != -1) return U3Witness{i, best, g};
        }
    }
    return std::nullopt;
}

RuleStep u3_apply(const Instance& inst, const Configuration& config, const U3Witness& w) {
    if (!config.alloc.pool.count(w.good)) throw InputError("U3 good is not in the pool");
    inst.require_agent(w.agent);

    Allocation next = config.alloc;
    next.pool.erase(w.good);
    next.bundles[w.agent].insert(w.good);
    return finish_step(inst, config, envy_eliminate(inst, std::move(next)), RuleId::U3, w);
}

// ---------------------------------------------------------------- U4 ----

std::optional<U4Witness> u4_find(const Instance& inst, const Configuration& config,
                                 const ChampionGraph& graph) {
    const int n = inst.agents();
    bool pool_envied = false;
    for (int j = 0; j < n && !pool_envied; ++j)
        if (bundle_value(inst, j, config.alloc.pool) > config.threshold_of(j)) pool_envied = true;
    if (!pool_envied) return std::nullopt;

    int champion = -1;
    for (int l = 0; l < config.group_count() && champion < 0; ++l)
        for (int i : config.groups[l])
            if (is_champion(inst, config, i, config.alloc.pool)) {
                champion = i;
                break;
            }
    if (champion < 0)
        throw InternalError("pool is envied but has no champion");

    // Shortest regular-edge path from the champion's representative.
    const int source = config.reps[config.group_of[champion]];
    std::vector<int> parent(n, -1);
    std::vector<bool> seen(n, false);
    std::deque<int> queue{source};
    seen[source] = true;
    while (!queue.empty()) {
        const int u = queue.front();
        queue.pop_front();
        if (u == champion) break;
        for (int w : graph.regular[u]) {
            if (seen[w]) continue;
            seen[w] = true;
            parent[w] = u;
            queue.push_back(w);
        }
    }
    if (!seen[champion])
        throw InternalError("champion unreachable from its representative");

    std::vector<int> path;
    for (int u = champion; u != -1; u = parent[u]) path.push_back(u);
    std::reverse(path.begin(), path.end());
    return U4Witness{champion, std::move(path)};
}

RuleStep u4_apply(const Instance& inst, const Configuration& config, const U4Witness& w) {
    if (w.path.empty() || w.path.back() != w.champion)
        throw InputError("malformed U4 path");
    for (int i : w.path) inst.require_agent(i);
    if (w.path.front() != config.reps[config.group_of[w.champion]])
        throw InputError("U4 path must start at the champion's representative");
    if (config.alloc.pool.empty()) throw InputError("U4 with an empty pool");

    std::vector<GoodSet> bundles = config.alloc.bundles;
    for (std::size_t t = 0; t + 1 < w.path.size(); ++t)
        bundles[w.path[t]] = config.alloc.bundles[w.path[t + 1]];
    bundles[w.champion] =
        top_set(inst, w.champion, config.alloc.pool, config.threshold_of(w.champion));
    return finish_step(inst, config, envy_eliminate(inst, reassemble(inst, std::move(bundles))),
                       RuleId::U4, w);
}

} // namespace fairdiv
