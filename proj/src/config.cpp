#include "fairdiv/config.hpp"

#include "fairdiv/errors.hpp"
#include "fairdiv/fairness.hpp"

#include <algorithm>
#include <deque>

namespace fairdiv {

bool Configuration::is_rep(int agent) const {
    return reps[group_of[agent]] == agent;
}

Configuration make_configuration(const Instance& inst, Allocation alloc,
                                 std::vector<std::vector<int>> groups) {
    if (auto findings = validate_allocation(inst, alloc); !findings.empty())
        throw InputError("malformed allocation: " + findings.front());

    const int n = inst.agents();
    std::vector<int> member_of(n, -1);
    for (std::size_t l = 0; l < groups.size(); ++l) {
        if (groups[l].empty()) throw InputError("empty group in partition");
        for (int i : groups[l]) {
            inst.require_agent(i);
            if (member_of[i] != -1) throw InputError("agent " + std::to_string(i) + " in two groups");
            member_of[i] = static_cast<int>(l);
        }
    }
    for (int i = 0; i < n; ++i)
        if (member_of[i] == -1) throw InputError("agent " + std::to_string(i) + " missing from partition");

    std::vector<Value> own(n);
    for (int i = 0; i < n; ++i) own[i] = bundle_value(inst, i, alloc.bundles[i]);

    struct GroupInfo {
        std::vector<int> members;
        int rep;
    };
    std::vector<GroupInfo> infos;
    infos.reserve(groups.size());
    for (auto& g : groups) {
        std::sort(g.begin(), g.end());
        int rep = g.front();
        for (int i : g)
            if (own[i] < own[rep]) rep = i; // ties keep the lowest index
        infos.push_back({std::move(g), rep});
    }
    std::sort(infos.begin(), infos.end(), [&](const GroupInfo& a, const GroupInfo& b) {
        if (own[a.rep] != own[b.rep]) return own[a.rep] < own[b.rep];
        return a.rep < b.rep;
    });

    Configuration config;
    config.alloc = std::move(alloc);
    config.group_of.assign(n, -1);
    for (std::size_t l = 0; l < infos.size(); ++l) {
        for (int i : infos[l].members) config.group_of[i] = static_cast<int>(l);
        config.reps.push_back(infos[l].rep);
        config.rep_values.push_back(own[infos[l].rep]);
        config.groups.push_back(std::move(infos[l].members));
    }
    return config;
}

Configuration singleton_configuration(const Instance& inst, Allocation alloc) {
    std::vector<std::vector<int>> groups;
    for (int i = 0; i < inst.agents(); ++i) groups.push_back({i});
    return make_configuration(inst, std::move(alloc), std::move(groups));
}

PhiVector phi(const Instance& inst, const Configuration& config) {
    PhiVector out;
    out.rep_values = config.rep_values;
    for (int i = 0; i < inst.agents(); ++i) {
        const std::size_t sz = config.alloc.bundles[i].size();
        if (config.is_rep(i)) out.rep_size_total += sz;
        else out.nonrep_size_total += sz;
    }
    return out;
}

Ordering phi_compare(const PhiVector& a, const PhiVector& b) {
    const std::size_t la = a.rep_values.size(), lb = b.rep_values.size();
    auto entry = [](const PhiVector& v, std::size_t idx) {
        return idx < v.rep_values.size() ? ExtendedValue{v.rep_values[idx]}
                                         : ExtendedValue::infinity();
    };
    for (std::size_t idx = 0; idx < std::max(la, lb); ++idx) {
        const ExtendedValue ea = entry(a, idx), eb = entry(b, idx);
        if (ea != eb) return ea < eb ? Ordering::Less : Ordering::Greater;
    }
    // Non-representative bundle mass: smaller wins, zero reads as best.
    if (a.nonrep_size_total != b.nonrep_size_total)
        return a.nonrep_size_total < b.nonrep_size_total ? Ordering::Greater : Ordering::Less;
    if (a.rep_size_total != b.rep_size_total)
        return a.rep_size_total < b.rep_size_total ? Ordering::Less : Ordering::Greater;
    return Ordering::Equal;
}

GoodSet top_set(const Instance& inst, int agent, const GoodSet& S, const Value& threshold) {
    if (bundle_value(inst, agent, S) <= threshold)
        throw InputError("not a candidate champion: set value does not beat the threshold");
    std::vector<int> order(S.begin(), S.end());
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return inst.agent_value(agent, a) > inst.agent_value(agent, b);
    });
    GoodSet out;
    Value run;
    for (int g : order) {
        run += inst.agent_value(agent, g);
        out.insert(g);
        if (run > threshold) break;
    }
    return out;
}

GoodSet champset(const Instance& inst, const Configuration& config, int agent, const GoodSet& S) {
    inst.require_agent(agent);
    return top_set(inst, agent, S, config.threshold_of(agent));
}

bool is_champion(const Instance& inst, const Configuration& config, int agent, const GoodSet& S) {
    inst.require_agent(agent);
    if (bundle_value(inst, agent, S) <= config.threshold_of(agent)) return false;
    const GoodSet Z = top_set(inst, agent, S, config.threshold_of(agent));
    for (int j = 0; j < inst.agents(); ++j) {
        if (j == agent) continue;
        // Blocked when j values Z minus its cheapest good above j's threshold.
        const Value vz = bundle_value(inst, j, Z);
        if (vz > config.threshold_of(j) + min_removal_value(inst, j, Z, 1)) return false;
    }
    return true;
}

namespace {

std::vector<std::vector<int>> regular_adjacency(const Instance& inst, const Configuration& config) {
    const int n = inst.agents();
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i) {
        const Value& thr = config.threshold_of(i);
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (bundle_value(inst, i, config.alloc.bundles[j]) > thr) adj[i].push_back(j);
        }
    }
    return adj;
}

} // namespace

bool ChampionGraph::has_regular(int i, int j) const {
    const auto& row = regular[i];
    return std::binary_search(row.begin(), row.end(), j);
}

std::vector<ChampionGraph::ChampionEdge> ChampionGraph::champion_from(int i) const {
    std::vector<ChampionEdge> out;
    for (const auto& e : champion_edges)
        if (e.from == i) out.push_back(e);
    return out;
}

ChampionGraph build_champion_graph(const Instance& inst, const Configuration& config) {
    const int n = inst.agents();
    ChampionGraph graph;
    graph.regular = regular_adjacency(inst, config);

    // Champion candidacy needs v_from(X_to) + v_from(g) above the
    // threshold; precompute the bundle part to skip hopeless triples.
    std::vector<std::vector<Value>> cross(n, std::vector<Value>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cross[i][j] = bundle_value(inst, i, config.alloc.bundles[j]);

    for (int from = 0; from < n; ++from) {
        for (int to = 0; to < n; ++to) {
            for (int g : config.alloc.pool) {
                if (cross[from][to] + inst.agent_value(from, g) <= config.threshold_of(from))
                    continue;
                GoodSet S = config.alloc.bundles[to];
                S.insert(g);
                if (is_champion(inst, config, from, S))
                    graph.champion_edges.push_back({from, to, g});
            }
        }
    }
    return graph;
}

PropertyReport check_properties(const Instance& inst, const Configuration& config) {
    PropertyReport report;

    if (auto v = check_efkx(inst, config.alloc, 1)) {
        report.p1.ok = false;
        std::string removed;
        for (int g : v->removed) removed += (removed.empty() ? "" : ",") + inst.good_id(g);
        report.p1.witness = "agent " + std::to_string(v->envier) + " envies agent " +
                            std::to_string(v->envied) + " after removing {" + removed +
                            "}: " + v->lhs.str() + " < " + v->rhs.str();
    }

    for (int l = 0; l < config.group_count() && report.p2.ok; ++l) {
        for (int i : config.groups[l]) {
            const GoodSet& bundle = config.alloc.bundles[i];
            if (bundle.empty()) continue;
            const Value own = bundle_value(inst, i, bundle);
            if (own <= config.rep_values[l] + min_removal_value(inst, i, bundle, 1)) continue;
            report.p2.ok = false;
            report.p2.witness = "agent " + std::to_string(i) + " keeps value above its group " +
                                "threshold " + config.rep_values[l].str() +
                                " after any single removal";
            break;
        }
    }

    // p3a: members reachable from their representative over regular edges.
    const std::vector<std::vector<int>> adj = regular_adjacency(inst, config);
    ChampionGraph skeleton;
    skeleton.regular = adj;
    const std::vector<int> dist = regular_distances(config, skeleton);
    for (int i = 0; i < inst.agents() && report.p3.ok; ++i) {
        if (dist[i] >= 0) continue;
        report.p3.ok = false;
        report.p3.witness = "agent " + std::to_string(i) +
                            " unreachable from its representative over regular edges";
    }
    // p3b: no regular edge into a strictly later group.
    for (int i = 0; i < inst.agents() && report.p3.ok; ++i) {
        for (int j : adj[i]) {
            if (config.group_of[i] >= config.group_of[j]) continue;
            report.p3.ok = false;
            report.p3.witness = "regular edge " + std::to_string(i) + " -> " + std::to_string(j) +
                                " crosses from group " + std::to_string(config.group_of[i]) +
                                " into later group " + std::to_string(config.group_of[j]);
            break;
        }
    }
    // p3c: non-representative bundles hold no wasted goods.
    for (int i = 0; i < inst.agents() && report.p3.ok; ++i) {
        if (config.is_rep(i)) continue;
        for (int g : config.alloc.bundles[i]) {
            if (!is_wasted(inst, i, g)) continue;
            report.p3.ok = false;
            report.p3.witness = "non-representative agent " + std::to_string(i) +
                                " holds wasted good '" + inst.good_id(g) + "'";
            break;
        }
    }
    return report;
}

std::vector<int> regular_distances(const Configuration& config, const ChampionGraph& graph) {
    const int n = static_cast<int>(config.group_of.size());
    std::vector<int> dist(n, -1);
    for (int l = 0; l < config.group_count(); ++l) {
        // BFS over the full regular-edge graph; only distances of this
        // group's members are recorded from this source.
        std::vector<int> local(n, -1);
        std::deque<int> queue{config.reps[l]};
        local[config.reps[l]] = 0;
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int w : graph.regular[u]) {
                if (local[w] != -1) continue;
                local[w] = local[u] + 1;
                queue.push_back(w);
            }
        }
        for (int i : config.groups[l]) dist[i] = local[i];
    }
    return dist;
}

int regular_distance(const Instance& inst, const Configuration& config,
                     const ChampionGraph& graph, int agent) {
    inst.require_agent(agent);
    const int d = regular_distances(config, graph)[agent];
    if (d < 0)
        throw InternalError("agent " + std::to_string(agent) +
                            " unreachable from its representative");
    return d;
}

} // namespace fairdiv
