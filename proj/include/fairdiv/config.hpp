#pragma once

#include "fairdiv/allocation.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace fairdiv {

/// A partial allocation together with an ordered partition of the agents
/// into groups. Each group's representative is the member with the least
/// own-bundle value (ties to the lowest agent index), and groups are kept
/// sorted by ascending representative value, ties by representative index.
/// Construction canonicalizes and validates; instances are treated as
/// immutable afterwards.
struct Configuration {
    Allocation alloc;
    std::vector<std::vector<int>> groups; ///< members sorted ascending
    std::vector<int> reps;                ///< reps[l] = representative of group l
    std::vector<Value> rep_values;        ///< cached v_{r_l}(X_{r_l})
    std::vector<int> group_of;            ///< agent -> group index

    int group_count() const { return static_cast<int>(groups.size()); }
    bool is_rep(int agent) const;
    /// The representative value of the agent's own group.
    const Value& threshold_of(int agent) const { return rep_values[group_of[agent]]; }
};

/// Validates that `groups` is a partition of the agents, then computes
/// representatives and sorts the groups into canonical order.
Configuration make_configuration(const Instance& inst, Allocation alloc,
                                 std::vector<std::vector<int>> groups);

/// The starting shape of both allocators: empty bundles, every good
/// pooled, one singleton group per agent.
Configuration singleton_configuration(const Instance& inst, Allocation alloc);

/// Termination potential. Compared elementwise on representative values
/// where an exhausted list reads as +infinity; ties fall through to the
/// total size of non-representative bundles (smaller is better, zero is
/// best) and then the total size of representative bundles (larger is
/// better).
struct PhiVector {
    std::vector<Value> rep_values; ///< non-decreasing
    std::size_t nonrep_size_total = 0;
    std::size_t rep_size_total = 0;

    bool operator==(const PhiVector&) const = default;
};

enum class Ordering { Less, Equal, Greater };

PhiVector phi(const Instance& inst, const Configuration& config);
Ordering phi_compare(const PhiVector& a, const PhiVector& b);

/// Minimum-cardinality subset of S whose value to `agent` strictly
/// exceeds `threshold`: the shortest prefix of S sorted by value
/// descending (ties by good index). Never contains a good the agent does
/// not value. Requires bundle_value(agent, S) > threshold, otherwise the
/// agent is not a candidate champion of S and InputError is thrown.
GoodSet top_set(const Instance& inst, int agent, const GoodSet& S, const Value& threshold);

/// top_set with the threshold taken from the agent's group in `config`.
GoodSet champset(const Instance& inst, const Configuration& config, int agent, const GoodSet& S);

/// Agent is a champion of S when it beats its own group threshold on S
/// and no other agent j still envies champset(S) above j's group
/// threshold after any single good is removed from it.
bool is_champion(const Instance& inst, const Configuration& config, int agent, const GoodSet& S);

/// Directed envy structure over the agents of a configuration.
/// Regular edge i -> j (i != j): v_i(X_j) strictly above i's threshold.
/// Champion edge i -> j labeled g (pool good, i == j allowed): i is a
/// champion of X_j + g.
struct ChampionGraph {
    struct ChampionEdge {
        int from, to, good;
        bool operator==(const ChampionEdge&) const = default;
    };

    std::vector<std::vector<int>> regular;    ///< regular[i]: targets, ascending
    std::vector<ChampionEdge> champion_edges; ///< sorted by (from, to, good)

    bool has_regular(int i, int j) const;
    /// Champion edges leaving i, in (target, label) order.
    std::vector<ChampionEdge> champion_from(int i) const;
};

ChampionGraph build_champion_graph(const Instance& inst, const Configuration& config);

/// The three working invariants every configuration produced by the
/// allocators satisfies:
///   p1: the partial allocation is EFX;
///   p2: no member's bundle minus any one good beats its group threshold;
///   p3: members reachable from their representative over regular edges,
///       no regular edge into a later group, non-representative bundles
///       non-wasteful.
struct PropertyReport {
    struct Entry {
        bool ok = true;
        std::string witness; ///< empty when ok
    };
    Entry p1, p2, p3;
    bool all_ok() const { return p1.ok && p2.ok && p3.ok; }
};

PropertyReport check_properties(const Instance& inst, const Configuration& config);

/// BFS distance from the agent's own representative over regular edges.
/// Finite for every agent of a configuration satisfying p3.
int regular_distance(const Instance& inst, const Configuration& config,
                     const ChampionGraph& graph, int agent);

/// All distances at once; -1 marks unreachable agents.
std::vector<int> regular_distances(const Configuration& config, const ChampionGraph& graph);

} // namespace fairdiv
