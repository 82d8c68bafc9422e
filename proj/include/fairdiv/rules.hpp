#pragma once

#include "fairdiv/config.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace fairdiv {

enum class RuleId { U0, U1, U2, U3, U4, Phase };

/// Edge of a champion cycle. good == -1 marks a regular edge.
struct CycleEdge {
    int from, to, good;
    bool operator==(const CycleEdge&) const = default;
};

struct U0Witness { int good, group; };
struct U1Witness { std::vector<CycleEdge> cycle; };
struct U2Witness { int group, good; };
struct U3Witness { int agent, witness_agent, good; };
struct U4Witness { int champion; std::vector<int> path; }; ///< rep first, champion last
struct PhaseWitness { int agent, good; };

using RuleWitness =
    std::variant<U0Witness, U1Witness, U2Witness, U3Witness, U4Witness, PhaseWitness>;

/// One firing. Every rule application strictly improves the potential;
/// the applies enforce phi_compare(phi_after, phi_before) == Greater and
/// raise InternalError otherwise. Completion-phase records reuse the exit
/// potential on both sides and are exempt from the monotonicity check.
struct RuleTrace {
    RuleId rule;
    RuleWitness witness;
    PhiVector phi_before, phi_after;
};

using RuleStep = std::pair<Configuration, RuleTrace>;

/// U0: hand a pool good the receiving representative does not value to
/// that representative, provided nobody comes to envy the grown bundle
/// above their own group threshold. Scans (good, group) ascending. The
/// partition is kept as is; no envy elimination runs.
std::optional<U0Witness> u0_find(const Instance& inst, const Configuration& config);
RuleStep u0_apply(const Instance& inst, const Configuration& config, const U0Witness& w);

/// U1: rotate bundles along a champion cycle: a cycle whose champion
/// edges all point at representatives and carry pairwise distinct pool
/// labels, and which passes through the representative of the earliest
/// group it touches (the potential argument needs that representative to
/// take part in the rotation). Regular edges pass the target's bundle on
/// unchanged; champion edges pass the champion's minimal envied subset
/// of bundle-plus-label. Depth-first search anchored at representatives
/// in group order, regular edges before champion edges, then target and
/// label ascending; the expansion cap turns pathological searches into
/// an error.
std::optional<U1Witness> u1_find_cycle(const Instance& inst, const Configuration& config,
                                       const ChampionGraph& graph,
                                       std::uint64_t expansion_cap = 1'000'000);
RuleStep u1_apply(const Instance& inst, const Configuration& config, const U1Witness& w);

/// U2: give the first pool good its receiving representative values to
/// that representative. Scans (group, good) ascending. Only sound when
/// U0 and U1 are inapplicable; the solver guarantees the order.
std::optional<U2Witness> u2_find(const Instance& inst, const Configuration& config);
RuleStep u2_apply(const Instance& inst, const Configuration& config, const U2Witness& w);

/// U3: give a pool good to a non-representative who values it, provided
/// some no-later witness agent (by (group, regular distance)) would envy
/// the grown bundle even after two removals. Candidates scan by (group,
/// distance, index), goods ascending; the witness minimizes (group,
/// distance, index).
std::optional<U3Witness> u3_find(const Instance& inst, const Configuration& config,
                                 const ChampionGraph& graph);
RuleStep u3_apply(const Instance& inst, const Configuration& config, const U3Witness& w);

/// U4: when somebody values the whole pool above its group threshold,
/// find a champion of the pool (scan by group then index; the theory
/// guarantees one exists, so a miss is an InternalError), walk the
/// shortest regular-edge path from the champion's representative to it,
/// shift each bundle one step along the path, and hand the champion its
/// minimal envied subset of the pool. The representative's old bundle
/// returns to the pool.
std::optional<U4Witness> u4_find(const Instance& inst, const Configuration& config,
                                 const ChampionGraph& graph);
RuleStep u4_apply(const Instance& inst, const Configuration& config, const U4Witness& w);

} // namespace fairdiv
