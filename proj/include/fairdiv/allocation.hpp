#pragma once

#include "fairdiv/instance.hpp"

#include <set>
#include <string>
#include <vector>

namespace fairdiv {

using GoodSet = std::set<int>;

/// A (possibly partial) allocation: one bundle per agent plus the pool of
/// unallocated goods. Structural soundness (each good in exactly one
/// place) is checked by validate_allocation, not enforced on mutation.
struct Allocation {
    std::vector<GoodSet> bundles;
    GoodSet pool;

    static Allocation empty_of(const Instance& inst);

    bool operator==(const Allocation&) const = default;
};

/// v_agent(S): sum of inherent values over the goods in S the agent is
/// interested in. S need not be one of the allocation's bundles.
Value bundle_value(const Instance& inst, int agent, const GoodSet& S);

/// Sum of the `count` smallest values v_agent(g) over g in S (ties broken
/// by good index; the sum is tie-independent, callers that need the
/// witness subset re-derive it with the same ordering).
/// Requires 0 <= count <= |S|.
Value min_removal_value(const Instance& inst, int agent, const GoodSet& S, int count);

/// True when the agent holds no interest in the good.
bool is_wasted(const Instance& inst, int agent, int good);

/// Structural check: bundle-per-agent shape, ids in range, every good in
/// exactly one bundle or the pool. Returns human-readable findings, empty
/// means the allocation is sound.
std::vector<std::string> validate_allocation(const Instance& inst, const Allocation& alloc);

/// Convenience: v_i(X_i).
Value own_value(const Instance& inst, const Allocation& alloc, int agent);

/// True when every good in every bundle is valued by its holder. The pool
/// is exempt by definition; `exempt` agents are skipped.
bool bundles_nonwasteful(const Instance& inst, const Allocation& alloc,
                         const std::set<int>& exempt = {});

} // namespace fairdiv
