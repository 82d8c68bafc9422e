#pragma once

#include "fairdiv/value.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace fairdiv {

struct GoodSpec {
    std::string id;
    Value value;
};

/// A restricted additive valuation profile: each good has one inherent
/// value, and an agent values it either at that amount (interested) or at
/// zero. Goods carry external string ids; internally both agents and goods
/// are dense 0-based indices and all hot paths work on indices only.
///
/// Invariant: a good that interests at least one agent has inherent value
/// strictly greater than zero. A good nobody wants may carry any value,
/// including zero; its stored value never reaches a bundle sum.
class Instance {
public:
    /// interest_sets[i] lists the good indices agent i is interested in.
    Instance(int agents, std::vector<GoodSpec> goods,
             const std::vector<std::vector<int>>& interest_sets);

    int agents() const { return n_; }
    int goods() const { return static_cast<int>(specs_.size()); }

    const std::string& good_id(int good) const;
    int good_index(std::string_view id) const; ///< InputError if unknown.
    const Value& inherent_value(int good) const;

    bool interested(int agent, int good) const;
    /// v_i(g): the inherent value if interested, zero otherwise.
    const Value& agent_value(int agent, int good) const;

    /// True when some agent is interested in the good.
    bool wanted(int good) const;

    void require_agent(int agent) const;
    void require_good(int good) const;

    bool operator==(const Instance& o) const;

private:
    int n_ = 0;
    std::vector<GoodSpec> specs_;
    std::vector<std::vector<unsigned char>> interest_; // [agent][good]
    Value zero_;
};

} // namespace fairdiv
