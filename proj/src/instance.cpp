#include "fairdiv/instance.hpp"

#include "fairdiv/errors.hpp"

#include <set>
#include <unordered_map>

namespace fairdiv {

Instance::Instance(int agents, std::vector<GoodSpec> goods,
                   const std::vector<std::vector<int>>& interest_sets)
    : n_(agents), specs_(std::move(goods)) {
    if (n_ < 1) throw InputError("instance needs at least one agent");
    const int m = static_cast<int>(specs_.size());

    std::set<std::string_view> seen;
    for (const auto& s : specs_) {
        if (s.id.empty()) throw InputError("empty good id");
        if (!seen.insert(s.id).second) throw InputError("duplicate good id: " + s.id);
    }

    if (static_cast<int>(interest_sets.size()) != n_)
        throw InputError("interest lists must cover every agent");

    interest_.assign(n_, std::vector<unsigned char>(m, 0));
    for (int i = 0; i < n_; ++i) {
        for (int g : interest_sets[i]) {
            if (g < 0 || g >= m)
                throw InputError("interest references unknown good index " + std::to_string(g));
            if (interest_[i][g])
                throw InputError("duplicate good in interest list of agent " + std::to_string(i));
            interest_[i][g] = 1;
        }
    }

    for (int g = 0; g < m; ++g) {
        if (!specs_[g].value.is_zero()) continue;
        if (wanted(g))
            throw InputError("good '" + specs_[g].id + "' has value 0 but interests an agent");
    }
}

const std::string& Instance::good_id(int good) const {
    require_good(good);
    return specs_[good].id;
}

int Instance::good_index(std::string_view id) const {
    for (int g = 0; g < goods(); ++g)
        if (specs_[g].id == id) return g;
    throw InputError("unknown good id: '" + std::string(id) + "'");
}

const Value& Instance::inherent_value(int good) const {
    require_good(good);
    return specs_[good].value;
}

bool Instance::interested(int agent, int good) const {
    require_agent(agent);
    require_good(good);
    return interest_[agent][good] != 0;
}

const Value& Instance::agent_value(int agent, int good) const {
    return interested(agent, good) ? specs_[good].value : zero_;
}

bool Instance::wanted(int good) const {
    require_good(good);
    for (int i = 0; i < n_; ++i)
        if (interest_[i][good]) return true;
    return false;
}

void Instance::require_agent(int agent) const {
    if (agent < 0 || agent >= n_)
        throw InputError("unknown agent index " + std::to_string(agent));
}

void Instance::require_good(int good) const {
    if (good < 0 || good >= static_cast<int>(specs_.size()))
        throw InputError("unknown good index " + std::to_string(good));
}

bool Instance::operator==(const Instance& o) const {
    if (n_ != o.n_ || specs_.size() != o.specs_.size()) return false;
    for (std::size_t g = 0; g < specs_.size(); ++g)
        if (specs_[g].id != o.specs_[g].id || specs_[g].value != o.specs_[g].value) return false;
    return interest_ == o.interest_;
}

} // namespace fairdiv
