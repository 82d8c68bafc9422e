#include "fairdiv/oracle.hpp"

#include "fairdiv/errors.hpp"

#include <random>
#include <string>

namespace fairdiv {

AllocationEnumerator::AllocationEnumerator(const Instance& inst, bool allow_pool,
                                           std::uint64_t cap)
    : inst_(inst), base_(inst.agents() + (allow_pool ? 1 : 0)), digits_(inst.goods(), 0) {
    std::uint64_t total = 1;
    for (int g = 0; g < inst.goods(); ++g) {
        total *= static_cast<std::uint64_t>(base_);
        if (total > cap)
            throw InputError("instance too large to enumerate: more than " +
                             std::to_string(cap) + " allocations");
    }
}

std::optional<Allocation> AllocationEnumerator::next() {
    if (done_) return std::nullopt;

    Allocation out;
    out.bundles.assign(inst_.agents(), {});
    for (int g = 0; g < inst_.goods(); ++g) {
        if (digits_[g] < inst_.agents()) out.bundles[digits_[g]].insert(g);
        else out.pool.insert(g);
    }

    int pos = inst_.goods() - 1;
    while (pos >= 0 && digits_[pos] == base_ - 1) digits_[pos--] = 0;
    if (pos < 0) done_ = true;
    else ++digits_[pos];
    return out;
}

std::optional<Allocation> exists_allocation(const Instance& inst,
                                            const std::function<bool(const Allocation&)>& pred,
                                            bool allow_pool, std::uint64_t cap) {
    AllocationEnumerator stream(inst, allow_pool, cap);
    while (auto alloc = stream.next())
        if (pred(*alloc)) return alloc;
    return std::nullopt;
}

Instance counterexample_instance(int k, const Value& c) {
    if (k < 1) throw InputError("counterexample needs k >= 1");
    if (c.is_zero() || c > Value{1}) throw InputError("counterexample needs 0 < c <= 1");

    const Value step = (Value{1} + c) / c; // 1/c + 1
    std::vector<GoodSpec> goods;
    std::vector<std::vector<int>> interest(2);

    goods.push_back({"g", step.pow(static_cast<unsigned>(k))});
    interest[0].push_back(0);
    interest[1].push_back(0);
    for (int i = 1; i <= k; ++i) {
        interest[0].push_back(static_cast<int>(goods.size()));
        goods.push_back({"g" + std::to_string(i), step.pow(static_cast<unsigned>(i - 1))});
    }
    for (int i = 1; i <= k; ++i) {
        interest[1].push_back(static_cast<int>(goods.size()));
        goods.push_back({"g'" + std::to_string(i), step.pow(static_cast<unsigned>(i - 1))});
    }
    return Instance(2, std::move(goods), interest);
}

Instance random_instance(std::uint64_t seed, int n, int m, const ValueLaw& law,
                         double interest_prob) {
    if (n < 1 || m < 0) throw InputError("random instance needs n >= 1 and m >= 0");
    if (law.lo < 1 || law.hi < law.lo) throw InputError("value law needs 1 <= lo <= hi");
    if (interest_prob < 0.0 || interest_prob > 1.0)
        throw InputError("interest probability must lie in [0, 1]");

    // Raw engine draws only: std::random distributions are not pinned by
    // the standard, mt19937_64 output is.
    std::mt19937_64 eng(seed);
    const std::uint64_t span = static_cast<std::uint64_t>(law.hi - law.lo + 1);
    const std::uint64_t threshold =
        static_cast<std::uint64_t>(interest_prob * 1'000'000.0 + 0.5);

    std::vector<GoodSpec> goods;
    goods.reserve(m);
    for (int g = 0; g < m; ++g)
        goods.push_back({"g" + std::to_string(g),
                         Value{law.lo + static_cast<long long>(eng() % span)}});

    std::vector<std::vector<int>> interest(n);
    for (int i = 0; i < n; ++i)
        for (int g = 0; g < m; ++g)
            if (eng() % 1'000'000 < threshold) interest[i].push_back(g);

    return Instance(n, std::move(goods), interest);
}

Instance fuzz_instance(std::uint64_t seed, const FuzzShape& shape) {
    if (shape.n_min < 1 || shape.n_max < shape.n_min || shape.m_min < 0 ||
        shape.m_max < shape.m_min)
        throw InputError("malformed fuzz shape");
    // Separate stream for the shape so instance content stays a pure
    // function of (seed, n, m).
    std::mt19937_64 pick(seed ^ 0x9E3779B97F4A7C15ULL);
    const int n = shape.n_min + static_cast<int>(pick() % (shape.n_max - shape.n_min + 1));
    const int m = shape.m_min + static_cast<int>(pick() % (shape.m_max - shape.m_min + 1));
    return random_instance(seed, n, m, shape.law, shape.interest_prob);
}

} // namespace fairdiv
