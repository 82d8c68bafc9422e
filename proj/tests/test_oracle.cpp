#include "fairdiv/errors.hpp"
#include "fairdiv/fairness.hpp"
#include "fairdiv/oracle.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <set>
#include <string>
#include <vector>

using namespace fairdiv;
using testutil::alloc_of;
using testutil::ids;
using testutil::make_instance;
using testutil::two_agent_fixture;

namespace {

// One character per good: holder index, or 'P' for the pool.
std::string placement(const Instance& inst, const Allocation& alloc) {
    std::string out(inst.goods(), 'P');
    for (std::size_t i = 0; i < alloc.bundles.size(); ++i)
        for (int g : alloc.bundles[i]) out[g] = static_cast<char>('0' + i);
    return out;
}

} // namespace

TEST_CASE("enumerator streams every complete allocation exactly once") {
    const Instance inst = two_agent_fixture();
    AllocationEnumerator stream(inst, false);

    std::vector<std::string> seen;
    while (auto alloc = stream.next()) {
        CHECK(alloc->pool.empty());
        seen.push_back(placement(inst, *alloc));
    }
    CHECK(seen.size() == 8);
    CHECK(std::set<std::string>(seen.begin(), seen.end()).size() == 8);

    // Everything starts with agent 0 and the last good flips first.
    CHECK(seen[0] == "000");
    CHECK(seen[1] == "001");
    CHECK(seen[7] == "111");
}

TEST_CASE("enumerator with a pool adds one extra destination per good") {
    const Instance inst = make_instance(1, {{"a", "1"}, {"b", "1"}}, {{"a", "b"}});
    AllocationEnumerator stream(inst, true);

    std::vector<std::string> seen;
    while (auto alloc = stream.next()) seen.push_back(placement(inst, *alloc));
    CHECK(seen == std::vector<std::string>{"00", "0P", "P0", "PP"});
}

TEST_CASE("enumerator refuses instances beyond the cap") {
    const Instance big = random_instance(0, 3, 20);
    CHECK_THROWS_AS(AllocationEnumerator(big, false), InputError);
    // A generous cap admits the same instance.
    AllocationEnumerator ok(big, false, 4'000'000'000ULL);
    CHECK(ok.next().has_value());
}

TEST_CASE("enumerator with no goods yields the single empty allocation") {
    const Instance inst = make_instance(2, {}, {{}, {}});
    AllocationEnumerator stream(inst, false);
    auto first = stream.next();
    REQUIRE(first.has_value());
    CHECK(first->bundles.size() == 2);
    CHECK(first->bundles[0].empty());
    CHECK(first->bundles[1].empty());
    CHECK(first->pool.empty());
    CHECK(!stream.next().has_value());
}

TEST_CASE("exists_allocation returns the first satisfying allocation") {
    const Instance inst = two_agent_fixture();
    auto efx = exists_allocation(
        inst, [&](const Allocation& a) { return !check_efkx(inst, a, 1).has_value(); });
    REQUIRE(efx.has_value());
    CHECK(efx->bundles[0] == ids(inst, {"g1"}));
    CHECK(efx->bundles[1] == ids(inst, {"g2", "g3"}));

    CHECK(!exists_allocation(inst, [](const Allocation&) { return false; }).has_value());
}

TEST_CASE("counterexample instance carries the geometric value ladder") {
    const Instance one = counterexample_instance(1, Value{1});
    REQUIRE(one.agents() == 2);
    REQUIRE(one.goods() == 3);
    CHECK(one.good_id(0) == "g");
    CHECK(one.good_id(1) == "g1");
    CHECK(one.good_id(2) == "g'1");
    CHECK(one.inherent_value(0) == Value{2});
    CHECK(one.inherent_value(1) == Value{1});
    CHECK(one.inherent_value(2) == Value{1});
    CHECK(one.interested(0, 0));
    CHECK(one.interested(0, 1));
    CHECK(!one.interested(0, 2));
    CHECK(one.interested(1, 0));
    CHECK(!one.interested(1, 1));
    CHECK(one.interested(1, 2));

    const Instance two = counterexample_instance(2, Value{1});
    REQUIRE(two.goods() == 5);
    CHECK(two.inherent_value(two.good_index("g")) == Value{4});
    CHECK(two.inherent_value(two.good_index("g1")) == Value{1});
    CHECK(two.inherent_value(two.good_index("g2")) == Value{2});
    CHECK(two.inherent_value(two.good_index("g'1")) == Value{1});
    CHECK(two.inherent_value(two.good_index("g'2")) == Value{2});

    // c = 1/2 stretches the ratio to 3.
    const Instance half = counterexample_instance(1, Value::ratio(1, 2));
    CHECK(half.inherent_value(half.good_index("g")) == Value{3});
    CHECK(half.inherent_value(half.good_index("g1")) == Value{1});

    CHECK_THROWS_AS(counterexample_instance(0, Value{1}), InputError);
    CHECK_THROWS_AS(counterexample_instance(1, Value{0}), InputError);
    CHECK_THROWS_AS(counterexample_instance(1, Value{2}), InputError);
}

TEST_CASE("no complete allocation of the counterexample is both fair and efficient") {
    const Instance inst = counterexample_instance(1, Value{1});
    AllocationEnumerator stream(inst, false);
    int fair_and_efficient = 0;
    while (auto alloc = stream.next()) {
        const bool efx = !check_efkx(inst, *alloc, 1).has_value();
        const bool po = !check_pareto_bruteforce(inst, *alloc).has_value();
        if (efx && po) ++fair_and_efficient;
    }
    CHECK(fair_and_efficient == 0);

    // Each property alone is attainable: splitting the privates is fair,
    // handing the shared good out on top is efficient.
    const Allocation fair = alloc_of(inst, {{"g1", "g'1"}, {"g"}});
    CHECK(!check_efkx(inst, fair, 1).has_value());
    CHECK(check_pareto_bruteforce(inst, fair).has_value());

    const Allocation efficient = alloc_of(inst, {{"g", "g1"}, {"g'1"}});
    CHECK(!check_pareto_bruteforce(inst, efficient).has_value());
    CHECK(check_efkx(inst, efficient, 1).has_value());
}

TEST_CASE("random instances are deterministic per seed") {
    const Instance a = random_instance(7, 4, 9);
    const Instance b = random_instance(7, 4, 9);
    CHECK(a == b);
    CHECK(!(a == random_instance(8, 4, 9)));
}

TEST_CASE("random instance generation validates its knobs") {
    CHECK_THROWS_AS(random_instance(0, 0, 3), InputError);
    CHECK_THROWS_AS(random_instance(0, 2, -1), InputError);
    CHECK_THROWS_AS(random_instance(0, 2, 3, ValueLaw{0, 5}), InputError);
    CHECK_THROWS_AS(random_instance(0, 2, 3, ValueLaw{5, 2}), InputError);
    CHECK_THROWS_AS(random_instance(0, 2, 3, {}, 1.5), InputError);
    CHECK_THROWS_AS(random_instance(0, 2, 3, {}, -0.1), InputError);
}

TEST_CASE("interest probability extremes fill or empty the interest matrix") {
    const Instance all = random_instance(11, 3, 6, {}, 1.0);
    for (int i = 0; i < all.agents(); ++i)
        for (int g = 0; g < all.goods(); ++g) CHECK(all.interested(i, g));

    const Instance none = random_instance(11, 3, 6, {}, 0.0);
    for (int i = 0; i < none.agents(); ++i)
        for (int g = 0; g < none.goods(); ++g) CHECK(!none.interested(i, g));
}

TEST_CASE("random values respect the inclusive law bounds") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const Instance inst = random_instance(seed, 3, 12, ValueLaw{3, 5});
        for (int g = 0; g < inst.goods(); ++g) {
            CHECK(inst.inherent_value(g) >= Value{3});
            CHECK(inst.inherent_value(g) <= Value{5});
        }
    }
}

TEST_CASE("fuzz instances stay inside the requested shape") {
    const FuzzShape shape{};
    for (std::uint64_t seed = 0; seed <= 50; ++seed) {
        const Instance inst = fuzz_instance(seed, shape);
        CHECK(inst.agents() >= shape.n_min);
        CHECK(inst.agents() <= shape.n_max);
        CHECK(inst.goods() >= shape.m_min);
        CHECK(inst.goods() <= shape.m_max);
    }
    CHECK(fuzz_instance(5) == fuzz_instance(5));

    FuzzShape bad;
    bad.n_min = 0;
    CHECK_THROWS_AS(fuzz_instance(0, bad), InputError);
    FuzzShape swapped;
    swapped.m_min = 4;
    swapped.m_max = 2;
    CHECK_THROWS_AS(fuzz_instance(0, swapped), InputError);
}
