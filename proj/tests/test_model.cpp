#include <doctest.h>

#include "distpack/model.hpp"
#include "support/fixtures.hpp"

using namespace distpack;
using namespace distpack::testing;

TEST_CASE("benchmark instance is arithmetically feasible") {
    const auto report = instance_validate(t60_instance());
    CHECK(report.ok());
    CHECK(report.describe().empty());
}

TEST_CASE("instance_validate reports each violated constraint") {
    SUBCASE("count mismatch") {
        const auto r = instance_validate(make_instance({1, 2, 3}, 2, 2, 3));
        CHECK(r.has(ConstraintKind::count_mismatch));
        CHECK(r.describe().find("bins*per_bin=4 != n=3") != std::string::npos);
    }
    SUBCASE("sum mismatch") {
        const auto r = instance_validate(make_instance({1, 2, 3, 4}, 2, 2, 6));
        CHECK(r.has(ConstraintKind::sum_mismatch));
        CHECK_FALSE(r.has(ConstraintKind::count_mismatch));
        CHECK(r.describe().find("sum=10 != bins*capacity=12") != std::string::npos);
    }
    SUBCASE("size above capacity") {
        const auto r = instance_validate(make_instance({1, 7, 2, 2}, 2, 2, 6));
        CHECK(r.has(ConstraintKind::size_bounds));
    }
    SUBCASE("per-bin bounds and the relaxed override") {
        const auto whole = make_instance({1, 2, 3}, 1, 3, 6);
        CHECK(instance_validate(whole).has(ConstraintKind::per_bin_bounds));
        CHECK(instance_validate(make_instance({1, 2, 3}, 1, 3, 6, true)).ok());
        const auto singles = make_instance({4, 4}, 2, 1, 4);
        CHECK(instance_validate(singles).has(ConstraintKind::per_bin_bounds));
    }
    SUBCASE("zero parameters") {
        const auto r = instance_validate(make_instance({1, 2}, 0, 2, 3));
        CHECK(r.has(ConstraintKind::nonpositive_param));
    }
}

TEST_CASE("BinPattern canonicalizes and Packing sorts bins") {
    const BinPattern p({447, 251, 302});
    CHECK(p.sizes() == std::vector<Size>{251, 302, 447});
    CHECK(p.sum() == 1000);
    CHECK(p.contains(302));
    CHECK_FALSE(p.contains(303));

    const Packing packing({BinPattern({3, 2}), BinPattern({4, 1})});
    REQUIRE(packing.bins.size() == 2);
    CHECK(packing.bins[0].sizes() == std::vector<Size>{1, 4});
    CHECK(packing.bins[1].sizes() == std::vector<Size>{2, 3});
}

TEST_CASE("instance digest tracks content only") {
    const auto a = make_instance({3, 1, 2, 4}, 2, 2, 5);
    const auto b = make_instance({4, 3, 2, 1}, 2, 2, 5);
    const auto c = make_instance({1, 2, 3, 4}, 2, 2, 6);
    CHECK(instance_digest(a) == instance_digest(b));
    CHECK(instance_digest(a) != instance_digest(c));
}

TEST_CASE("property: scaling maps valid instances to valid instances") {
    Rng rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const auto inst = random_small_instance(rng);
        const Size t = std::uniform_int_distribution<Size>(2, 1000)(rng);
        CHECK(instance_validate(inst).ok());
        CHECK(instance_validate(inst.scaled(t)).ok());
    }
}
