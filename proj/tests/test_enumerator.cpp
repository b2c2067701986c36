#include <doctest.h>

#include <set>

#include "distpack/enumerator.hpp"
#include "distpack/error.hpp"
#include "support/fixtures.hpp"

using namespace distpack;
using namespace distpack::testing;

namespace {

using Tuples = std::vector<std::vector<Size>>;

Tuples patterns_of(const Instance& inst, EnumerationMode mode) {
    return as_vectors(enumerate_patterns(inst, mode).patterns);
}

bool allow_repeats(EnumerationMode mode) { return mode == EnumerationMode::multiplicity_bounded; }

} // namespace

TEST_CASE("small enumerations") {
    const auto four = make_instance({1, 2, 3, 4}, 2, 2, 5);
    CHECK(patterns_of(four, EnumerationMode::distinct_values) == Tuples{{1, 4}, {2, 3}});
    CHECK(patterns_of(four, EnumerationMode::multiplicity_bounded) == Tuples{{1, 4}, {2, 3}});

    const auto twos = make_instance({2, 2, 2, 2}, 2, 2, 4);
    CHECK(patterns_of(twos, EnumerationMode::multiplicity_bounded) == Tuples{{2, 2}});
    CHECK(patterns_of(twos, EnumerationMode::distinct_values).empty());
}

TEST_CASE("multiplicity bound limits repeats inside a pattern") {
    // 3 appears twice, so (3,3,3) is out while (3,3,4) is in.
    const auto items = Multiset::from_list({3, 3, 4, 5, 5, 5, 1, 4, 10});
    const auto tuples = as_vectors(enumerate_patterns(items, 3, 10, EnumerationMode::multiplicity_bounded).patterns);
    CHECK(std::find(tuples.begin(), tuples.end(), std::vector<Size>{3, 3, 4}) != tuples.end());
    CHECK(std::find(tuples.begin(), tuples.end(), std::vector<Size>{1, 4, 5}) != tuples.end());
    CHECK(std::find(tuples.begin(), tuples.end(), std::vector<Size>{3, 3, 3}) == tuples.end());
    CHECK(tuples == brute_force_patterns(items, 3, 10, true));
}

TEST_CASE("benchmark instance yields 99 distinct-value triplets") {
    const auto inst = t60_instance();
    const auto ps = enumerate_patterns(inst);
    CHECK(ps.size() == 99);
    CHECK(as_vectors(ps.patterns) == brute_force_triples(t60_distinct_values(), 1000));
    CHECK(ps.patterns.front().sizes() == std::vector<Size>{251, 302, 447});
    CHECK(ps.patterns.back().sizes() == std::vector<Size>{319, 334, 347});
    // The first four triplets of the published listing, in order.
    CHECK(ps.patterns[1].sizes() == std::vector<Size>{251, 305, 444});
    CHECK(ps.patterns[2].sizes() == std::vector<Size>{251, 340, 409});
    CHECK(ps.patterns[3].sizes() == std::vector<Size>{251, 347, 402});
    // 441 and 406 are not item sizes, so these listed triplets cannot occur.
    const auto tuples = as_vectors(ps.patterns);
    const std::set<std::vector<Size>> all(tuples.begin(), tuples.end());
    CHECK(all.count({254, 305, 441}) == 0);
    CHECK(all.count({254, 340, 406}) == 0);
    CHECK(all.count({297, 307, 396}) == 1);
    CHECK(all.count({313, 340, 347}) == 1);
    CHECK(ps.source_digest == instance_digest(inst));
}

TEST_CASE("invalid instances and the pattern cap") {
    CHECK_THROWS_AS(enumerate_patterns(make_instance({1, 2, 3}, 2, 2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_patterns(t60_instance(), EnumerationMode::distinct_values, 50),
                    PatternExplosion);
    CHECK_NOTHROW(enumerate_patterns(t60_instance(), EnumerationMode::distinct_values, 99));
}

TEST_CASE("value_support") {
    const auto four = enumerate_patterns(make_instance({1, 2, 3, 4}, 2, 2, 5));
    const auto support = value_support(four);
    CHECK(support.at(1) == std::vector<std::size_t>{0});
    CHECK(support.at(2) == std::vector<std::size_t>{1});
    CHECK(support.at(3) == std::vector<std::size_t>{1});
    CHECK(support.at(4) == std::vector<std::size_t>{0});

    const auto fives = enumerate_patterns(make_instance({5, 5}, 1, 2, 10, true));
    CHECK(fives.empty());
    CHECK(value_support(fives).at(5).empty());

    const auto ps = enumerate_patterns(t60_instance());
    const auto t60_support = value_support(ps);
    const auto& s251 = t60_support.at(251);
    CHECK(s251.size() >= 4);
    CHECK(std::vector<std::size_t>(s251.begin(), s251.begin() + 4) == std::vector<std::size_t>{0, 1, 2, 3});
    for (const auto& [value, indices] : value_support(ps)) {
        for (auto i : indices) {
            CHECK(ps.patterns[i].contains(value));
        }
    }
}

TEST_CASE("pattern dump format") {
    const auto ps = enumerate_patterns(make_instance({1, 2, 3, 4}, 2, 2, 5));
    CHECK(format_pattern_dump(ps) ==
          "patterns=2 per_bin=2 capacity=5 mode=distinct-values\n1 4\n2 3\n");
    CHECK(parse_mode("multiplicity-bounded") == EnumerationMode::multiplicity_bounded);
    CHECK_FALSE(parse_mode("bogus"));
}

TEST_CASE("property: enumeration equals brute force") {
    Rng rng(0x5EED);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t distinct = std::uniform_int_distribution<std::size_t>(1, 60)(rng);
        const std::size_t width = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
        const Size max_value = std::uniform_int_distribution<Size>(static_cast<Size>(distinct), 150)(rng);
        std::vector<Size> values;
        std::uniform_int_distribution<Size> value(1, max_value);
        for (std::size_t i = 0; i < distinct; ++i) {
            values.push_back(value(rng));
            if (std::bernoulli_distribution(0.3)(rng)) {
                values.push_back(values.back());
            }
        }
        // A capacity that at least one tuple reaches.
        Size capacity = 0;
        for (std::size_t i = 0; i < width; ++i) {
            capacity += values[std::uniform_int_distribution<std::size_t>(0, values.size() - 1)(rng)];
        }
        const auto items = Multiset::from_list(values);
        for (auto mode : {EnumerationMode::distinct_values, EnumerationMode::multiplicity_bounded}) {
            const auto got = as_vectors(enumerate_patterns(items, width, capacity, mode).patterns);
            CHECK(got == brute_force_patterns(items, width, capacity, allow_repeats(mode)));
            for (const auto& t : got) {
                CHECK(t.size() == width);
                CHECK(std::accumulate(t.begin(), t.end(), Size{0}) == capacity);
            }
        }
    }
}

TEST_CASE("property: removing a value never adds patterns") {
    Rng rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        const auto inst = random_small_instance(rng, true);
        const auto values = extracted_set(inst.items);
        if (values.size() < 2) {
            continue;
        }
        const Size dropped = values[std::uniform_int_distribution<std::size_t>(0, values.size() - 1)(rng)];
        for (auto mode : {EnumerationMode::distinct_values, EnumerationMode::multiplicity_bounded}) {
            const auto before = patterns_of(inst, mode);
            Multiset::Entries kept = inst.items.entries();
            kept.erase(dropped);
            const auto after = as_vectors(
                enumerate_patterns(Multiset::from_counts(kept), inst.per_bin, inst.capacity, mode).patterns);
            Tuples restricted;
            for (const auto& t : before) {
                if (std::find(t.begin(), t.end(), dropped) == t.end()) {
                    restricted.push_back(t);
                }
            }
            CHECK(after == restricted);
        }
    }
}

TEST_CASE("property: scaling commutes with enumeration") {
    Rng rng(1234);
    for (int trial = 0; trial < 500; ++trial) {
        const auto inst = random_small_instance(rng);
        const Size t = std::uniform_int_distribution<Size>(2, 97)(rng);
        for (auto mode : {EnumerationMode::distinct_values, EnumerationMode::multiplicity_bounded}) {
            auto scaled_first = patterns_of(inst.scaled(t), mode);
            auto base = patterns_of(inst, mode);
            for (auto& tuple : base) {
                for (auto& v : tuple) {
                    v *= t;
                }
            }
            CHECK(scaled_first == base);
        }
    }
}

TEST_CASE("enumeration is deterministic") {
    const auto a = enumerate_patterns(t60_instance(), EnumerationMode::multiplicity_bounded);
    const auto b = enumerate_patterns(t60_instance(), EnumerationMode::multiplicity_bounded);
    CHECK(format_pattern_dump(a) == format_pattern_dump(b));
    CHECK(std::is_sorted(a.patterns.begin(), a.patterns.end()));
    CHECK(std::adjacent_find(a.patterns.begin(), a.patterns.end()) == a.patterns.end());
}
