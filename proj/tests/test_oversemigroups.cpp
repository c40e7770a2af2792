#include <doctest.h>

#include <algorithm>
#include <vector>

#include "nsfact/oversemigroups.hpp"
#include "oracles.hpp"

using nsfact::NumericalSemigroup;

TEST_CASE("oversemigroups of a small semigroup, canonical order") {
    auto s = NumericalSemigroup::from_generators({3, 4, 5});
    auto over = oversemigroups(s);
    REQUIRE(over.size() == 3);
    CHECK(over[0] == NumericalSemigroup::nat());
    CHECK(over[1] == NumericalSemigroup::from_generators({2, 3}));
    CHECK(over[2] == s);
    for (const auto& t : over) CHECK(is_subset_of(s, t));
    CHECK(std::is_sorted(over.begin(), over.end()));
}

TEST_CASE("oversemigroups of N") {
    auto over = oversemigroups(NumericalSemigroup::nat());
    REQUIRE(over.size() == 1);
    CHECK(over[0] == NumericalSemigroup::nat());
}

TEST_CASE("oversemigroups match the submask oracle up to genus 6") {
    for (oracle::GapMask m : oracle::all_semigroups_up_to_genus(6)) {
        auto s = oracle::semigroup_of(m);
        auto got = oversemigroups(s);
        CHECK(std::is_sorted(got.begin(), got.end()));
        std::vector<oracle::GapMask> got_masks;
        got_masks.reserve(got.size());
        for (const auto& t : got) got_masks.push_back(oracle::mask_of(t));
        std::sort(got_masks.begin(), got_masks.end());
        CHECK(got_masks == oracle::oversemigroup_masks(m));
    }
}

TEST_CASE("irreducibility agrees with its definition across all oversemigroups") {
    auto s = NumericalSemigroup::from_gaps({1, 2, 3, 5, 7});
    auto over = oversemigroups(s);
    auto irr = irreducible_oversemigroups(s);
    CHECK(irr.size() < over.size());
    for (const auto& t : irr) CHECK(is_irreducible(t));
    for (const auto& t : over)
        CHECK(is_irreducible(t) == oracle::irreducible_by_definition(oracle::mask_of(t)));

    auto has = [&](const NumericalSemigroup& t) {
        return std::find(irr.begin(), irr.end(), t) != irr.end();
    };
    CHECK(has(NumericalSemigroup::from_small_elements({0, 4, 5, 6, 8})));
    CHECK(has(NumericalSemigroup::from_generators({2, 9})));
    CHECK(!has(s)); // reducible, stays out
}

TEST_CASE("oversemigroup cap raises") {
    auto s = NumericalSemigroup::from_generators({3, 4, 5});
    CHECK_THROWS_AS(oversemigroups(s, {.max_oversemigroups = 2}), nsfact::CapExceeded);
}
