#pragma once

#include <vector>

#include "nsfact/oversemigroups.hpp"
#include "nsfact/rational.hpp"
#include "nsfact/semigroup.hpp"

namespace nsfact {

// One way of writing `target` as an irredundant intersection of irreducible
// oversemigroups. Factors are sorted canonically.
struct Factorization {
    NumericalSemigroup target;
    std::vector<NumericalSemigroup> factors;

    int length() const { return static_cast<int>(factors.size()); }
};

// Special gaps of s that t fails to contain. Throws NotOversemigroup unless
// s is a subset of t. An intersection of oversemigroups equals s exactly when
// their coverage sets together exhaust the special gaps of s.
std::vector<int> coverage_set(const NumericalSemigroup& s, const NumericalSemigroup& t);

// Checks that `factors` is a factorization of s: all irreducible, coverage
// sets exhausting SG(s), and none redundant. Throws NotOversemigroup if some
// candidate does not contain s. For s == N the only factorization is {N}.
bool is_factorization(const NumericalSemigroup& s,
                      const std::vector<NumericalSemigroup>& factors);

// Every factorization of s into irreducibles, sorted canonically; each is
// minimal in the sense that no factor can be dropped.
std::vector<Factorization> minimal_factorizations(const NumericalSemigroup& s,
                                                  const EnumerationLimits& limits = {});

// The set of factorization lengths together with its spread.
struct LengthProfile {
    std::vector<int> lengths; // sorted, distinct
    int min = 0;
    int max = 0;
    Rational elasticity;      // max / min
    bool is_interval = false; // lengths == [min, min+1, ..., max]
};

LengthProfile length_profile(const NumericalSemigroup& s, const EnumerationLimits& limits = {});

// Same aggregation over an already-computed factorization list (must be
// nonempty).
LengthProfile profile_from(const std::vector<Factorization>& factorizations);

// Union of the length sets of all members of `universe` whose length set
// contains k. Throws BadParameter when k < 1.
std::vector<int> union_of_lengths(int k, const std::vector<NumericalSemigroup>& universe,
                                  const EnumerationLimits& limits = {});

} // namespace nsfact
