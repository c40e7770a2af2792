#pragma once

#include <cstddef>
#include <vector>

#include "nsfact/semigroup.hpp"

namespace nsfact {

// Safety caps for the exhaustive searches. Exceeding one raises CapExceeded.
struct EnumerationLimits {
    std::size_t max_oversemigroups = 1'000'000;
    std::size_t max_factorizations = 1'000'000;
    unsigned long long max_search_nodes = 50'000'000ULL;
};

// Every semigroup containing s (s itself and N included), sorted canonically.
// The set is finite: each oversemigroup is determined by which gaps of s it
// fills in. Found by repeatedly adjoining special gaps.
std::vector<NumericalSemigroup> oversemigroups(const NumericalSemigroup& s,
                                               const EnumerationLimits& limits = {});

// The irreducible ones among the above, same order.
std::vector<NumericalSemigroup> irreducible_oversemigroups(const NumericalSemigroup& s,
                                                           const EnumerationLimits& limits = {});

} // namespace nsfact
