#include "nsfact/oversemigroups.hpp"

#include <set>
#include <string>
#include <utility>

namespace nsfact {

std::vector<NumericalSemigroup> oversemigroups(const NumericalSemigroup& s,
                                               const EnumerationLimits& limits) {
    // Closure walk: adjoining one special gap steps to a minimal strict
    // oversemigroup, and every oversemigroup is reached by a chain of such
    // steps (drop down from T to S one largest missing element at a time).
    std::set<NumericalSemigroup> seen{s};
    std::vector<NumericalSemigroup> work{s};
    while (!work.empty()) {
        NumericalSemigroup cur = std::move(work.back());
        work.pop_back();
        for (int g : analyze(cur).special_gaps) {
            NumericalSemigroup next = adjoin(cur, g);
            if (seen.insert(next).second) {
                if (seen.size() > limits.max_oversemigroups)
                    throw CapExceeded("more than " +
                                      std::to_string(limits.max_oversemigroups) +
                                      " oversemigroups");
                work.push_back(std::move(next));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<NumericalSemigroup> irreducible_oversemigroups(const NumericalSemigroup& s,
                                                           const EnumerationLimits& limits) {
    std::vector<NumericalSemigroup> out;
    for (auto& t : oversemigroups(s, limits))
        if (is_irreducible(t)) out.push_back(std::move(t));
    return out;
}

} // namespace nsfact
