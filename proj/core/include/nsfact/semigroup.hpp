#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "nsfact/errors.hpp"

namespace nsfact {

class NumericalSemigroup;

namespace detail {
// Wraps an element list without closure validation (debug builds assert it).
// For internal callers whose construction guarantees canonical form.
NumericalSemigroup from_small_unchecked(std::vector<int> small);
} // namespace detail

/**
 * A numerical semigroup: a subset of the nonnegative integers that contains 0,
 * is closed under addition, and has finite complement.
 *
 * The stored value is the sorted list of elements in [0, F+1], where F is the
 * Frobenius number (the largest integer not in the set; -1 when the set is all
 * of N). The list always begins with 0 and ends with F+1, so it determines the
 * semigroup completely: everything past the last entry is a member.
 */
class NumericalSemigroup {
public:
    // The full semigroup N (every nonnegative integer).
    static NumericalSemigroup nat();

    // Semigroup generated by the given positive integers. Throws
    // EmptyGenerators, BadParameter (nonpositive entry), or NotCoprime.
    // `sieve_cap` bounds how far membership is computed before giving up
    // with CapExceeded.
    static NumericalSemigroup from_generators(std::vector<int> generators,
                                              int sieve_cap = default_sieve_cap);

    // Semigroup whose complement in N is exactly `gaps`. Throws BadParameter
    // (nonpositive entry) or NotClosed when the complement fails closure.
    static NumericalSemigroup from_gaps(std::vector<int> gaps);

    // Rebuild from a stored element list: sorted, distinct, starting at 0,
    // with the last entry equal to F+1. Validates shape and closure.
    static NumericalSemigroup from_small_elements(std::vector<int> small);

    int frobenius() const { return small_.back() - 1; }
    const std::vector<int>& small_elements() const { return small_; }
    int genus() const { return frobenius() + 2 - static_cast<int>(small_.size()); }
    int multiplicity() const { return small_.size() > 1 ? small_[1] : 1; }
    bool is_nat() const { return small_.size() == 1; }

    bool contains(int n) const;
    std::vector<int> gaps() const;

    friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) = default;

    // Total order by (genus, element list); used for all canonical output.
    friend std::strong_ordering operator<=>(const NumericalSemigroup& a,
                                            const NumericalSemigroup& b);

    static constexpr int default_sieve_cap = 1 << 24;

private:
    explicit NumericalSemigroup(std::vector<int> small) : small_(std::move(small)) {}

    std::vector<int> small_;

    friend NumericalSemigroup detail::from_small_unchecked(std::vector<int>);
};

enum class SymmetryClass {
    symmetric,        // 2 * genus == F + 1
    pseudo_symmetric, // 2 * genus == F + 2
    reducible,        // neither; a proper intersection of larger semigroups
    full,             // N itself
};

std::string to_string(SymmetryClass c);

struct GapAnalysis {
    std::vector<int> gaps;
    std::vector<int> pseudo_frobenius; // PF(S) = { z not in S : z + s in S for all s in S, s > 0 }
    std::vector<int> special_gaps;     // SG(S) = { g in PF(S) : 2g in S }
};

// Gaps, pseudo-Frobenius numbers and special gaps in one pass.
// For N: gaps and special_gaps are empty, pseudo_frobenius is {-1}.
GapAnalysis analyze(const NumericalSemigroup& s);

// The unique minimal generating set (elements not expressible as a sum of two
// nonzero members).
std::vector<int> minimal_generators(const NumericalSemigroup& s);

// True when every element of `inner` lies in `outer`.
bool is_subset_of(const NumericalSemigroup& inner, const NumericalSemigroup& outer);

// "{0, 4, 6, 8, ->}" style rendering for logs and test diagnostics.
std::ostream& operator<<(std::ostream& out, const NumericalSemigroup& s);

NumericalSemigroup intersect(const NumericalSemigroup& a, const NumericalSemigroup& b);

// S together with one special gap g; throws NotSpecialGap when the union is
// not a semigroup.
NumericalSemigroup adjoin(const NumericalSemigroup& s, int g);

SymmetryClass classify(const NumericalSemigroup& s);

// Irreducible: not an intersection of two strictly larger semigroups.
// Equivalent to being symmetric, pseudo-symmetric, or N itself.
bool is_irreducible(const NumericalSemigroup& s);

} // namespace nsfact
