#include "nsfact/semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <optional>
#include <ostream>
#include <utility>

namespace nsfact {

namespace {

// First pair of nonzero members whose sum lands in the complement, if any.
// Sums past the last entry are always members and need no check.
std::optional<std::pair<int, int>> closure_violation(const std::vector<int>& small) {
    const int f = small.back() - 1;
    for (std::size_t a = 1; a < small.size(); ++a) {
        for (std::size_t b = a; b < small.size(); ++b) {
            const int sum = small[a] + small[b];
            if (sum > f) break;
            if (!std::binary_search(small.begin(), small.end(), sum))
                return std::make_pair(small[a], small[b]);
        }
    }
    return std::nullopt;
}

} // namespace

NumericalSemigroup detail::from_small_unchecked(std::vector<int> small) {
    assert(!small.empty() && small.front() == 0);
    assert(std::is_sorted(small.begin(), small.end()));
    assert(!closure_violation(small));
    return NumericalSemigroup(std::move(small));
}

NumericalSemigroup NumericalSemigroup::nat() { return NumericalSemigroup({0}); }

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<int> generators,
                                                       int sieve_cap) {
    if (generators.empty()) throw EmptyGenerators();
    for (int g : generators)
        if (g <= 0)
            throw BadParameter("generators must be positive, got " + std::to_string(g));
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    long long d = 0;
    for (int g : generators) d = std::gcd(d, static_cast<long long>(g));
    if (d != 1) throw NotCoprime(d);
    if (generators.front() == 1) return nat();

    // Sieve membership upward until m consecutive members appear; from there
    // on everything is a member, and the run start minus one is the largest
    // non-member.
    const int m = generators.front();
    std::vector<char> member;
    member.reserve(256);
    member.push_back(1);
    int run = 0;
    int n = 0;
    while (run < m) {
        ++n;
        if (n > sieve_cap)
            throw CapExceeded("membership sieve passed " + std::to_string(sieve_cap) +
                              " elements without stabilizing");
        bool in = false;
        for (int g : generators) {
            if (g > n) break;
            if (member[n - g]) {
                in = true;
                break;
            }
        }
        member.push_back(in ? 1 : 0);
        run = in ? run + 1 : 0;
    }

    const int f = n - m;
    std::vector<int> small;
    for (int v = 0; v <= f + 1; ++v)
        if (member[v]) small.push_back(v);
    return NumericalSemigroup(std::move(small));
}

NumericalSemigroup NumericalSemigroup::from_gaps(std::vector<int> gaps) {
    for (int g : gaps)
        if (g <= 0) throw BadParameter("gaps must be positive, got " + std::to_string(g));
    std::sort(gaps.begin(), gaps.end());
    gaps.erase(std::unique(gaps.begin(), gaps.end()), gaps.end());
    if (gaps.empty()) return nat();

    const int f = gaps.back();
    std::vector<int> small;
    small.reserve(static_cast<std::size_t>(f) + 2 - gaps.size());
    std::size_t gi = 0;
    for (int v = 0; v <= f + 1; ++v) {
        if (gi < gaps.size() && gaps[gi] == v) {
            ++gi;
            continue;
        }
        small.push_back(v);
    }
    if (auto viol = closure_violation(small))
        throw NotClosed("complement not closed: " + std::to_string(viol->first) + " + " +
                        std::to_string(viol->second) + " = " +
                        std::to_string(viol->first + viol->second) + " is a gap");
    return NumericalSemigroup(std::move(small));
}

NumericalSemigroup NumericalSemigroup::from_small_elements(std::vector<int> small) {
    if (small.empty() || small.front() != 0)
        throw BadParameter("element list must start with 0");
    for (std::size_t k = 1; k < small.size(); ++k)
        if (small[k] <= small[k - 1])
            throw BadParameter("element list must be strictly increasing");
    if (small.size() > 1 && small[small.size() - 2] == small.back() - 1)
        throw BadParameter("element list must stop at the first point where the "
                           "semigroup becomes cofinal");
    if (auto viol = closure_violation(small))
        throw NotClosed("element list not closed: " + std::to_string(viol->first) + " + " +
                        std::to_string(viol->second) + " is missing");
    return NumericalSemigroup(std::move(small));
}

bool NumericalSemigroup::contains(int n) const {
    if (n < 0) return false;
    if (n >= small_.back()) return true;
    return std::binary_search(small_.begin(), small_.end(), n);
}

std::vector<int> NumericalSemigroup::gaps() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(genus()));
    std::size_t i = 0;
    for (int v = 0; v <= frobenius(); ++v) {
        if (i < small_.size() && small_[i] == v) {
            ++i;
            continue;
        }
        out.push_back(v);
    }
    return out;
}

std::strong_ordering operator<=>(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    if (auto c = a.genus() <=> b.genus(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.small_.begin(), a.small_.end(),
                                                  b.small_.begin(), b.small_.end());
}

std::string to_string(SymmetryClass c) {
    switch (c) {
    case SymmetryClass::symmetric: return "symmetric";
    case SymmetryClass::pseudo_symmetric: return "pseudo_symmetric";
    case SymmetryClass::reducible: return "reducible";
    case SymmetryClass::full: return "full";
    }
    return "?";
}

GapAnalysis analyze(const NumericalSemigroup& s) {
    GapAnalysis out;
    out.gaps = s.gaps();
    if (s.is_nat()) {
        out.pseudo_frobenius = {-1};
        return out;
    }
    // z + s' for s' past the stored list is automatically a member, so the
    // pseudo-Frobenius test only needs the nonzero stored elements.
    const auto& small = s.small_elements();
    for (int z : out.gaps) {
        bool pf = true;
        for (std::size_t k = 1; k < small.size() && pf; ++k)
            pf = s.contains(z + small[k]);
        if (!pf) continue;
        out.pseudo_frobenius.push_back(z);
        if (s.contains(2 * z)) out.special_gaps.push_back(z);
    }
    return out;
}

std::vector<int> minimal_generators(const NumericalSemigroup& s) {
    const int m = s.multiplicity();
    const int f = s.frobenius();
    // Anything past F + m splits off the multiplicity, so the search stops there.
    std::vector<int> gens;
    for (int n = m; n <= std::max(f + m, m); ++n) {
        if (!s.contains(n)) continue;
        bool is_sum = false;
        for (int a = m; a + m <= n && !is_sum; ++a)
            is_sum = s.contains(a) && s.contains(n - a);
        if (!is_sum) gens.push_back(n);
    }
    return gens;
}

std::ostream& operator<<(std::ostream& out, const NumericalSemigroup& s) {
    out << '{';
    for (std::size_t i = 0; i + 1 < s.small_elements().size(); ++i)
        out << s.small_elements()[i] << ", ";
    if (s.is_nat()) return out << "0, ->}";
    return out << s.small_elements().back() << ", ->}";
}

bool is_subset_of(const NumericalSemigroup& inner, const NumericalSemigroup& outer) {
    // A larger Frobenius number of `outer` is itself a member of `inner`.
    if (outer.frobenius() > inner.frobenius()) return false;
    for (int v : inner.small_elements())
        if (!outer.contains(v)) return false;
    return true;
}

NumericalSemigroup intersect(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    // The larger Frobenius number is a gap of one side, hence of the
    // intersection, so the canonical list runs exactly to max(Fa, Fb) + 1.
    const int f = std::max(a.frobenius(), b.frobenius());
    std::vector<int> small;
    for (int v = 0; v <= f + 1; ++v)
        if (a.contains(v) && b.contains(v)) small.push_back(v);
    return detail::from_small_unchecked(std::move(small));
}

NumericalSemigroup adjoin(const NumericalSemigroup& s, int g) {
    // S u {g} is a semigroup exactly when g is a special gap: 2g and g + s'
    // land back in S for every nonzero member s'.
    if (g < 0 || s.contains(g))
        throw NotSpecialGap(std::to_string(g) + " is not a gap");
    if (!s.contains(2 * g))
        throw NotSpecialGap("cannot adjoin " + std::to_string(g) + ": 2*" +
                            std::to_string(g) + " is not a member");
    const auto& small = s.small_elements();
    for (std::size_t k = 1; k < small.size(); ++k)
        if (!s.contains(g + small[k]))
            throw NotSpecialGap("cannot adjoin " + std::to_string(g) + ": " +
                                std::to_string(g) + "+" + std::to_string(small[k]) +
                                " is not a member");

    std::vector<int> gaps = s.gaps();
    gaps.erase(std::remove(gaps.begin(), gaps.end(), g), gaps.end());
    if (gaps.empty()) return NumericalSemigroup::nat();
    const int f = gaps.back();
    std::vector<int> small2;
    for (int v = 0; v <= f + 1; ++v)
        if (v == g || s.contains(v)) small2.push_back(v);
    return detail::from_small_unchecked(std::move(small2));
}

SymmetryClass classify(const NumericalSemigroup& s) {
    if (s.is_nat()) return SymmetryClass::full;
    const int spread = 2 * s.genus() - s.frobenius();
    if (spread == 1) return SymmetryClass::symmetric;
    if (spread == 2) return SymmetryClass::pseudo_symmetric;
    return SymmetryClass::reducible;
}

bool is_irreducible(const NumericalSemigroup& s) {
    return classify(s) != SymmetryClass::reducible;
}

} // namespace nsfact
