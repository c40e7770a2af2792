#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace oracle {

namespace {

int max_gap(GapMask m) { return 32 - std::countl_zero(m); } // 0 when m == 0

bool is_gap(GapMask m, int v) { return v >= 1 && v <= 32 && ((m >> (v - 1)) & 1u); }

} // namespace

GapMask mask_of(const nsfact::NumericalSemigroup& s) {
    if (s.frobenius() >= 32) throw std::logic_error("oracle masks stop at Frobenius 31");
    GapMask m = 0;
    for (int g : s.gaps()) m |= 1u << (g - 1);
    return m;
}

std::vector<int> gaps_of(GapMask m) {
    std::vector<int> out;
    for (int v = 1; v <= max_gap(m); ++v)
        if (is_gap(m, v)) out.push_back(v);
    return out;
}

nsfact::NumericalSemigroup semigroup_of(GapMask m) {
    return nsfact::NumericalSemigroup::from_gaps(gaps_of(m));
}

bool complement_closed(GapMask m) {
    const int top = max_gap(m);
    for (int a = 1; a <= top; ++a) {
        if (is_gap(m, a)) continue;
        for (int b = a; a + b <= top; ++b) {
            if (is_gap(m, b)) continue;
            if (is_gap(m, a + b)) return false;
        }
    }
    return true;
}

std::vector<GapMask> all_semigroups_up_to_genus(int g_max) {
    if (g_max < 0 || g_max > 15) throw std::logic_error("oracle enumerates genus 0..15");
    const GapMask limit = g_max == 0 ? 1u : (1u << (2 * g_max - 1));
    std::vector<GapMask> out;
    for (GapMask m = 0; m < limit; ++m)
        if (std::popcount(m) <= g_max && complement_closed(m)) out.push_back(m);
    return out;
}

std::vector<GapMask> oversemigroup_masks(GapMask m) {
    std::vector<GapMask> out;
    GapMask sub = m;
    while (true) {
        if (complement_closed(sub)) out.push_back(sub);
        if (sub == 0) break;
        sub = (sub - 1) & m;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool irreducible_by_definition(GapMask m) {
    static std::unordered_map<GapMask, bool> memo;
    if (auto it = memo.find(m); it != memo.end()) return it->second;

    std::vector<GapMask> strict;
    for (GapMask t : oversemigroup_masks(m))
        if (t != m) strict.push_back(t);
    bool irreducible = true;
    for (std::size_t i = 0; i < strict.size() && irreducible; ++i)
        for (std::size_t j = i + 1; j < strict.size() && irreducible; ++j)
            if ((strict[i] | strict[j]) == m) irreducible = false;
    memo.emplace(m, irreducible);
    return irreducible;
}

std::vector<int> special_gaps_by_definition(GapMask m) {
    std::vector<int> out;
    for (int v = 1; v <= max_gap(m); ++v)
        if (is_gap(m, v) && complement_closed(m & ~(1u << (v - 1)))) out.push_back(v);
    return out;
}

std::vector<std::vector<GapMask>> minimal_factorizations_by_definition(GapMask m) {
    if (m == 0) return {{0u}};

    std::vector<GapMask> irr;
    for (GapMask t : oversemigroup_masks(m))
        if (t != 0 && irreducible_by_definition(t)) irr.push_back(t);

    const std::size_t n = irr.size();
    std::vector<GapMask> suffix(n + 1, 0);
    for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] | irr[i];

    std::vector<std::vector<GapMask>> found;
    std::vector<GapMask> chosen;
    auto rec = [&](auto&& self, std::size_t idx, GapMask covered) -> void {
        if (covered == m) {
            // Supersets of a complete cover are never irredundant, so stop
            // here; drop the cover too if any one factor is expendable.
            for (std::size_t i = 0; i < chosen.size(); ++i) {
                GapMask rest = 0;
                for (std::size_t j = 0; j < chosen.size(); ++j)
                    if (j != i) rest |= chosen[j];
                if (rest == m) return;
            }
            found.push_back(chosen);
            return;
        }
        if (idx == n || (covered | suffix[idx]) != m) return;
        self(self, idx + 1, covered);
        chosen.push_back(irr[idx]);
        self(self, idx + 1, covered | irr[idx]);
        chosen.pop_back();
    };
    rec(rec, 0, 0);
    std::sort(found.begin(), found.end());
    return found;
}

} // namespace oracle
