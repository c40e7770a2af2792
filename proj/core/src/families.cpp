#include "nsfact/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace nsfact {

namespace {

void require_family_index(int i) {
    if (i < 5 || i % 2 == 0)
        throw BadParameter("family index must be odd and >= 5, got " + std::to_string(i));
}

// T(i) for every odd i >= 3. The public entry point starts at i = 5, but the
// factor lists reach down to T(3) = <2, 5>.
NumericalSemigroup t_semigroup(int i) {
    std::vector<int> small{0};
    for (int v = (i + 1) / 2; v <= i - 1; ++v) small.push_back(v);
    small.push_back(i + 1);
    return NumericalSemigroup::from_small_elements(std::move(small));
}

} // namespace

NumericalSemigroup t_family(int i) {
    require_family_index(i);
    return t_semigroup(i);
}

NumericalSemigroup s_family(int i) {
    require_family_index(i);
    // Below i+1 the members of <2,i> ^ T(i) are exactly the even points of
    // [h, i-1]: odd members of <2,i> start at i, which T(i) lacks.
    const int h = (i + 1) / 2;
    std::vector<int> small{0};
    for (int v = h + (h % 2); v <= i - 1; v += 2) small.push_back(v);
    small.push_back(i + 1);
    auto s = NumericalSemigroup::from_small_elements(std::move(small));
    if (s != intersect(NumericalSemigroup::from_generators({2, i}), t_semigroup(i)))
        throw std::logic_error("s_family closed form diverged from <2,i> ^ T(i)");
    return s;
}

std::vector<int> b_set(int i) {
    require_family_index(i);
    const int h = (i + 1) / 2;
    std::vector<int> b;
    for (int j = h + (h % 2 == 0 ? 1 : 0); j <= i; j += 2) b.push_back(j);
    return b;
}

std::vector<int> sg_closed_form(int i) {
    require_family_index(i);
    const int h = (i + 1) / 2;
    std::vector<int> sg;
    // even special gaps: g needs 2g in S(i), so g runs from half the
    // multiplicity up to h - 1
    const int lo = (h % 2 == 0) ? (i + 1) / 4 : (i + 3) / 4;
    for (int v = lo + (lo % 2); v <= h - 1; v += 2) sg.push_back(v);
    for (int v = (h % 2 == 0) ? h + 1 : h; v <= i; v += 2) sg.push_back(v);
    return sg;
}

Factorization full_factorization(int i) {
    auto s = s_family(i);
    Factorization f{std::move(s), {}};
    for (int j : b_set(i)) f.factors.push_back(t_semigroup(j));
    std::sort(f.factors.begin(), f.factors.end());
    if (!is_factorization(f.target, f.factors))
        throw std::logic_error("full factorization of S(" + std::to_string(i) +
                               ") failed verification");
    return f;
}

Factorization stepped_factorization(int i, int t) {
    require_family_index(i);
    if (i % 4 != 3)
        throw BadParameter("stepped factorizations need i == 3 (mod 4), got " +
                           std::to_string(i));
    const int kmax = (i - 3) / 4;
    if (t < 1 || t > kmax)
        throw BadParameter("step must lie in [1, " + std::to_string(kmax) + "], got " +
                           std::to_string(t));
    const int h = (i + 1) / 2;
    Factorization f{s_family(i), {}};
    f.factors.push_back(NumericalSemigroup::from_generators({2, h + 2 * t + 1}));
    for (int k = t; k <= kmax; ++k) f.factors.push_back(t_semigroup(h + 2 * k + 1));
    std::sort(f.factors.begin(), f.factors.end());
    if (!is_factorization(f.target, f.factors))
        throw std::logic_error("stepped factorization of S(" + std::to_string(i) +
                               ") at t = " + std::to_string(t) + " failed verification");
    return f;
}

WitnessPair witness_for_pair(int k, int l) {
    if (k < 2 || l < 2)
        throw BadParameter("witness lengths must be at least 2, got " + std::to_string(k) +
                           " and " + std::to_string(l));
    const int m = std::max(k, l);
    const int i = 4 * m - 1;
    auto build = [i, m](int len) {
        return len == m ? full_factorization(i) : stepped_factorization(i, m - len + 1);
    };
    // Equal lengths still yield two distinct factorizations: the full one and
    // the longest stepped one share the length (i+1)/4 but not the factors.
    return WitnessPair{s_family(i), build(k),
                       k == l ? stepped_factorization(i, 1) : build(l)};
}

FamilyInstance family_instance(int i, std::optional<int> stepped_t) {
    require_family_index(i);
    auto s = s_family(i);
    auto computed = analyze(s).special_gaps;
    std::optional<Factorization> stepped;
    if (stepped_t) stepped = stepped_factorization(i, *stepped_t);
    return FamilyInstance{i,
                          ((i + 1) / 2) % 2 == 0,
                          std::move(s),
                          t_semigroup(i),
                          b_set(i),
                          sg_closed_form(i),
                          std::move(computed),
                          full_factorization(i),
                          std::move(stepped)};
}

} // namespace nsfact
