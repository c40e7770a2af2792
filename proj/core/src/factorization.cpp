#include "nsfact/factorization.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <set>
#include <string>
#include <utility>

namespace nsfact {

namespace {

// Bitset over special-gap indices. The count can pass 64, so words are chained.
class CoverMask {
public:
    explicit CoverMask(std::size_t bits) : bits_(bits), w_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { w_[i >> 6] |= 1ULL << (i & 63); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1ULL; }

    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    bool full() const {
        if (w_.empty()) return true;
        for (std::size_t i = 0; i + 1 < w_.size(); ++i)
            if (w_[i] != ~0ULL) return false;
        const std::size_t rem = bits_ & 63;
        return w_.back() == (rem ? (1ULL << rem) - 1 : ~0ULL);
    }

    CoverMask& operator|=(const CoverMask& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }

    // this & ~o
    CoverMask minus(const CoverMask& o) const {
        CoverMask r = *this;
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
        return r;
    }

    std::size_t first_clear() const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] != ~0ULL)
                return (i << 6) + static_cast<std::size_t>(std::countr_one(w_[i]));
        return bits_;
    }

private:
    std::size_t bits_;
    std::vector<std::uint64_t> w_;
};

CoverMask coverage_mask(const NumericalSemigroup& t, const std::vector<int>& sg) {
    CoverMask m(sg.size());
    for (std::size_t j = 0; j < sg.size(); ++j)
        if (!t.contains(sg[j])) m.set(j);
    return m;
}

// Enumerates every irredundant cover of the special gaps exactly once.
// Covers are partitioned by the lowest-indexed factor covering the first
// uncovered gap: branch k keeps coverer k and bars coverers 0..k-1 from its
// subtree. Private masks (bits of a chosen factor no other chosen factor
// covers) prune redundancy as soon as it appears; they only shrink as factors
// are added, so a dead prefix cannot lead to an irredundant cover.
class CoverSearch {
public:
    CoverSearch(const std::vector<CoverMask>& cov, std::size_t bits,
                const EnumerationLimits& limits)
        : cov_(cov), bits_(bits), limits_(limits), excluded_(cov.size(), 0) {}

    std::vector<std::vector<int>> run() {
        std::vector<int> chosen;
        std::vector<CoverMask> priv;
        recurse(chosen, CoverMask(bits_), priv);
        return std::move(found_);
    }

private:
    void recurse(std::vector<int>& chosen, const CoverMask& covered,
                 std::vector<CoverMask>& priv) {
        if (++nodes_ > limits_.max_search_nodes)
            throw CapExceeded("factorization search exceeded " +
                              std::to_string(limits_.max_search_nodes) + " nodes");
        if (covered.full()) {
            found_.push_back(chosen);
            if (found_.size() > limits_.max_factorizations)
                throw CapExceeded("more than " +
                                  std::to_string(limits_.max_factorizations) +
                                  " factorizations");
            return;
        }
        CoverMask reach = covered;
        for (std::size_t i = 0; i < cov_.size(); ++i)
            if (!excluded_[i]) reach |= cov_[i];
        if (!reach.full()) return;

        const std::size_t g = covered.first_clear();
        std::vector<int> coverers;
        for (std::size_t i = 0; i < cov_.size(); ++i)
            if (!excluded_[i] && cov_[i].test(g)) coverers.push_back(static_cast<int>(i));

        for (int c : coverers) {
            excluded_[c] = 1; // stays set for later branches: they must avoid c
            std::vector<CoverMask> priv2;
            priv2.reserve(priv.size() + 1);
            bool dead = false;
            for (const auto& p : priv) {
                CoverMask q = p.minus(cov_[c]);
                if (q.empty()) {
                    dead = true;
                    break;
                }
                priv2.push_back(std::move(q));
            }
            if (!dead) {
                priv2.push_back(cov_[c].minus(covered)); // keeps bit g: never empty
                CoverMask covered2 = covered;
                covered2 |= cov_[c];
                chosen.push_back(c);
                recurse(chosen, covered2, priv2);
                chosen.pop_back();
            }
        }
        for (int c : coverers) excluded_[c] = 0;
    }

    const std::vector<CoverMask>& cov_;
    std::size_t bits_;
    const EnumerationLimits& limits_;
    std::vector<char> excluded_;
    std::vector<std::vector<int>> found_;
    unsigned long long nodes_ = 0;
};

} // namespace

std::vector<int> coverage_set(const NumericalSemigroup& s, const NumericalSemigroup& t) {
    if (!is_subset_of(s, t))
        throw NotOversemigroup("coverage is defined only against oversemigroups");
    std::vector<int> out;
    for (int h : analyze(s).special_gaps)
        if (!t.contains(h)) out.push_back(h);
    return out;
}

bool is_factorization(const NumericalSemigroup& s,
                      const std::vector<NumericalSemigroup>& factors) {
    for (const auto& t : factors)
        if (!is_subset_of(s, t))
            throw NotOversemigroup("candidate factor does not contain the target");
    if (s.is_nat()) return factors.size() == 1 && factors.front().is_nat();
    if (factors.empty()) return false;
    for (const auto& t : factors)
        if (!is_irreducible(t)) return false;

    // The intersection equals s exactly when the coverage sets exhaust the
    // special gaps; a factor is redundant exactly when it covers nothing
    // privately. Duplicated factors shadow each other and fail here.
    const std::vector<int> sg = analyze(s).special_gaps;
    std::vector<CoverMask> cov;
    cov.reserve(factors.size());
    for (const auto& t : factors) cov.push_back(coverage_mask(t, sg));

    CoverMask all(sg.size());
    for (const auto& m : cov) all |= m;
    if (!all.full()) return false;

    for (std::size_t i = 0; i < cov.size(); ++i) {
        CoverMask priv = cov[i];
        for (std::size_t j = 0; j < cov.size(); ++j)
            if (j != i) priv = priv.minus(cov[j]);
        if (priv.empty()) return false;
    }

#ifndef NDEBUG
    NumericalSemigroup meet = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) meet = intersect(meet, factors[i]);
    assert(meet == s);
#endif
    return true;
}

std::vector<Factorization> minimal_factorizations(const NumericalSemigroup& s,
                                                  const EnumerationLimits& limits) {
    if (s.is_nat()) return {Factorization{s, {s}}};

    const std::vector<int> sg = analyze(s).special_gaps;
    std::vector<NumericalSemigroup> cand;
    std::vector<CoverMask> cov;
    for (auto& t : irreducible_oversemigroups(s, limits)) {
        CoverMask m = coverage_mask(t, sg);
        if (m.empty()) continue; // covers nothing, can never be a factor
        cand.push_back(std::move(t));
        cov.push_back(std::move(m));
    }

    CoverSearch search(cov, sg.size(), limits);
    std::vector<Factorization> out;
    for (const auto& idx : search.run()) {
        Factorization f{s, {}};
        f.factors.reserve(idx.size());
        for (int i : idx) f.factors.push_back(cand[static_cast<std::size_t>(i)]);
        std::sort(f.factors.begin(), f.factors.end());
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(),
              [](const Factorization& a, const Factorization& b) { return a.factors < b.factors; });
    return out;
}

LengthProfile profile_from(const std::vector<Factorization>& factorizations) {
    if (factorizations.empty())
        throw BadParameter("length profile needs at least one factorization");
    LengthProfile out;
    std::set<int> lengths;
    for (const auto& f : factorizations) lengths.insert(f.length());
    out.lengths.assign(lengths.begin(), lengths.end());
    out.min = out.lengths.front();
    out.max = out.lengths.back();
    out.elasticity = Rational(out.max, out.min);
    out.is_interval = static_cast<int>(out.lengths.size()) == out.max - out.min + 1;
    return out;
}

LengthProfile length_profile(const NumericalSemigroup& s, const EnumerationLimits& limits) {
    return profile_from(minimal_factorizations(s, limits));
}

std::vector<int> union_of_lengths(int k, const std::vector<NumericalSemigroup>& universe,
                                  const EnumerationLimits& limits) {
    if (k < 1) throw BadParameter("length must be at least 1, got " + std::to_string(k));
    std::set<int> acc;
    for (const auto& s : universe) {
        const auto profile = length_profile(s, limits);
        if (std::binary_search(profile.lengths.begin(), profile.lengths.end(), k))
            acc.insert(profile.lengths.begin(), profile.lengths.end());
    }
    return {acc.begin(), acc.end()};
}

} // namespace nsfact
