#include "nsfact/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>
#include <utility>

#include "nsfact/families.hpp"

namespace nsfact {

namespace {

// S minus one minimal generator x > F(S); the result has Frobenius number x.
NumericalSemigroup remove_element(const NumericalSemigroup& s, int x) {
    std::vector<int> small;
    small.reserve(s.small_elements().size() + static_cast<std::size_t>(x - s.frobenius()));
    for (int v = 0; v <= x + 1; ++v)
        if (v != x && s.contains(v)) small.push_back(v);
    return detail::from_small_unchecked(std::move(small));
}

void walk(const NumericalSemigroup& s, int g_max,
          const std::function<void(const NumericalSemigroup&)>& visit) {
    visit(s);
    if (s.genus() >= g_max) return;
    for (int x : minimal_generators(s))
        if (x > s.frobenius()) walk(remove_element(s, x), g_max, visit);
}

ScanRow make_row(const NumericalSemigroup& s, const EnumerationLimits& limits) {
    ScanRow row{s};
    row.min_gens = minimal_generators(s);
    row.sg = analyze(s).special_gaps;
    try {
        const auto profile = length_profile(s, limits);
        row.lengths = profile.lengths;
        row.min_len = profile.min;
        row.max_len = profile.max;
        row.elasticity = profile.elasticity;
        row.is_interval = profile.is_interval;
    } catch (const CapExceeded&) {
        row.capped = true;
    }
    return row;
}

void join_csv(std::ostream& out, const std::vector<int>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ';';
        out << xs[i];
    }
}

} // namespace

void enumerate_by_genus(int g_max,
                        const std::function<void(const NumericalSemigroup&)>& visit) {
    if (g_max < 0) throw BadParameter("genus bound must be nonnegative");
    walk(NumericalSemigroup::nat(), g_max, visit);
}

ScanSummary scan_intervals(const ScanOptions& options,
                           const std::function<void(const ScanRow&)>& sink) {
    if (options.g_max < 0) throw BadParameter("genus bound must be nonnegative");
    if (options.threads < 1) throw BadParameter("thread count must be positive");
    if (options.split_depth < 0) throw BadParameter("split depth must be nonnegative");

    // The tree up to `depth` is walked serially; each genus-`depth` node then
    // roots an independent subtree task. Rows are merged and sorted at the
    // end, so the output never depends on the thread count.
    const int depth = std::min(options.split_depth, options.g_max);
    std::vector<NumericalSemigroup> roots;
    std::vector<ScanRow> rows;
    std::function<void(const NumericalSemigroup&)> collect =
        [&](const NumericalSemigroup& s) {
            rows.push_back(make_row(s, options.limits));
            if (s.genus() == depth) {
                if (depth < options.g_max) roots.push_back(s);
                return;
            }
            for (int x : minimal_generators(s))
                if (x > s.frobenius()) collect(remove_element(s, x));
        };
    collect(NumericalSemigroup::nat());

    if (!roots.empty()) {
        std::vector<std::vector<ScanRow>> buckets(roots.size());
        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::mutex error_mutex;

        auto drain = [&] {
            try {
                std::size_t j;
                while ((j = next.fetch_add(1)) < roots.size() && !failed.load()) {
                    auto& bucket = buckets[j];
                    std::function<void(const NumericalSemigroup&)> expand =
                        [&](const NumericalSemigroup& s) {
                            for (int x : minimal_generators(s))
                                if (x > s.frobenius()) {
                                    auto child = remove_element(s, x);
                                    bucket.push_back(make_row(child, options.limits));
                                    if (child.genus() < options.g_max) expand(child);
                                }
                        };
                    expand(roots[j]);
                }
            } catch (...) {
                failed.store(true);
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        };

        const std::size_t nthreads =
            std::min<std::size_t>(static_cast<std::size_t>(options.threads), roots.size());
        if (nthreads <= 1) {
            drain();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(nthreads);
            for (std::size_t w = 0; w < nthreads; ++w) pool.emplace_back(drain);
            for (auto& th : pool) th.join();
        }
        if (error) std::rethrow_exception(error);
        for (auto& bucket : buckets)
            rows.insert(rows.end(), std::make_move_iterator(bucket.begin()),
                        std::make_move_iterator(bucket.end()));
    }

    std::sort(rows.begin(), rows.end(),
              [](const ScanRow& a, const ScanRow& b) { return a.semigroup < b.semigroup; });

    ScanSummary summary;
    summary.g_max = options.g_max;
    for (const auto& row : rows) {
        ++summary.total;
        if (!row.capped) {
            if (!row.is_interval) ++summary.non_interval;
            if (summary.max_elasticity < row.elasticity)
                summary.max_elasticity = row.elasticity;
            summary.max_length = std::max(summary.max_length, row.max_len);
        }
        sink(row);
    }
    return summary;
}

void write_scan_csv_header(std::ostream& out) {
    out << "genus,frobenius,small_elements,min_gens,sg,lengths,min_len,max_len,"
           "elasticity,is_interval,capped\n";
}

void write_scan_csv_row(std::ostream& out, const ScanRow& row) {
    out << row.semigroup.genus() << ',' << row.semigroup.frobenius() << ',';
    join_csv(out, row.semigroup.small_elements());
    out << ',';
    join_csv(out, row.min_gens);
    out << ',';
    join_csv(out, row.sg);
    out << ',';
    if (row.capped) {
        out << ",,,,,1\n";
        return;
    }
    join_csv(out, row.lengths);
    out << ',' << row.min_len << ',' << row.max_len << ',' << row.elasticity.str() << ','
        << (row.is_interval ? 1 : 0) << ",0\n";
}

FamilyVerification verify_families(int i_max) {
    if (i_max < 5) throw BadParameter("family verification needs i_max >= 5");

    LemmaCheck t_sym{"t_family_symmetric"};
    LemmaCheck s_form{"s_family_intersection_form"};
    LemmaCheck sg_form{"sg_closed_form"};
    LemmaCheck full_fact{"full_factorization_b_set"};
    LemmaCheck stepped{"stepped_factorizations"};
    LemmaCheck cover{"coverage_closed_form"};
    LemmaCheck witness{"length_witnesses"};

    auto fail = [](LemmaCheck& c, const std::string& why) {
        if (c.passed) {
            c.passed = false;
            c.counterexample = why;
        }
    };

    for (int i = 5; i <= i_max; i += 2) {
        const std::string at = "i = " + std::to_string(i);
        const auto t = t_family(i);
        ++t_sym.cases;
        if (classify(t) != SymmetryClass::symmetric || t.frobenius() != i ||
            t.genus() != (i + 1) / 2)
            fail(t_sym, at);

        const auto s = s_family(i);
        ++s_form.cases;
        if (s != intersect(NumericalSemigroup::from_generators({2, i}), t) ||
            s.frobenius() != i || classify(s) != SymmetryClass::reducible)
            fail(s_form, at);

        ++sg_form.cases;
        if (analyze(s).special_gaps != sg_closed_form(i)) fail(sg_form, at);

        ++full_fact.cases;
        const auto full = full_factorization(i);
        if (full.factors.size() != b_set(i).size() || !is_factorization(s, full.factors))
            fail(full_fact, at);

        if (i % 4 != 3) continue;

        const int h = (i + 1) / 2;
        const int q = (i + 1) / 4;
        const int kmax = (i - 3) / 4;
        for (int tt = 1; tt <= kmax; ++tt) {
            ++stepped.cases;
            const auto f = stepped_factorization(i, tt);
            if (f.length() != q - tt + 1 || !is_factorization(s, f.factors))
                fail(stepped, at + ", t = " + std::to_string(tt));
        }
        for (int k = 0; k <= kmax; ++k) {
            ++cover.cases;
            std::vector<int> expect;
            for (int e = q + (q % 2); e <= q + k; e += 2) expect.push_back(e);
            expect.push_back(h + 2 * k + 1);
            if (coverage_set(s, t_family(h + 2 * k + 1)) != expect)
                fail(cover, at + ", k = " + std::to_string(k));
        }
        if (q >= 2) {
            ++witness.cases;
            const auto w = witness_for_pair(2, q);
            if (w.target != s || w.of_length_k.length() != 2 ||
                w.of_length_l.length() != q || !is_factorization(s, w.of_length_k.factors) ||
                !is_factorization(s, w.of_length_l.factors))
                fail(witness, at);
        }
    }

    FamilyVerification v{i_max, true, {}};
    v.checks = {t_sym, s_form, sg_form, full_fact, stepped, cover, witness};
    for (const auto& c : v.checks) v.all_passed = v.all_passed && c.passed;
    return v;
}

} // namespace nsfact
