#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "nsfact/factorization.hpp"
#include "nsfact/rational.hpp"
#include "nsfact/semigroup.hpp"

namespace nsfact {

// Visits every numerical semigroup of genus <= g_max exactly once, walking
// the semigroup tree: the root is N and the children of S are S minus one
// minimal generator larger than the Frobenius number.
void enumerate_by_genus(int g_max,
                        const std::function<void(const NumericalSemigroup&)>& visit);

struct ScanOptions {
    int g_max = 12;
    int threads = 1;     // worker threads for the subtree phase
    int split_depth = 6; // genus at which the tree is cut into parallel tasks
    EnumerationLimits limits{};
};

// One scanned semigroup. When `capped` is set the length computation blew a
// limit and the length fields are meaningless.
struct ScanRow {
    NumericalSemigroup semigroup;
    std::vector<int> min_gens;
    std::vector<int> sg;
    std::vector<int> lengths;
    int min_len = 0;
    int max_len = 0;
    Rational elasticity;
    bool is_interval = false;
    bool capped = false;
};

struct ScanSummary {
    unsigned long long total = 0;
    unsigned long long non_interval = 0;
    Rational max_elasticity{0, 1};
    int max_length = 0;
    int g_max = 0;
};

// Scans every semigroup of genus <= g_max, streaming rows in canonical order.
// Rows are deterministic for a fixed g_max regardless of thread count.
ScanSummary scan_intervals(const ScanOptions& options,
                           const std::function<void(const ScanRow&)>& sink);

void write_scan_csv_header(std::ostream& out);
void write_scan_csv_row(std::ostream& out, const ScanRow& row);

// One verified statement about the families, over all admissible i <= i_max.
struct LemmaCheck {
    std::string name;
    int cases = 0;
    bool passed = true;
    std::string counterexample; // empty when passed
};

struct FamilyVerification {
    int i_max = 0;
    bool all_passed = true;
    std::vector<LemmaCheck> checks;
};

// Re-derives the family claims (symmetry, closed forms, factorizations,
// coverage sets, length witnesses) from first principles for every odd i
// in [5, i_max].
FamilyVerification verify_families(int i_max);

} // namespace nsfact
