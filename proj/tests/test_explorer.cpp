#include <doctest.h>

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "nsfact/explorer.hpp"
#include "nsfact/semigroup.hpp"
#include "oracles.hpp"

using namespace nsfact;

namespace {

std::vector<ScanRow> scan_rows(const ScanOptions& options, ScanSummary* summary = nullptr) {
    std::vector<ScanRow> rows;
    const auto s = scan_intervals(options, [&](const ScanRow& row) { rows.push_back(row); });
    if (summary) *summary = s;
    return rows;
}

std::string rows_as_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream out;
    write_scan_csv_header(out);
    for (const auto& row : rows) write_scan_csv_row(out, row);
    return out.str();
}

} // namespace

TEST_CASE("tree enumeration: counts per genus") {
    const std::vector<int> expected{1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204};
    std::map<int, int> per_genus;
    enumerate_by_genus(10, [&](const NumericalSemigroup& s) { ++per_genus[s.genus()]; });
    REQUIRE(per_genus.size() == expected.size());
    for (int g = 0; g <= 10; ++g) CHECK(per_genus[g] == expected[g]);

    int only_root = 0;
    enumerate_by_genus(0, [&](const NumericalSemigroup& s) {
        ++only_root;
        CHECK(s.is_nat());
    });
    CHECK(only_root == 1);

    CHECK_THROWS_AS(enumerate_by_genus(-1, [](const NumericalSemigroup&) {}),
                    BadParameter);
}

TEST_CASE("tree enumeration: visits every semigroup exactly once") {
    std::vector<oracle::GapMask> seen;
    enumerate_by_genus(7, [&](const NumericalSemigroup& s) {
        seen.push_back(oracle::mask_of(s));
    });
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    CHECK(seen == oracle::all_semigroups_up_to_genus(7));
}

TEST_CASE("scan: rows in canonical order, consistent with the tree") {
    ScanSummary summary;
    const auto rows = scan_rows({.g_max = 4, .threads = 1}, &summary);

    CHECK(summary.total == 15);
    CHECK(summary.non_interval == 0);
    CHECK(summary.max_length == 2);
    CHECK(summary.max_elasticity == Rational{1, 1});
    CHECK(summary.g_max == 4);
    REQUIRE(rows.size() == 15);

    CHECK(std::is_sorted(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return a.semigroup < b.semigroup;
    }));

    std::vector<NumericalSemigroup> enumerated;
    enumerate_by_genus(4, [&](const NumericalSemigroup& s) { enumerated.push_back(s); });
    std::sort(enumerated.begin(), enumerated.end());
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(rows[i].semigroup == enumerated[i]);

    // Every row of this scan is an interval with min length 1 or 2.
    for (const auto& row : rows) {
        CHECK_FALSE(row.capped);
        CHECK(row.is_interval);
        CHECK(row.min_len >= 1);
        CHECK(row.max_len <= 2);
    }
}

TEST_CASE("scan: thread count never changes the output") {
    const auto serial = rows_as_csv(scan_rows({.g_max = 7, .threads = 1, .split_depth = 3}));
    const auto parallel =
        rows_as_csv(scan_rows({.g_max = 7, .threads = 4, .split_depth = 3}));
    const auto deep_split =
        rows_as_csv(scan_rows({.g_max = 7, .threads = 8, .split_depth = 5}));
    CHECK(serial == parallel);
    CHECK(serial == deep_split);

    CHECK_THROWS_AS(scan_rows({.g_max = 2, .threads = 0}), BadParameter);
    CHECK_THROWS_AS(scan_rows({.g_max = 2, .split_depth = -1}), BadParameter);
    CHECK_THROWS_AS(scan_rows({.g_max = -3}), BadParameter);
}

TEST_CASE("scan: csv layout") {
    ScanSummary summary;
    const auto rows = scan_rows({.g_max = 2}, &summary);
    const auto csv = rows_as_csv(rows);
    CHECK(csv ==
          "genus,frobenius,small_elements,min_gens,sg,lengths,min_len,max_len,"
          "elasticity,is_interval,capped\n"
          "0,-1,0,1,,1,1,1,1/1,1,0\n"
          "1,1,0;2,2;3,1,1,1,1,1/1,1,0\n"
          "2,3,0;2;4,2;5,3,1,1,1,1/1,1,0\n"
          "2,2,0;3,3;4;5,2,1,1,1,1/1,1,0\n");
}

TEST_CASE("scan: rows that blow a limit are marked capped") {
    ScanSummary summary;
    const auto rows =
        scan_rows({.g_max = 2, .limits = {.max_search_nodes = 1}}, &summary);
    REQUIRE(rows.size() == 4);

    // The full semigroup never enters the cover search, so only it survives.
    CHECK_FALSE(rows[0].capped);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].capped);

    CHECK(summary.total == 4);
    CHECK(summary.non_interval == 0);
    CHECK(summary.max_length == 1);

    std::ostringstream out;
    write_scan_csv_row(out, rows[1]);
    CHECK(out.str() == "1,1,0;2,2;3,1,,,,,,1\n");
}

TEST_CASE("family verification") {
    const auto v = verify_families(21);
    CHECK(v.i_max == 21);
    CHECK(v.all_passed);
    REQUIRE(v.checks.size() == 7);

    std::map<std::string, LemmaCheck> by_name;
    for (const auto& c : v.checks) by_name[c.name] = c;

    CHECK(by_name.count("t_family_symmetric"));
    CHECK(by_name.count("s_family_intersection_form"));
    CHECK(by_name.count("sg_closed_form"));
    CHECK(by_name.count("full_factorization_b_set"));
    CHECK(by_name.count("stepped_factorizations"));
    CHECK(by_name.count("coverage_closed_form"));
    CHECK(by_name.count("length_witnesses"));

    // Odd i in [5, 21] gives 9 indices, of which {7, 11, 15, 19} admit steps.
    CHECK(by_name["t_family_symmetric"].cases == 9);
    CHECK(by_name["sg_closed_form"].cases == 9);
    CHECK(by_name["stepped_factorizations"].cases == 1 + 2 + 3 + 4);
    CHECK(by_name["coverage_closed_form"].cases == 2 + 3 + 4 + 5);
    CHECK(by_name["length_witnesses"].cases == 4);
    for (const auto& [name, check] : by_name) {
        CHECK(check.passed);
        CHECK(check.counterexample.empty());
    }

    CHECK_THROWS_AS(verify_families(4), BadParameter);
    CHECK_THROWS_AS(verify_families(-1), BadParameter);
}
