// Command line front end: membership and invariant reports, factorization
// enumeration, the parametric families, and the genus-bounded interval scan.
// Exit codes: 0 success, 1 bad input or internal limit, 2 a scan found a
// non-interval length set (or a verification check failed).

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nsfact/explorer.hpp"
#include "nsfact/factorization.hpp"
#include "nsfact/families.hpp"
#include "nsfact/json_io.hpp"
#include "nsfact/oversemigroups.hpp"
#include "nsfact/semigroup.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos)
            throw nsfact::BadParameter("empty entry in list '" + text + "'");
        const auto last = item.find_last_not_of(" \t");
        item = item.substr(first, last - first + 1);
        std::size_t pos = 0;
        int value = 0;
        try {
            value = std::stoi(item, &pos);
        } catch (const std::exception&) {
            throw nsfact::BadParameter("not an integer: '" + item + "'");
        }
        if (pos != item.size())
            throw nsfact::BadParameter("not an integer: '" + item + "'");
        out.push_back(value);
    }
    return out;
}

// One semigroup named on the command line: generators, gaps, or a family
// index. --gaps '' denotes N (no gaps).
struct SpecOptions {
    std::string gens_text;
    std::string gaps_text;
    int family_i = 0;
    int family_t = 0;
    CLI::Option* gens = nullptr;
    CLI::Option* gaps = nullptr;
    CLI::Option* family = nullptr;

    void attach(CLI::App* cmd) {
        gens = cmd->add_option("--gens", gens_text,
                               "comma separated generators, e.g. 4,6,9,11");
        gaps = cmd->add_option("--gaps", gaps_text,
                               "comma separated gaps; '' for the full semigroup N");
        family = cmd->add_option("--family", family_i, "family index i: use S(i)");
        cmd->add_option("--t", family_t, "step parameter (only the family command uses it)");
        gens->excludes(gaps)->excludes(family);
        gaps->excludes(family);
    }

    nsfact::NumericalSemigroup resolve() const {
        if (gens->count() + gaps->count() + family->count() != 1)
            throw nsfact::BadParameter(
                "name the semigroup with exactly one of --gens, --gaps, --family");
        if (gens->count()) {
            const auto list = parse_int_list(gens_text);
            if (list.empty()) throw nsfact::EmptyGenerators();
            return nsfact::NumericalSemigroup::from_generators(list);
        }
        if (gaps->count())
            return nsfact::NumericalSemigroup::from_gaps(
                gaps_text.empty() ? std::vector<int>{} : parse_int_list(gaps_text));
        return nsfact::s_family(family_i);
    }
};

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

int run_scan(const nsfact::ScanOptions& options, const std::string& out_path) {
    std::ofstream file;
    const bool to_file = !out_path.empty();
    if (to_file) {
        file.open(out_path);
        if (!file) throw nsfact::BadParameter("cannot open '" + out_path + "' for writing");
    }
    std::ostream& csv = to_file ? static_cast<std::ostream&>(file) : std::cout;

    nsfact::write_scan_csv_header(csv);
    const auto summary = nsfact::scan_intervals(
        options, [&](const nsfact::ScanRow& row) { nsfact::write_scan_csv_row(csv, row); });
    if (to_file && !file)
        throw nsfact::Error("write to '" + out_path + "' failed");

    // With the table on stdout the summary moves to stderr so both stay parseable.
    (to_file ? std::cout : std::cerr) << nsfact::scan_summary_json(summary).dump(2) << '\n';
    return summary.non_interval > 0 ? 2 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for numerical semigroups: invariants, "
                 "irreducible factorizations, families, interval scans"};
    app.require_subcommand(1);

    auto* info = app.add_subcommand("info", "invariants of one semigroup as JSON");
    SpecOptions info_spec;
    info_spec.attach(info);

    auto* decompose =
        app.add_subcommand("decompose", "factorizations into irreducibles, with lengths");
    SpecOptions decompose_spec;
    decompose_spec.attach(decompose);
    bool decompose_all = false;
    decompose->add_flag("--all", decompose_all,
                        "report every factorization, not one witness per length");

    auto* lengths = app.add_subcommand("lengths", "factorization length profile only");
    SpecOptions lengths_spec;
    lengths_spec.attach(lengths);

    auto* family = app.add_subcommand("family", "the S(i)/T(i) instance for one index");
    int family_i = 0;
    int family_t = 0;
    family->add_option("--i", family_i, "odd index >= 5")->required();
    auto* family_t_opt =
        family->add_option("--t", family_t, "also build the stepped factorization at t");

    auto* verify = app.add_subcommand("verify", "re-derive the family lemmas up to i_max");
    int verify_i_max = 99;
    verify->add_option("--i-max", verify_i_max, "largest family index to check (default 99)");

    auto* scan = app.add_subcommand(
        "scan", "scan all semigroups of genus <= g_max for non-interval length sets");
    nsfact::ScanOptions scan_options;
    std::string scan_out;
    scan->add_option("--g-max", scan_options.g_max, "genus bound (default 12)");
    scan->add_option("--threads", scan_options.threads, "worker threads (default 1)");
    scan->add_option("--split-depth", scan_options.split_depth,
                     "genus at which subtrees become parallel tasks (default 6)");
    scan->add_option("--out", scan_out, "write the CSV here instead of stdout");

    auto* witness = app.add_subcommand(
        "witness", "a semigroup with two distinct factorizations of lengths k and l");
    int witness_k = 0;
    int witness_l = 0;
    witness->add_option("--k", witness_k, "first length (>= 2)")->required();
    witness->add_option("--l", witness_l, "second length (>= 2)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(info)) {
            print_json(nsfact::info_json(info_spec.resolve()));
        } else if (app.got_subcommand(decompose)) {
            const auto s = decompose_spec.resolve();
            const auto facs = nsfact::minimal_factorizations(s);
            std::vector<nsfact::Factorization> shown;
            if (decompose_all) {
                shown = facs;
            } else {
                std::set<int> seen;
                for (const auto& f : facs)
                    if (seen.insert(f.length()).second) shown.push_back(f);
                std::sort(shown.begin(), shown.end(),
                          [](const auto& a, const auto& b) { return a.length() < b.length(); });
            }
            print_json(nsfact::report_json(s, nsfact::profile_from(facs), &shown));
        } else if (app.got_subcommand(lengths)) {
            const auto s = lengths_spec.resolve();
            print_json(nsfact::report_json(s, nsfact::length_profile(s)));
        } else if (app.got_subcommand(family)) {
            std::optional<int> t;
            if (family_t_opt->count()) t = family_t;
            print_json(nsfact::family_json(nsfact::family_instance(family_i, t)));
        } else if (app.got_subcommand(verify)) {
            const auto v = nsfact::verify_families(verify_i_max);
            print_json(nsfact::verification_json(v));
            return v.all_passed ? 0 : 2;
        } else if (app.got_subcommand(scan)) {
            return run_scan(scan_options, scan_out);
        } else if (app.got_subcommand(witness)) {
            print_json(nsfact::witness_json(nsfact::witness_for_pair(witness_k, witness_l)));
        }
    } catch (const nsfact::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
