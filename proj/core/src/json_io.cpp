#include "nsfact/json_io.hpp"

#include "nsfact/oversemigroups.hpp"

namespace nsfact {

using nlohmann::json;

json semigroup_json(const NumericalSemigroup& s) {
    return json{{"frobenius", s.frobenius()},
                {"small_elements", s.small_elements()},
                {"min_generators", minimal_generators(s)}};
}

NumericalSemigroup semigroup_from_json(const json& j) {
    if (!j.is_object() || !j.contains("small_elements") || !j["small_elements"].is_array())
        throw BadParameter("semigroup JSON needs a small_elements array");
    auto s = NumericalSemigroup::from_small_elements(
        j["small_elements"].get<std::vector<int>>());
    if (j.contains("frobenius") && j["frobenius"].get<int>() != s.frobenius())
        throw BadParameter("frobenius field contradicts small_elements");
    if (j.contains("min_generators") &&
        j["min_generators"].get<std::vector<int>>() != minimal_generators(s))
        throw BadParameter("min_generators field contradicts small_elements");
    return s;
}

json info_json(const NumericalSemigroup& s) {
    const auto a = analyze(s);
    const auto over = oversemigroups(s);
    std::size_t irr = 0;
    for (const auto& t : over) irr += is_irreducible(t) ? 1 : 0;
    return json{{"semigroup", semigroup_json(s)},
                {"genus", s.genus()},
                {"multiplicity", s.multiplicity()},
                {"gaps", a.gaps},
                {"pf", a.pseudo_frobenius},
                {"sg", a.special_gaps},
                {"classification", to_string(classify(s))},
                {"irreducible", is_irreducible(s)},
                {"oversemigroups", over.size()},
                {"irreducible_oversemigroups", irr}};
}

json factorization_json(const Factorization& f) {
    json factors = json::array();
    for (const auto& t : f.factors) factors.push_back(semigroup_json(t));
    return json{{"length", f.length()}, {"factors", factors}};
}

json report_json(const NumericalSemigroup& s, const LengthProfile& profile,
                 const std::vector<Factorization>* witnesses) {
    json j{{"semigroup", semigroup_json(s)},
           {"sg", analyze(s).special_gaps},
           {"lengths", profile.lengths},
           {"min", profile.min},
           {"max", profile.max},
           {"elasticity", profile.elasticity.str()},
           {"interval", profile.is_interval}};
    if (witnesses) {
        json arr = json::array();
        for (const auto& f : *witnesses) arr.push_back(factorization_json(f));
        j["factorizations"] = arr;
    }
    return j;
}

json family_json(const FamilyInstance& inst) {
    json j{{"i", inst.i},
           {"h_even", inst.h_even},
           {"s", semigroup_json(inst.s)},
           {"t", semigroup_json(inst.t)},
           {"b_set", inst.b},
           {"predicted_sg", inst.predicted_sg},
           {"computed_sg", inst.computed_sg},
           {"sg_matches", inst.predicted_sg == inst.computed_sg},
           {"full_factorization", factorization_json(inst.full)}};
    if (inst.stepped) j["stepped_factorization"] = factorization_json(*inst.stepped);
    return j;
}

json witness_json(const WitnessPair& w) {
    return json{{"semigroup", semigroup_json(w.target)},
                {"first", factorization_json(w.of_length_k)},
                {"second", factorization_json(w.of_length_l)}};
}

json scan_summary_json(const ScanSummary& s) {
    return json{{"total", s.total},
                {"non_interval", s.non_interval},
                {"max_elasticity", s.max_elasticity.str()},
                {"max_length", s.max_length},
                {"g_max", s.g_max}};
}

json verification_json(const FamilyVerification& v) {
    json checks = json::array();
    for (const auto& c : v.checks) {
        checks.push_back(json{{"name", c.name},
                              {"cases", c.cases},
                              {"passed", c.passed},
                              {"counterexample",
                               c.passed ? json() : json(c.counterexample)}});
    }
    return json{{"i_max", v.i_max}, {"all_passed", v.all_passed}, {"checks", checks}};
}

} // namespace nsfact
