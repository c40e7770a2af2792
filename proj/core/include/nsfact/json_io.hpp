#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "nsfact/explorer.hpp"
#include "nsfact/factorization.hpp"
#include "nsfact/families.hpp"
#include "nsfact/semigroup.hpp"

namespace nsfact {

// {"frobenius": F, "small_elements": [...], "min_generators": [...]}
nlohmann::json semigroup_json(const NumericalSemigroup& s);

// Parses the exact shape emitted by semigroup_json; small_elements wins and
// the rest is cross-checked. Throws BadParameter on mismatch.
NumericalSemigroup semigroup_from_json(const nlohmann::json& j);

// Everything `analyze` and `classify` produce for one semigroup.
nlohmann::json info_json(const NumericalSemigroup& s);

// Length report. Includes the factorizations themselves only when `witnesses`
// is given (one representative per length, or everything when `all`).
nlohmann::json report_json(const NumericalSemigroup& s, const LengthProfile& profile,
                           const std::vector<Factorization>* witnesses = nullptr);

nlohmann::json factorization_json(const Factorization& f);
nlohmann::json family_json(const FamilyInstance& inst);
nlohmann::json witness_json(const WitnessPair& w);
nlohmann::json scan_summary_json(const ScanSummary& s);
nlohmann::json verification_json(const FamilyVerification& v);

} // namespace nsfact
