#pragma once

#include <set>
#include <string>
#include <utility>

#include <json.hpp>

#include "coda/coderivation.hpp"

namespace coda {

/// Serialization of a coderivation:
///   {"space": {"even": 1, "odd": 2},
///    "terms": [{"target": 1, "sources": [1,3],
///               "coeff": {"re": "1", "im": "0"}}, ...]}
/// Rationals are "p/q" strings (or "p" for integers); round-trips bit-exactly.
nlohmann::json coderivation_to_json(const Coderivation& d);
Coderivation coderivation_from_json(const nlohmann::json& j);

nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

Coderivation load_coderivation(const std::string& path);
void save_coderivation(const std::string& path, const Coderivation& d);

/// Documented deviations between the reference data and exact computation.
/// Comparisons consult this whitelist so a deviation is reported rather than
/// failed, but only when it is recorded here.
struct Errata {
    std::set<std::pair<int, int>> h_total;              // (algebra, degree)
    std::set<std::pair<int, int>> h_split;              // (algebra, degree)
    std::set<std::pair<int, std::string>> flags;        // (algebra, flag name)
    nlohmann::json raw;

    bool covers_total(int algebra, int degree) const {
        return h_total.count({algebra, degree}) > 0;
    }
    bool covers_split(int algebra, int degree) const {
        return h_split.count({algebra, degree}) > 0;
    }
    bool covers_flag(int algebra, const std::string& flag) const {
        return flags.count({algebra, flag}) > 0;
    }
};

Errata load_errata(const std::string& path);

}  // namespace coda
