#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coda/algebra.hpp"
#include "coda/coderivation.hpp"

namespace coda {

/// One of the 28 codifferential classes, with the reference data the rest of
/// the artifact is checked against. The reference fields are never inputs to
/// a computation, only expectations.
struct CatalogEntry {
    int index = 0;
    std::string name;  // "d1".."d28"
    Coderivation d;
    std::array<int, 5> expected_h{};  // h^0..h^4 totals
    std::map<int, GradedDim> expected_splits;  // degree -> even|odd where stated
    bool unital = false;
    bool commutative = false;
    bool nilpotent = false;
    std::optional<GradedDim> expected_center;
    int opposite_partner = 0;  // own index when the opposite is (isomorphic to) itself
    std::vector<int> jump_targets;  // expected out-edges in the jump graph
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_get(int k);

/// Index by name "dK"; throws on anything else.
const CatalogEntry& catalog_get(const std::string& name);

}  // namespace coda
