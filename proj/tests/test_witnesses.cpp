#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "coda/catalog.hpp"
#include "coda/deformations.hpp"
#include "coda/equivalence.hpp"
#include "coda/json_io.hpp"

using namespace coda;
using nlohmann::json;

namespace {

json load_goldens() {
    std::ifstream in("data/witnesses.json");
    REQUIRE(in.good());
    return json::parse(in);
}

ExactMatrix matrix_from(const json& rows) {
    ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = scalar_from_json(rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("every stored witness verifies exactly") {
    json goldens = load_goldens();
    std::map<int, DeformationFamily> families;
    std::map<int, std::vector<Branch>> plans;
    for (int k : deformable_entries()) {
        families.emplace(k, reference_family(k));
        plans.emplace(k, branch_plan(k));
    }

    for (const auto& w : goldens["witnesses"]) {
        int k = catalog_get(w["family"].get<std::string>()).index;
        std::string label = w["branch"].get<std::string>();
        size_t sample = w["sample"].get<size_t>();
        CAPTURE(k);
        CAPTURE(label);
        CAPTURE(sample);

        const Branch* br = nullptr;
        for (const auto& b : plans.at(k))
            if (b.label == label) br = &b;
        REQUIRE(br != nullptr);
        REQUIRE(sample < br->samples.size());

        std::vector<Scalar> vals;
        for (const auto& p : br->param_map) vals.push_back(p.evaluate(br->samples[sample]));
        Coderivation dt = evaluate_at(families.at(k), vals);

        const CatalogEntry& target = catalog_get(w["target"].get<std::string>());
        CHECK(target.index != k);  // a jump never lands on its own source

        auto g = GradedAutomorphism::from_matrix(matrix_from(w["matrix"]));
        REQUIRE(g.has_value());
        CHECK(verify(*g, dt, target.d));
    }
}

TEST_CASE("the goldens cover every branch sample of every reference family") {
    json goldens = load_goldens();
    std::map<std::string, int> stored;
    for (const auto& w : goldens["witnesses"])
        stored[w["family"].get<std::string>() + "|" + w["branch"].get<std::string>() + "|" +
               std::to_string(w["sample"].get<int>())]++;

    int expected = 0;
    for (int k : deformable_entries()) {
        for (const auto& br : branch_plan(k)) {
            for (size_t i = 0; i < br.samples.size(); ++i) {
                std::string key =
                    "d" + std::to_string(k) + "|" + br.label + "|" + std::to_string(i);
                CAPTURE(key);
                CHECK(stored[key] == 1);
                ++expected;
            }
        }
    }
    CHECK(static_cast<int>(goldens["witnesses"].size()) == expected);
}

TEST_CASE("all samples of one branch land on the same target") {
    json goldens = load_goldens();
    std::map<std::string, std::string> target_of;
    for (const auto& w : goldens["witnesses"]) {
        std::string key =
            w["family"].get<std::string>() + "|" + w["branch"].get<std::string>();
        std::string t = w["target"].get<std::string>();
        auto it = target_of.find(key);
        if (it == target_of.end())
            target_of.emplace(key, t);
        else
            CHECK(it->second == t);
    }
}
