#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coda/catalog.hpp"
#include "coda/json_io.hpp"

using namespace coda;
using nlohmann::json;

TEST_CASE("round trip is bit exact") {
    for (const auto& e : catalog()) {
        json j = coderivation_to_json(e.d);
        CHECK(coderivation_from_json(j) == e.d);
        // And through text.
        CHECK(coderivation_from_json(json::parse(j.dump())) == e.d);
    }
    Coderivation f(one_two_space(), Parity::even);
    f.add_term(1, {1, 1}, Scalar(mpq_class(-22, 7), mpq_class(1, 3)));
    f.add_term(2, {1, 2}, Scalar::rational(1, 2));
    CHECK(coderivation_from_json(coderivation_to_json(f)) == f);
}

TEST_CASE("format shape") {
    Coderivation d = catalog_get(2).d;
    json j = coderivation_to_json(d);
    CHECK(j["space"]["even"] == 1);
    CHECK(j["space"]["odd"] == 2);
    REQUIRE(j["terms"].is_array());
    CHECK(j["terms"].size() == 4);
    const json& t = j["terms"][0];
    CHECK(t.contains("target"));
    CHECK(t.contains("sources"));
    CHECK(t["coeff"]["re"].is_string());
    CHECK(t["coeff"]["im"].is_string());
}

TEST_CASE("diagnostics are distinct") {
    json good = coderivation_to_json(catalog_get(2).d);

    json bad_target = good;
    bad_target["terms"][0]["target"] = 4;
    CHECK_THROWS_AS(coderivation_from_json(bad_target), std::out_of_range);

    json bad_source = good;
    bad_source["terms"][0]["sources"][0] = 0;
    CHECK_THROWS_AS(coderivation_from_json(bad_source), std::out_of_range);

    json mixed = good;
    mixed["terms"].push_back(
        {{"target", 1}, {"sources", {1, 1}}, {"coeff", {{"re", "1"}, {"im", "0"}}}});
    CHECK_THROWS_WITH_AS(coderivation_from_json(mixed), "terms are not parity homogeneous",
                         std::invalid_argument);

    json no_terms = good;
    no_terms.erase("terms");
    CHECK_THROWS_AS(coderivation_from_json(no_terms), std::invalid_argument);

    json bad_coeff = good;
    bad_coeff["terms"][0]["coeff"] = "1";
    CHECK_THROWS_AS(coderivation_from_json(bad_coeff), std::invalid_argument);
}

TEST_CASE("zero terms are dropped and zero codifferential loads") {
    json j = {{"space", {{"even", 1}, {"odd", 2}}},
              {"terms",
               {{{"target", 3}, {"sources", {3, 3}}, {"coeff", {{"re", "0"}, {"im", "0"}}}}}}};
    Coderivation d = coderivation_from_json(j);
    CHECK(d.is_zero());
}

TEST_CASE("shipped catalog files match the built-in entries") {
    for (const auto& e : catalog()) {
        Coderivation d = load_coderivation("data/catalog/" + e.name + ".json");
        CHECK(d == e.d);
    }
}

TEST_CASE("errata file loads") {
    Errata e = load_errata("data/errata.json");
    CHECK(e.covers_total(27, 3));
    CHECK(e.covers_split(28, 2));
    CHECK(e.covers_flag(5, "unital"));
    CHECK(!e.covers_total(1, 0));
    CHECK_THROWS(load_errata("data/nonexistent.json"));
}
