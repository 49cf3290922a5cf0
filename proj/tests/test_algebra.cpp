#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coda/algebra.hpp"
#include "coda/catalog.hpp"
#include "coda/hochschild.hpp"
#include "test_util.hpp"

using namespace coda;
using testutil::cod;
using testutil::random_cochain;

TEST_CASE("associativity is equivalent to the codifferential condition") {
    std::mt19937 rng(2718);
    int codiffs = 0, non_codiffs = 0;
    while (codiffs < 10 || non_codiffs < 30) {
        Coderivation d = random_cochain(rng, 2, Parity::odd);
        bool is_cd = is_codifferential(d);
        Multiplication m = to_multiplication(d);
        CHECK(m.is_associative() == is_cd);
        (is_cd ? codiffs : non_codiffs)++;
        if (non_codiffs >= 500) break;  // codifferentials are common enough in practice
    }
    CHECK(codiffs >= 10);
    CHECK(non_codiffs >= 30);
}

TEST_CASE("multiplication round trip") {
    for (const auto& e : catalog()) {
        Multiplication m = to_multiplication(e.d);
        CHECK(from_multiplication(m) == e.d);
        CHECK(m.is_associative());
    }
    CHECK(to_multiplication(Coderivation()).is_associative());  // zero multiplication
}

TEST_CASE("units") {
    auto m1 = to_multiplication(catalog_get(1).d);
    auto e1 = unit(m1);
    REQUIRE(e1);
    // Verify the unit property directly.
    for (int b = 1; b <= 3; ++b) {
        CHECK(m1.multiply(*e1, m1.basis_vector_of(b)) == m1.basis_vector_of(b));
        CHECK(m1.multiply(m1.basis_vector_of(b), *e1) == m1.basis_vector_of(b));
    }
    CHECK(unit(to_multiplication(catalog_get(24).d)).has_value());
    CHECK(!unit(to_multiplication(catalog_get(7).d)).has_value());
    CHECK(!unit(to_multiplication(catalog_get(25).d)).has_value());
    CHECK(!unit(to_multiplication(Coderivation())).has_value());
    // d5's unit is v2 + v3 (a documented deviation from the reference notes).
    auto m5 = to_multiplication(catalog_get(5).d);
    auto e5 = unit(m5);
    REQUIRE(e5);
    CHECK(*e5 == Vector{Scalar(0), Scalar(1), Scalar(1)});
}

TEST_CASE("centers") {
    GradedSubspace z1 = center(to_multiplication(catalog_get(1).d));
    CHECK(z1.dims == GradedDim{0, 2});
    CHECK(z1.sub.contains(Vector{Scalar(0), Scalar(1), Scalar(0)}));
    CHECK(z1.sub.contains(Vector{Scalar(0), Scalar(0), Scalar(1)}));

    GradedSubspace z3 = center(to_multiplication(catalog_get(3).d));
    CHECK(z3.dims == GradedDim{0, 1});
    CHECK(z3.sub.contains(Vector{Scalar(0), Scalar(0), Scalar(1)}));

    GradedSubspace z5 = center(to_multiplication(catalog_get(5).d));
    CHECK(z5.dims == GradedDim{0, 1});
    CHECK(z5.sub.contains(Vector{Scalar(0), Scalar(1), Scalar(1)}));

    GradedSubspace z0 = center(to_multiplication(Coderivation()));
    CHECK(z0.dims == GradedDim{1, 2});

    // h^0 always equals the graded center dimension.
    for (const auto& e : catalog()) {
        HochschildContext ctx(e.d);
        auto [ev, od] = ctx.graded_dims(0);
        CHECK(center(to_multiplication(e.d)).dims == GradedDim{ev, od});
    }
}

TEST_CASE("nilpotency") {
    CHECK(is_nilpotent(to_multiplication(catalog_get(26).d)));
    CHECK(is_nilpotent(to_multiplication(catalog_get(27).d)));
    CHECK(is_nilpotent(to_multiplication(catalog_get(28).d)));
    CHECK(!is_nilpotent(to_multiplication(catalog_get(1).d)));
    CHECK(is_nilpotent(to_multiplication(Coderivation())));
    for (const auto& e : catalog()) {
        Multiplication m = to_multiplication(e.d);
        if (unit(m)) CHECK(!is_nilpotent(m));
    }
}

TEST_CASE("opposite algebra") {
    for (const auto& e : catalog()) {
        Coderivation op = opposite(e.d);
        CHECK(is_codifferential(op));
        CHECK(opposite(op) == e.d);
        if (is_graded_commutative(to_multiplication(e.d))) CHECK(op == e.d);

        Fingerprint f = fingerprint(e.d);
        Fingerprint g = fingerprint(op);
        CHECK(f.h[0] == g.h[0]);
        CHECK(f.h[1] == g.h[1]);
        CHECK(f.h[2] == g.h[2]);
        CHECK(f.h[3] == g.h[3]);
        CHECK(f.center == g.center);
        CHECK(f.unital == g.unital);
        CHECK(f.commutative == g.commutative);
        CHECK(f.nilpotent == g.nilpotent);
        CHECK(f.lann == g.rann);
        CHECK(f.rann == g.lann);
    }
}

TEST_CASE("fingerprints separate the catalog") {
    std::vector<Fingerprint> fs;
    for (const auto& e : catalog()) fs.push_back(fingerprint(e.d));
    CHECK(!(fs[0] == fs[1]));
    for (size_t i = 0; i < fs.size(); ++i)
        for (size_t j = i + 1; j < fs.size(); ++j) {
            CAPTURE(i + 1);
            CAPTURE(j + 1);
            CHECK(!(fs[i] == fs[j]));
        }
}
