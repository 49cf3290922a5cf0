#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coda/hochschild.hpp"
#include "test_util.hpp"

using namespace coda;
using testutil::cod;
using testutil::random_cochain;

namespace {
const Coderivation kD1 =
    cod({{1, {1, 3}, 1}, {1, {3, 1}, -1}, {3, {1, 1}, 1}, {2, {2, 2}, 1}, {3, {3, 3}, -1}});
const Coderivation kD23 = cod({{3, {3, 3}, 1}, {1, {1, 3}, -1}, {1, {3, 1}, 1}});
const Coderivation kD25 = cod({{3, {3, 3}, 1}});
}

TEST_CASE("cochain basis indexing") {
    GradedSpace sp = one_two_space();
    CHECK(cochain_dim(sp, 0) == 3);
    CHECK(cochain_dim(sp, 2) == 27);
    for (int n = 0; n <= 3; ++n)
        for (int i = 0; i < cochain_dim(sp, n); ++i)
            CHECK(cochain_index(sp, cochain_key(sp, n, i)) == i);
    CHECK(cochain_key(sp, 2, 0).target == 1);
    CHECK(cochain_key(sp, 2, 0).sources == MultiIndex{1, 1});
    CHECK(cochain_key(sp, 1, 5).target == 2);
    CHECK(cochain_key(sp, 1, 5).sources == MultiIndex{3});
}

TEST_CASE("cochain vector round trip") {
    Coderivation f = cod({{1, {1, 3}, 2}, {1, {3, 1}, -5}});
    Vector v = cochain_vector(one_two_space(), 2, f);
    CHECK(static_cast<int>(v.size()) == 27);
    CHECK(cochain_from_vector(one_two_space(), 2, Parity::odd, v) == f);
}

TEST_CASE("coboundary matrix shape and chain property") {
    ExactMatrix d1 = coboundary_matrix(kD1, 1);
    CHECK(d1.rows() == 27);
    CHECK(d1.cols() == 9);
    ExactMatrix d2 = coboundary_matrix(kD1, 2);
    CHECK(d2.multiply(d1).is_zero());
    CHECK(coboundary_matrix(kD25, 3).multiply(coboundary_matrix(kD25, 2)).is_zero());
    CHECK_THROWS_AS(coboundary_matrix(cod({{1, {1, 3}, 1}}), 1), std::invalid_argument);
}

TEST_CASE("matrix matches bracket columnwise on samples") {
    ExactMatrix m = coboundary_matrix(kD23, 2);
    GradedSpace sp = one_two_space();
    for (int c = 0; c < 27; c += 5) {
        TermKey k = cochain_key(sp, 2, c);
        Coderivation f(sp, parity_of(sp, k.target, k.sources));
        f.add_term(k.target, k.sources, Scalar(1));
        Vector col = cochain_vector(sp, 3, bracket(kD23, f));
        for (int r = 0; r < m.rows(); ++r) CHECK(m.at(r, c) == col[r]);
    }
}

TEST_CASE("graded cohomology dimensions") {
    HochschildContext c1(kD1);
    CHECK(c1.graded_dims(0) == std::pair<int, int>{0, 2});
    CHECK(c1.cohomology(1).total() == 0);
    CHECK(c1.cohomology(2).total() == 0);

    HochschildContext c25(kD25);
    CHECK(c25.cohomology(0).total() == 3);
    CHECK(c25.cohomology(1).total() == 4);
    CHECK(c25.graded_dims(2) == std::pair<int, int>{4, 4});
    CHECK(c25.cohomology(3).total() == 16);

    HochschildContext c23(kD23);
    for (int n = 0; n <= 4; ++n) CHECK(c23.cohomology(n).total() == 3);
}

TEST_CASE("representatives are canonical cocycles") {
    HochschildContext ctx(kD25);
    std::mt19937 rng(5);
    for (int n = 1; n <= 2; ++n) {
        for (Parity p : {Parity::even, Parity::odd}) {
            for (const Coderivation& r : ctx.representatives(n, p)) {
                CHECK(bracket(kD25, r).is_zero());
                CHECK(r.parity() == p);
                auto red = ctx.reduce(r);
                REQUIRE(red);
                CHECK(*red == r);
                // Shifting by a coboundary does not move the representative.
                Coderivation x = random_cochain(rng, n - 1, flip(p));
                auto red2 = ctx.reduce(r + bracket(kD25, x));
                REQUIRE(red2);
                CHECK(*red2 == r);
            }
        }
    }
}

TEST_CASE("reduce rejects non-cocycles") {
    HochschildContext ctx(kD1);
    GradedSpace sp = one_two_space();
    int rejected = 0;
    for (int i = 0; i < cochain_dim(sp, 2); ++i) {
        TermKey k = cochain_key(sp, 2, i);
        Coderivation f(sp, parity_of(sp, k.target, k.sources));
        f.add_term(k.target, k.sources, Scalar(1));
        if (bracket(kD1, f).is_zero()) continue;
        CHECK(!ctx.reduce(f));
        ++rejected;
    }
    CHECK(rejected > 0);
}

TEST_CASE("decompose reconstructs the cochain") {
    std::mt19937 rng(17);
    for (const Coderivation& d : {kD1, kD25, kD23}) {
        HochschildContext ctx(d);
        for (int it = 0; it < 12; ++it) {
            int n = 1 + it % 3;
            Parity p = it % 2 ? Parity::odd : Parity::even;
            Coderivation f = random_cochain(rng, n, p);
            auto dec = ctx.decompose(f);
            Coderivation sum(d.space(), p);
            const auto& reps = ctx.representatives(n, p);
            REQUIRE(dec.h_coords.size() <= reps.size());
            for (size_t j = 0; j < dec.h_coords.size(); ++j)
                sum += reps[j].scaled(dec.h_coords[j]);
            sum += bracket(d, dec.preimage);
            sum += dec.defect;
            CHECK(sum == f);
            CHECK(dec.is_cocycle == bracket(d, f).is_zero());
            if (dec.is_cocycle) CHECK(dec.defect.is_zero());
        }
    }
}

TEST_CASE("decompose of a coboundary has no class part") {
    HochschildContext ctx(kD25);
    std::mt19937 rng(23);
    for (int it = 0; it < 8; ++it) {
        Coderivation x = random_cochain(rng, 1 + it % 2, it % 2 ? Parity::even : Parity::odd);
        Coderivation f = bracket(kD25, x);
        if (f.is_zero()) continue;
        auto dec = ctx.decompose(f);
        CHECK(dec.is_cocycle);
        for (const Scalar& c : dec.h_coords) CHECK(c.is_zero());
        CHECK(bracket(kD25, dec.preimage) == f);
    }
}
