#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "coda/coderivation.hpp"
#include "test_util.hpp"

using namespace coda;
using testutil::apply_to;
using testutil::cod;
using testutil::random_cochain;
using testutil::word_sum_sub;

namespace {
const Coderivation kD1 =
    cod({{1, {1, 3}, 1}, {1, {3, 1}, -1}, {3, {1, 1}, 1}, {2, {2, 2}, 1}, {3, {3, 3}, -1}});
}

TEST_CASE("basis cochain parity") {
    GradedSpace sp = one_two_space();
    CHECK(parity_of(sp, 1, {1, 3}) == Parity::odd);
    CHECK(parity_of(sp, 2, {2, 2}) == Parity::odd);
    CHECK(parity_of(sp, 1, {1, 1}) == Parity::even);
    CHECK(parity_of(sp, 3, {3, 3}) == Parity::odd);
    CHECK(parity_of(sp, 2, {}) == Parity::odd);
    CHECK(parity_of(sp, 1, {}) == Parity::even);
}

TEST_CASE("add_term enforces homogeneity and drops zeros") {
    Coderivation f(one_two_space(), Parity::odd);
    f.add_term(2, {2, 2}, Scalar(1));
    CHECK_THROWS_AS(f.add_term(1, {1, 1}, Scalar(1)), std::invalid_argument);
    f.add_term(2, {2, 2}, Scalar(-1));
    CHECK(f.is_zero());
    CHECK_THROWS_AS(f.add_term(4, {1}, Scalar(1)), std::out_of_range);
    CHECK_THROWS_AS(f.add_term(1, {0, 2}, Scalar(1)), std::out_of_range);
}

TEST_CASE("circle product examples") {
    Coderivation psi222 = cod({{2, {2, 2}, 1}});
    CHECK(compose(psi222, psi222).is_zero());

    // psi_1^{13} o psi_3^{33}: target 3 splices into the second slot, with an
    // even prefix (v1), so the sign is +. The other order has no matching slot.
    Coderivation f = cod({{1, {1, 3}, 1}});
    Coderivation h = cod({{3, {3, 3}, 1}});
    Coderivation g = compose(f, h);
    CHECK(g.coeff(1, {1, 3, 3}) == Scalar(1));
    CHECK(g.term_count() == 1);
    CHECK(compose(h, f).is_zero());
    // Odd prefix flips the sign: psi_1^{31} o psi_3^{33} splices after v3.
    Coderivation g2 = compose(cod({{1, {3, 1}, 1}}), h);
    CHECK(g2.coeff(1, {3, 3, 1}) == Scalar(1));  // only the first slot matches
    CHECK(g2.term_count() == 1);
    Coderivation g3 = compose(cod({{1, {3, 3}, 1}}), h);
    CHECK(g3.coeff(1, {3, 3, 3}) == Scalar(0));  // +1 from slot 1, -1 from slot 2
}

TEST_CASE("catalog entries are codifferentials") {
    CHECK(is_codifferential(kD1));
    CHECK(is_codifferential(cod({{3, {3, 3}, 1}})));
    CHECK(is_codifferential(cod({{2, {1, 1}, 1}})));
    CHECK(is_codifferential(cod({{2, {1, 1}, 1}, {2, {3, 3}, 1}})));
    // An even map is never a codifferential, nor is a generic odd one.
    CHECK(!is_codifferential(cod({{1, {1, 1}, 1}})));
    CHECK(!is_codifferential(cod({{1, {1, 3}, 1}, {3, {1, 1}, 1}})));
}

TEST_CASE("evaluate examples") {
    auto r = evaluate(kD1, MultiIndex{1, 3});
    REQUIRE(r.size() == 1);
    CHECK(r.at(MultiIndex{1}) == Scalar(1));

    CHECK(evaluate(cod({{2, {2, 2}, 1}}), MultiIndex{2, 2, 2}).empty());

    // v1 v3 v1: the two arity-2 matches land on the same word and cancel
    // (the Koszul prefix v1 is even, so both keep their own sign).
    CHECK(evaluate(kD1, MultiIndex{1, 3, 1}).empty());

    // v3 v1 v3: the match at position 1 picks up the odd prefix sign.
    auto s = evaluate(kD1, MultiIndex{3, 1, 3});
    CHECK(s.at(MultiIndex{1, 3}) == Scalar(-1));  // -psi_1^{31} at the front
    CHECK(s.at(MultiIndex{3, 1}) == Scalar(-1));  // +psi_1^{13}, odd prefix
    CHECK(s.size() == 2);
}

TEST_CASE("coderivation extension is an oracle for the bracket") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> arity(0, 3);
    std::uniform_int_distribution<int> par(0, 1);
    std::uniform_int_distribution<int> wlen(1, 4);
    std::uniform_int_distribution<int> letter(1, 3);
    int checked = 0;
    while (checked < 120) {
        Coderivation f = random_cochain(rng, arity(rng), static_cast<Parity>(par(rng)));
        Coderivation g = random_cochain(rng, arity(rng), static_cast<Parity>(par(rng)));
        if (f.is_zero() || g.is_zero()) continue;
        MultiIndex w(wlen(rng));
        for (auto& x : w) x = letter(rng);

        WordSum<Scalar> lhs = evaluate(bracket(f, g), w);
        WordSum<Scalar> fg = apply_to(f, evaluate(g, w));
        WordSum<Scalar> gf = apply_to(g, evaluate(f, w));
        bool both_odd = f.parity() == Parity::odd && g.parity() == Parity::odd;
        WordSum<Scalar> rhs = word_sum_sub(fg, gf, both_odd);
        CHECK(lhs == rhs);
        ++checked;
    }
}

TEST_CASE("bracket antisymmetry and Jacobi") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> arity(1, 2);
    std::uniform_int_distribution<int> par(0, 1);
    for (int it = 0; it < 40; ++it) {
        Coderivation f = random_cochain(rng, arity(rng), static_cast<Parity>(par(rng)));
        Coderivation g = random_cochain(rng, arity(rng), static_cast<Parity>(par(rng)));
        Coderivation h = random_cochain(rng, arity(rng), static_cast<Parity>(par(rng)));

        int sfg = sign_of(f.parity()) == -1 && sign_of(g.parity()) == -1 ? -1 : 1;
        // [f,g] = -(-1)^{|f||g|}[g,f]
        Coderivation lhs = bracket(f, g);
        Coderivation rhs = bracket(g, f).scaled(Scalar(-sfg));
        CHECK(lhs == rhs);

        // [f,[g,h]] = [[f,g],h] + (-1)^{|f||g|}[g,[f,h]]
        Coderivation j1 = bracket(f, bracket(g, h));
        Coderivation j2 = bracket(bracket(f, g), h);
        Coderivation j3 = bracket(g, bracket(f, h)).scaled(Scalar(sfg));
        CHECK(j1 == j2 + j3);
    }
}

TEST_CASE("coboundary squares to zero on samples") {
    std::mt19937 rng(99);
    for (int it = 0; it < 20; ++it) {
        Coderivation f = random_cochain(rng, 1 + (it % 3), it % 2 ? Parity::odd : Parity::even);
        Coderivation df = coboundary(kD1, f);
        CHECK(coboundary(kD1, df).is_zero());
        if (!f.is_zero()) CHECK(df.parity() == flip(f.parity()));
    }
    CHECK_THROWS_AS(coboundary(cod({{1, {1, 3}, 1}}), kD1), std::invalid_argument);
}

TEST_CASE("printing") {
    CHECK(to_string(kD1) == "psi1^(1,3) - psi1^(3,1) + psi2^(2,2) + psi3^(1,1) - psi3^(3,3)");
    CHECK(to_string(Coderivation()) == "0");
}
