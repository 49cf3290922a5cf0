#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coda/scalar.hpp"

using coda::Scalar;

TEST_CASE("field arithmetic") {
    Scalar a = Scalar::rational(1, 2);
    Scalar b = Scalar::rational(1, 3);
    CHECK(a + b == Scalar::rational(5, 6));
    CHECK(a - b == Scalar::rational(1, 6));
    CHECK(a * b == Scalar::rational(1, 6));
    CHECK(a / b == Scalar::rational(3, 2));
    CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
    CHECK((-a) + a == Scalar(0));
    CHECK(Scalar(0).is_zero());
    CHECK(!Scalar::i().is_zero());
}

TEST_CASE("complex inverse") {
    Scalar z(mpq_class(3), mpq_class(4));  // 3 + 4i
    Scalar w = z.inverse();
    CHECK(z * w == Scalar(1));
    CHECK(w == Scalar(mpq_class(3, 25), mpq_class(-4, 25)));
    CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
}

TEST_CASE("rational string round trip") {
    CHECK(Scalar::rat_to_string(mpq_class(3, 4)) == "3/4");
    CHECK(Scalar::rat_to_string(mpq_class(-7)) == "-7");
    CHECK(Scalar::rat_from_string("3/4") == mpq_class(3, 4));
    CHECK(Scalar::rat_from_string("-22/7") == mpq_class(-22, 7));
    CHECK(Scalar::rat_from_string("6/4") == mpq_class(3, 2));
    CHECK_THROWS_AS(Scalar::rat_from_string("x"), std::invalid_argument);
}

TEST_CASE("to_string") {
    CHECK(Scalar(0).to_string() == "0");
    CHECK(Scalar(-2).to_string() == "-2");
    CHECK(Scalar::rational(1, 2).to_string() == "1/2");
    CHECK(Scalar::i().to_string() == "i");
    CHECK((-Scalar::i()).to_string() == "-i");
    CHECK(Scalar(mpq_class(1), mpq_class(-1)).to_string() == "1-i");
    CHECK(Scalar(mpq_class(1, 2), mpq_class(2, 3)).to_string() == "1/2+2/3*i");
}

TEST_CASE("total order is consistent") {
    Scalar a = Scalar::rational(-1, 2);
    Scalar b(0);
    Scalar c = Scalar::i();
    CHECK(a < b);
    CHECK(b < c);
    CHECK(a < c);
    CHECK(!(c < a));
    CHECK(!(a < a));
}
