#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twc/generator.hpp"
#include "twc/matrix.hpp"

using namespace twc;

TEST_CASE("rational arithmetic is exact") {
    Field Q = Field::rationals();
    Scalar half = Scalar::of_fraction(1, 2, Q);
    Scalar third = Scalar::of_fraction(1, 3, Q);
    CHECK((half + third) == Scalar::of_fraction(5, 6, Q));
    CHECK((half + (-half)).is_zero());
    CHECK((half * half.inv()).is_one());
    CHECK(Scalar::parse("-7/3", Q) == Scalar::of_fraction(-7, 3, Q));
}

TEST_CASE("prime field arithmetic") {
    Field F7 = Field::prime(7);
    CHECK((Scalar::of_int(3, F7) * Scalar::of_int(5, F7)).is_one());
    CHECK(Scalar::of_int(-1, F7) == Scalar::of_int(6, F7));
    for (int a = 1; a < 7; ++a)
        CHECK((Scalar::of_int(a, F7) * Scalar::of_int(a, F7).inv()).is_one());
    CHECK_THROWS_AS(Field::prime(6), Error);
}

TEST_CASE("division by zero is an error") {
    CHECK_THROWS_AS(Scalar::zero(Field::rationals()).inv(), Error);
    CHECK_THROWS_AS(Scalar::zero(Field::prime(5)).inv(), Error);
}

TEST_CASE("field axioms on fuzzed triples") {
    Rng rng(123);
    for (const Field& f : {Field::rationals(), Field::prime(32003)}) {
        for (int i = 0; i < 200; ++i) {
            Scalar a = rng.scalar(f), b = rng.scalar(f), c = rng.scalar(f);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK((a * a.inv()).is_one());
        }
    }
}

TEST_CASE("exact linear algebra") {
    Field Q = Field::rationals();
    Matrix m(2, 2, Q);
    m.at(0, 0) = Scalar::of_int(2, Q);
    m.at(0, 1) = Scalar::of_int(1, Q);
    m.at(1, 1) = Scalar::of_fraction(1, 3, Q);
    auto inv = m.inverse();
    REQUIRE(inv);
    CHECK((m * *inv) == Matrix::identity(2, Q));
    CHECK(m.rank() == 2);

    Matrix sing(2, 2, Q);
    sing.at(0, 0) = Scalar::of_int(1, Q);
    sing.at(1, 0) = Scalar::of_int(2, Q);
    CHECK(sing.rank() == 1);
    CHECK(!sing.inverse());
    auto ker = kernel_basis(sing);
    REQUIRE(ker.size() == 1);
    // A x = b solvable and reproducible
    auto sol = solve_linear(sing, {Scalar::of_int(3, Q), Scalar::of_int(6, Q)});
    REQUIRE(sol);
    CHECK((*sol)[0] == Scalar::of_int(3, Q));
}
