// Scalar foundations: canonical rational form, parsing, and the big-real
// precision/tolerance contract.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cuboid/bigreal.hpp"
#include "cuboid/rational.hpp"
#include "cuboid/scalar.hpp"

using namespace cuboid;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(2, 4).numerator() == 1);
    CHECK(Rational(2, 4).denominator() == 2);
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(3, -6).denominator() == 2);  // denominator stays positive
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational().is_zero());
    CHECK_THROWS_AS(Rational(1, 0), domain_error);
}

TEST_CASE("rational canonical form holds under arithmetic (randomized)") {
    std::mt19937_64 rng(20260822);
    std::uniform_int_distribution<long> num(-500, 500), den(1, 500);
    for (int i = 0; i < 2000; ++i) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        for (const Rational& v : {a + b, a - b, a * b}) {
            Integer g;
            mpz_gcd(g.get_mpz_t(), Integer(abs(v.numerator())).get_mpz_t(),
                    v.denominator().get_mpz_t());
            CHECK(g == 1);
            CHECK(v.denominator() > 0);
        }
        if (!b.is_zero()) {
            Rational q = a / b;
            CHECK(q * b == a);
        }
    }
}

TEST_CASE("rational parsing and printing") {
    CHECK(Rational::parse("3/5").value() == Rational(3, 5));
    CHECK(Rational::parse("-3/5").value() == Rational(-3, 5));
    CHECK(Rational::parse("7").value() == Rational(7));
    CHECK(Rational::parse("-0.125").value() == Rational(-1, 8));
    CHECK(Rational::parse("2.5").value() == Rational(5, 2));
    CHECK(Rational::parse("4/6").value() == Rational(2, 3));
    CHECK_FALSE(Rational::parse("").has_value());
    CHECK_FALSE(Rational::parse("x").has_value());
    CHECK_FALSE(Rational::parse("1/0").has_value());
    CHECK_FALSE(Rational::parse("1.2.3").has_value());
    CHECK_FALSE(Rational::parse("1/2/3").has_value());

    CHECK(Rational(-3, 5).to_string() == "-3/5");
    CHECK(Rational(14, 7).to_string() == "2");

    // print -> parse roundtrip
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-9999, 9999), den(1, 9999);
    for (int i = 0; i < 500; ++i) {
        Rational v(num(rng), den(rng));
        CHECK(Rational::parse(v.to_string()).value() == v);
    }
}

TEST_CASE("rational height and integer powers") {
    CHECK(Rational(3, 5).height() == 5);
    CHECK(Rational(-7, 2).height() == 7);
    CHECK(Rational(4).height() == 4);
    CHECK(Rational(0).height() == 1);

    CHECK(Rational(2, 3).pow_int(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow_int(0) == 1);
    CHECK(Rational(2, 3).pow_int(-2) == Rational(9, 4));
    CHECK_THROWS_AS(Rational(0).pow_int(-1), domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), domain_error);
}

TEST_CASE("big-real precision join and exactness of small integers") {
    mpfr_prec_t bits = digits_to_bits(128);
    BigReal a = BigReal::from_long(3, bits);
    BigReal b = BigReal::from_long(64, 64);
    CHECK((a + b).precision_bits() == bits);
    CHECK((a * b).to_double() == 192.0);
    CHECK((a - a).is_zero());
    CHECK_THROWS_AS(a / BigReal::from_long(0, 64), domain_error);
}

TEST_CASE("big-real carries rationals to the tolerance contract") {
    const int P = 128;
    mpfr_prec_t bits = digits_to_bits(P);
    BigReal third = BigReal::from_rational(Rational(1, 3), bits);
    BigReal err = abs(third * BigReal::from_long(3, bits) - BigReal::from_long(1, bits));
    // representation error is ~2^-bits, far inside the working tolerance
    CHECK(err < tolerance_for(P));
    CHECK(tolerance_for(P) < pow10(-100, bits));
    CHECK(pow10(-109, bits) < tolerance_for(P));
    CHECK(tolerance_for(P) == pow10(-108, bits));

    BigReal parsed = BigReal::parse("0.5", bits);
    CHECK(parsed == BigReal::from_rational(Rational(1, 2), bits));
    CHECK_THROWS_AS(BigReal::parse("not-a-number", bits), domain_error);
}

TEST_CASE("negligible covers exact and tolerant zero tests") {
    CHECK(negligible(Rational(0), Rational(0)));
    CHECK_FALSE(negligible(Rational(1, 1000000), Rational(0)));

    mpfr_prec_t bits = digits_to_bits(128);
    CHECK(negligible(pow10(-120, bits), tolerance_for(128)));
    CHECK_FALSE(negligible(pow10(-90, bits), tolerance_for(128)));
}

TEST_CASE("big-real printing is scientific with requested digits") {
    mpfr_prec_t bits = digits_to_bits(64);
    BigReal half = BigReal::from_rational(Rational(1, 2), bits);
    CHECK(half.to_string(10) == "5.000000000e-01");
    BigReal neg = BigReal::from_rational(Rational(-25, 4), bits);
    CHECK(neg.to_string(5) == "-6.2500e+00");
}
