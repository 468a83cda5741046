#include "doctest.h"

#include <random>

#include "torusfk/scalars.hpp"

using namespace torusfk;

TEST_CASE("rational arithmetic is exact")
{
    const auto Q = FieldSpec::rationals();
    auto half = make_fraction(Q, 1, 2);
    auto third = make_fraction(Q, 1, 3);
    CHECK(field_arith(half, third, ArithOp::add) == make_fraction(Q, 5, 6));
    CHECK(field_arith(half, third, ArithOp::div).to_string() == "3/2");
    CHECK_THROWS_AS(field_arith(half, FieldValue::zero(Q), ArithOp::div), FieldError);
}

TEST_CASE("prime field arithmetic")
{
    const auto F5 = FieldSpec::prime(5);
    CHECK(make_fraction(F5, 1, 2).to_string() == "3");
    CHECK(FieldValue(F5, -1L).to_string() == "4");
    CHECK_THROWS_AS(make_fraction(FieldSpec::prime(3), 1, 6), FieldError);
    CHECK_THROWS_AS(FieldSpec::prime(4), FieldError);
    CHECK_THROWS_AS(FieldSpec::prime(1ULL << 62), FieldError);
    CHECK(FieldSpec::prime(4611686018427387847ULL).characteristic() == 4611686018427387847ULL);
    // a large prime still multiplies without overflow
    const auto Fbig = FieldSpec::prime(4611686018427387847ULL);
    FieldValue x(Fbig, -2L);
    CHECK((x * x).to_string() == "4");
    CHECK((x * x.inverse()).is_one());
}

TEST_CASE("mismatched fields are rejected")
{
    auto a = FieldValue::one(FieldSpec::rationals());
    auto b = FieldValue::one(FieldSpec::prime(7));
    CHECK_THROWS_AS(field_arith(a, b, ArithOp::add), FieldError);
}

TEST_CASE("field names")
{
    CHECK(FieldSpec::parse("Q").is_rational());
    CHECK(FieldSpec::parse("F7").characteristic() == 7);
    CHECK(FieldSpec::parse("GF(11)").characteristic() == 11);
    CHECK_THROWS_AS(FieldSpec::parse("F9"), FieldError);
    CHECK_THROWS_AS(FieldSpec::parse("R"), FieldError);
}

TEST_CASE("scalar literals")
{
    const auto Q = FieldSpec::rationals();
    CHECK(parse_scalar("-9", Q) == FieldValue(Q, -9L));
    CHECK(parse_scalar("5/12", Q).to_string() == "5/12");
}

TEST_CASE("malformed scalar literals")
{
    const auto Q = FieldSpec::rationals();
    CHECK_THROWS_AS(parse_scalar("3/4", FieldSpec::prime(2)), FieldError);
    CHECK_THROWS_AS(parse_scalar("1/0", Q), FieldError);
    CHECK_THROWS_AS(parse_scalar("", Q), FieldError);
    CHECK_THROWS_AS(parse_scalar("1.5", Q), FieldError);
    CHECK_THROWS_AS(parse_scalar("--1", Q), FieldError);
    CHECK_THROWS_AS(parse_scalar("10/-4", Q), FieldError);
    CHECK(parse_scalar("3/3", FieldSpec::prime(3)).to_string() == "1");
}

TEST_CASE("round trip to canonical literals")
{
    const auto Q = FieldSpec::rationals();
    for (const char* s : {"0", "-9", "5/12", "-1/3", "144"})
        CHECK(parse_scalar(s, Q).to_string() == s);
    CHECK(parse_scalar("6/8", Q).to_string() == "3/4");
    CHECK(parse_scalar(parse_scalar("-10/4", Q).to_string(), Q).to_string() == "-5/2");
    const auto F7 = FieldSpec::prime(7);
    for (int k = 0; k < 7; ++k) {
        auto v = FieldValue(F7, static_cast<long>(k));
        CHECK(parse_scalar(v.to_string(), F7) == v);
    }
}

namespace
{

FieldValue random_value(const FieldSpec& spec, std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-20, 20), den(1, 12);
    while (true) {
        long d = den(rng);
        if (spec.inverts(d))
            return make_fraction(spec, num(rng), d);
    }
}

} // namespace

TEST_CASE("field axioms on seeded random triples")
{
    std::mt19937_64 rng(20240601);
    for (auto spec : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5)}) {
        for (int t = 0; t < 200; ++t) {
            auto a = random_value(spec, rng), b = random_value(spec, rng), c = random_value(spec, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a - a == FieldValue::zero(spec));
            if (!a.is_zero())
                CHECK((a / a).is_one());
        }
    }
}
