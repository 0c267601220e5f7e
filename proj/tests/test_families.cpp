#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ascart/families.hpp"

using namespace ascart;

TEST_CASE("names round trip") {
    for (Family f : {Family::BcMinus, Family::BcPlus, Family::Farnell, Family::Experiment})
        CHECK(family_from_name(family_name(f)) == f);
    CHECK_THROWS_AS(family_from_name("bc"), std::invalid_argument);
    CHECK_THROWS_AS(family_from_name(""), std::invalid_argument);
}

TEST_CASE("defining polynomials are exact") {
    PrimeModulus pm(3);
    FamilyId id;
    id.p = 3;

    id.name = Family::BcMinus;
    Curve minus = family_poly(id);
    CHECK(minus.f() == FpPoly::parse(pm, "2*x^8 + 2*x^4"));
    CHECK(minus.d() == 8);

    id.name = Family::BcPlus;
    Curve plus = family_poly(id);
    CHECK(plus.f() == FpPoly::parse(pm, "2*x^10 + 2*x^8"));
    CHECK(plus.d() == 10);

    id.name = Family::Experiment;
    id.n = 2;
    Curve exp2 = family_poly(id);
    CHECK(exp2.f() == FpPoly::parse(pm, "2*x^17 + 2*x^10"));
    CHECK(exp2.d() == 17);
}

TEST_CASE("experiment at n = 1 coincides with bc-minus") {
    for (std::int64_t p : {3, 5, 7}) {
        FamilyId a{Family::BcMinus, p};
        FamilyId b{Family::Experiment, p, 1};
        CHECK(family_poly(a).f() == family_poly(b).f());
    }
}

TEST_CASE("experiment parameters are validated") {
    FamilyId id{Family::Experiment, 3, 0};
    CHECK_THROWS_AS(family_poly(id), std::invalid_argument);
    id.n = -2;
    CHECK_THROWS_AS(family_poly(id), std::invalid_argument);
}

TEST_CASE("farnell generation") {
    FamilyId id;
    id.name = Family::Farnell;
    id.p = 5;

    Curve c = family_poly(id);
    CHECK(c.d() == 4);  // default degree p - 1
    CHECK(c.f().leading_coeff() != 0);

    // deterministic per seed
    CHECK(family_poly(id).f() == c.f());
    id.seed = 1;
    Curve other = family_poly(id);
    CHECK(other.d() == 4);
    CHECK(other.f() != c.f());  // seeds 0 and 1 land on different polynomials

    id.deg = 9;
    CHECK(family_poly(id).d() == 9);
    id.deg = 10;  // divisible by p
    CHECK_THROWS_AS(family_poly(id), std::invalid_argument);
}

TEST_CASE("farnell accepts a supplied polynomial") {
    PrimeModulus pm(5);
    FamilyId id;
    id.name = Family::Farnell;
    id.p = 5;
    id.poly = FpPoly::parse(pm, "x^4 + 2*x + 1");
    CHECK(family_poly(id).f() == *id.poly);

    id.poly = FpPoly::parse(pm, "x^3");
    CHECK_THROWS_AS(family_poly(id), std::invalid_argument);  // degree != p - 1

    id.deg = 3;
    CHECK(family_poly(id).f() == *id.poly);  // explicit degree overrides the default

    id.deg = 0;
    id.poly = FpPoly::parse(PrimeModulus(3), "x^2");
    CHECK_THROWS_AS(family_poly(id), ModulusMismatch);
}

TEST_CASE("bc members attain the bound") {
    for (std::int64_t p : {3, 5, 7}) {
        const std::int64_t half = ((p - 1) / 2) * ((p * p - 1) / 2);
        InvariantReport minus = family_verify({Family::BcMinus, p});
        CHECK(minus.attains_lower);
        CHECK(minus.a_number == half);
        InvariantReport plus = family_verify({Family::BcPlus, p});
        CHECK(plus.attains_lower);
        CHECK(plus.a_number == half);
    }
}

TEST_CASE("experiment members attain the bound for small n") {
    for (std::int64_t p : {3, 5}) {
        const std::int64_t half = ((p - 1) / 2) * ((p * p - 1) / 2);
        for (std::int64_t n = 1; n <= 3; ++n) {
            InvariantReport rep = family_verify({Family::Experiment, p, n});
            CHECK(rep.attains_lower);
            CHECK(rep.a_number == n * half);
            CHECK(rep.d == n * p * p - 1);
        }
    }
}

TEST_CASE("farnell members attain (p-1)^2/4 regardless of the polynomial") {
    for (std::int64_t p : {3, 5, 7}) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            FamilyId id;
            id.name = Family::Farnell;
            id.p = p;
            id.seed = seed;
            InvariantReport rep = family_verify(id);
            CHECK(rep.attains_lower);
            CHECK(rep.a_number == (p - 1) * (p - 1) / 4);
        }
    }
}
