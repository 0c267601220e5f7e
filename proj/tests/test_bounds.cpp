#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ascart/bounds.hpp"

using namespace ascart;

TEST_CASE("lower bound fixtures") {
    CHECK(lower_bound_single(PrimeModulus(3), 7) == 3);
    CHECK(lower_bound_single(PrimeModulus(3), 5) == 2);
    CHECK(lower_bound_single(PrimeModulus(3), 8) == 4);
    CHECK(lower_bound_single(PrimeModulus(3), 10) == 4);
    CHECK(lower_bound_single(PrimeModulus(5), 4) == 4);
    CHECK(lower_bound_single(PrimeModulus(5), 9) == 9);
    CHECK(lower_bound_single(PrimeModulus(7), 13) == 20);
    CHECK(lower_bound_single(PrimeModulus(11), 120) == 300);
    CHECK(lower_bound_single(PrimeModulus(11), 122) == 300);
    CHECK(lower_bound_single(PrimeModulus(3), 1) == 0);
}

TEST_CASE("upper bound fixtures") {
    CHECK(upper_bound(PrimeModulus(3), 7, 0) == 5);
    CHECK(upper_bound(PrimeModulus(5), 4, 0) == 6);
    CHECK(upper_bound(PrimeModulus(3), 1, 0) == 0);
    // d = p^2 + 1 makes the i-th term exactly i^2
    CHECK(upper_bound(PrimeModulus(11), 122, 0) == 385);
    CHECK(upper_bound(PrimeModulus(3), 10, 0) == 5);
}

TEST_CASE("upper bound is affine in the base term") {
    for (std::int64_t a : {0, 1, 5}) {
        CHECK(upper_bound(PrimeModulus(3), 7, a) == 3 * a + 5);
        CHECK(upper_bound(PrimeModulus(11), 122, a) == 11 * a + 385);
    }
    CHECK_THROWS_AS(upper_bound(PrimeModulus(3), 7, -1), std::invalid_argument);
}

TEST_CASE("closed forms for special degrees") {
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
        PrimeModulus pm(p);
        const std::int64_t half = ((p - 1) / 2) * ((p * p - 1) / 2);
        CHECK(lower_bound_single(pm, p - 1) == (p - 1) * (p - 1) / 4);
        CHECK(lower_bound_single(pm, p * p - 1) == half);
        CHECK(lower_bound_single(pm, p * p + 1) == half);
    }
}

TEST_CASE("adding p^2 to the degree adds L(p^2+1)") {
    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
        PrimeModulus pm(p);
        const std::int64_t step = lower_bound_single(pm, p * p + 1);
        for (std::int64_t d = 1; d <= 300; ++d)
            CHECK(lower_bound_single(pm, d + p * p) == lower_bound_single(pm, d) + step);
    }
}

TEST_CASE("experiment degrees stack n copies of the half bound") {
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        PrimeModulus pm(p);
        const std::int64_t half = ((p - 1) / 2) * ((p * p - 1) / 2);
        for (std::int64_t n = 1; n <= 7; ++n)
            CHECK(lower_bound_single(pm, n * p * p - 1) == n * half);
    }
}

TEST_CASE("multiset bound fixtures") {
    PrimeModulus pm(3);
    CHECK(lower_bound_multi(pm, {7}) == 3);
    CHECK(lower_bound_multi(pm, {7, 7}) == 6);
    CHECK(lower_bound_multi(pm, {}) == 0);
}

TEST_CASE("singleton multiset agrees with the single-break form") {
    for (std::int64_t p : {3, 5, 7, 11, 13}) {
        PrimeModulus pm(p);
        for (std::int64_t d = 1; d <= 200; ++d) {
            if (d % p == 0) continue;
            CHECK(lower_bound_multi(pm, {d}) == lower_bound_single(pm, d));
        }
    }
}

TEST_CASE("multiset bound dominates the sum of single-break bounds") {
    // the max over j of a sum is at least the sum at the common optimum
    // j = (p+1)/2, which is where each single-break bound sits
    for (std::int64_t p : {3, 5, 7}) {
        PrimeModulus pm(p);
        std::int64_t sum = 0;
        std::vector<std::int64_t> breaks;
        for (std::int64_t d : {4, 9, 13}) {
            if (d % p == 0) continue;
            breaks.push_back(d);
            sum += lower_bound_single(pm, d);
        }
        CHECK(lower_bound_multi(pm, breaks) >= sum);
    }
}

TEST_CASE("invalid breaks are rejected") {
    PrimeModulus pm(3);
    CHECK_THROWS_AS(lower_bound_single(pm, 0), std::invalid_argument);
    CHECK_THROWS_AS(lower_bound_single(pm, -7), std::invalid_argument);
    CHECK_THROWS_AS(upper_bound(pm, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(lower_bound_multi(pm, {7, 0}), std::invalid_argument);
    CHECK_THROWS_AS(lower_bound_multi(pm, {-2}), std::invalid_argument);
}

TEST_CASE("values stay exact at large scale") {
    // d = 23^2*7 - 1 = 3702: n-fold stacking keeps everything integral
    PrimeModulus pm(23);
    const std::int64_t half = 11 * 264;
    CHECK(lower_bound_single(pm, 7 * 23 * 23 - 1) == 7 * half);
    CHECK(upper_bound(pm, 3702, 0) > lower_bound_single(pm, 3702));
}
