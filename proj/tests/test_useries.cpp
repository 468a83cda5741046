#include "doctest.h"

#include <random>

#include "torusfk/useries.hpp"

using namespace torusfk;

namespace
{

// Counts partitions of n into parts at most `largest` by direct enumeration.
long count_partitions(int n, int largest)
{
    if (n == 0)
        return 1;
    long total = 0;
    for (int part = std::min(n, largest); part >= 1; --part)
        total += count_partitions(n - part, part);
    return total;
}

} // namespace

TEST_CASE("partition series matches brute-force enumeration")
{
    auto p = partition_series(30);
    CHECK(p.format_list().rfind("[1, 1, 2, 3, 5, 7, 11, 15", 0) == 0);
    for (int n = 0; n <= 30; ++n)
        CHECK(p[n] == count_partitions(n, n));
    CHECK(partition_product(60) == partition_series(60));
}

TEST_CASE("theta series coefficients")
{
    auto v = theta_v(10);
    CHECK(v[0] == 1);
    CHECK(v[1] == -3);
    CHECK(v[2] == 0);
    CHECK(v[3] == 5);
    CHECK(v[6] == -7);
    CHECK(v[10] == 9);
    CHECK(v.format() == "1 - 3*U + 5*U^3 - 7*U^6 + 9*U^10");
}

TEST_CASE("series inverse and geometric series")
{
    IntSeries one_minus_u = IntSeries::constant(1, 20);
    one_minus_u[1] = -1;
    auto geo = series_inv(one_minus_u);
    for (int n = 0; n <= 20; ++n)
        CHECK(geo[n] == 1);
    CHECK(series_mul(one_minus_u, geo) == IntSeries::constant(1, 20));
    IntSeries two = IntSeries::constant(2, 5);
    CHECK_THROWS_AS(series_inv(two), Error);

    const auto spec = FieldSpec::rationals();
    auto f = to_field(two, spec);
    f[3] = FieldValue(spec, 7L);
    CHECK(series_mul(f, series_inv(f)) == FieldSeries::constant(1, 5, spec));
    FieldSeries zero(5, spec);
    CHECK_THROWS_AS(series_inv(zero), Error);
}

TEST_CASE("Jacobi triple product u^3 v = 1")
{
    CHECK(jacobi_check(50));
    auto u = partition_series(50);
    CHECK(series_pow(u, -3) == theta_v(50));
    for (auto spec : {FieldSpec::rationals(), FieldSpec::prime(7)})
        CHECK(series_mul(series_pow(to_field(u, spec), 3), to_field(theta_v(50), spec)) ==
              FieldSeries::constant(1, 50, spec));
}

TEST_CASE("series multiplication is commutative and associative")
{
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<long> coeff(-9, 9);
    for (int trial = 0; trial < 25; ++trial) {
        IntSeries a(15), b(15), c(15);
        for (int n = 0; n <= 15; ++n) {
            a[n] = coeff(rng);
            b[n] = coeff(rng);
            c[n] = coeff(rng);
        }
        CHECK(series_mul(a, b) == series_mul(b, a));
        CHECK(series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c)));
    }
}
