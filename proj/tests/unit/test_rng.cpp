#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "morl/rng.hpp"

#include <cmath>

using morl::Rng;

TEST_CASE("splitmix64 reference sequence")
{
    // Published SplitMix64 outputs for seed 0.
    Rng rng(0);
    CHECK(rng.next() == 0xE220A8397B1DCDAFULL);
    CHECK(rng.next() == 0x6E789E6AA1B965F4ULL);
    CHECK(rng.next() == 0x06C45D188009454FULL);
}

TEST_CASE("uniform stays in [0,1) and index in range")
{
    Rng rng(42);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        REQUIRE(rng.index(7) < 7);
    }
}

TEST_CASE("normal draws have unit moments")
{
    Rng rng(3);
    const int n = 200000;
    double s = 0.0;
    double ss = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = rng.normal();
        s += z;
        ss += z * z;
    }
    const double mean = s / n;
    CHECK(std::abs(mean) < 0.01);
    CHECK(std::abs(ss / n - mean * mean - 1.0) < 0.02);
}

TEST_CASE("derived seeds depend on every key and their order")
{
    const auto a = morl::derive_seed(1, {2, 3});
    CHECK(a == morl::derive_seed(1, {2, 3}));
    CHECK(a != morl::derive_seed(1, {3, 2}));
    CHECK(a != morl::derive_seed(2, {2, 3}));
    CHECK(a != morl::derive_seed(1, {2, 4}));
    CHECK(morl::hash_name("NSGA2") != morl::hash_name("SPEA2"));
}
