#include "doctest.h"

#include "euler/numbers.hpp"
#include "euler/rng.hpp"

using namespace euler;

TEST_CASE("binomial small table") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(6, 3) == 20);
    CHECK(binomial(10, 4) == 210);
    CHECK(binomial(52, 5) == 2598960);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(3, -2) == 0);
}

TEST_CASE("binomial stays exact well past 64 bits") {
    CHECK(binomial(100, 50).str() == "100891344545564193334812497256");
    // Pascal identity at a size where doubles already lose digits
    CHECK(binomial(90, 45) == binomial(89, 44) + binomial(89, 45));
}

TEST_CASE("fits_leq and to_ll") {
    CHECK(fits_leq(BigInt(7), 7));
    CHECK(!fits_leq(BigInt(8), 7));
    BigInt huge = binomial(100, 50);
    CHECK(!fits_leq(huge, std::numeric_limits<long long>::max()));
    CHECK(to_ll(BigInt(123)) == 123);
    CHECK_THROWS_AS(to_ll(huge), std::overflow_error);
}

TEST_CASE("splitmix64 matches the reference sequence") {
    std::uint64_t s = 0;
    CHECK(splitmix64(s) == 16294208416658607535ULL);
    CHECK(splitmix64(s) == 7960286522194355700ULL);
    CHECK(splitmix64(s) == 487617019471545679ULL);
    CHECK(splitmix64(s) == 17909611376780542444ULL);
    s = 1234567;
    CHECK(splitmix64(s) == 6457827717110365317ULL);
    CHECK(splitmix64(s) == 3203168211198807973ULL);
    CHECK(splitmix64(s) == 9817491932198370423ULL);
    CHECK(splitmix64(s) == 4593380528125082431ULL);
}

TEST_CASE("next_below stays in range and is deterministic") {
    SplitMix64 a(42), b(42);
    for (int i = 0; i < 1000; ++i) {
        std::uint64_t bound = 1 + (static_cast<std::uint64_t>(i) * 37) % 97;
        std::uint64_t x = a.next_below(bound);
        CHECK(x < bound);
        CHECK(x == b.next_below(bound));
    }
}

TEST_CASE("trial seeds differ across trials and runs") {
    CHECK(trial_seed(0, 0) != trial_seed(0, 1));
    CHECK(trial_seed(0, 1) != trial_seed(1, 0));
    CHECK(trial_seed(7, 3) == trial_seed(7, 3));
}
