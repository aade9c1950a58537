#include <doctest.h>

#include <cmath>

#include "test_util.hpp"
#include "viz/vizing_check.hpp"

using namespace viz;
using namespace testutil;

TEST_CASE("check_pair on small pairs") {
    const PairReport p22 = check_pair(path(2), path(2));
    CHECK(p22.gamma_g == 1);
    CHECK(p22.gamma_h == 1);
    CHECK(p22.gamma_product == 2);
    CHECK(p22.vizing_holds);

    const PairReport c44 = check_pair(cycle(4), cycle(4));
    CHECK(c44.gamma_g == 2);
    CHECK(c44.gamma_h == 2);
    CHECK(c44.gamma_product == 4);
    CHECK(c44.vizing_holds);   // 4 >= 4
    CHECK(c44.suen_tarr_holds);  // 2*4 >= 4 + 2
    CHECK(c44.theorem_condition);

    const PairReport k11 = check_pair(Graph(1), Graph(1));
    CHECK(k11.gamma_product == 1);
    CHECK(k11.vizing_holds);
}

TEST_CASE("check_pair propagates budget overruns with context") {
    try {
        check_pair(cycle(20), cycle(20), std::nullopt, 10);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(std::string(e.what()).find("gamma") != std::string::npos);
    }
}

TEST_CASE("theorem condition arithmetic") {
    CHECK(check_theorem_condition(cycle(4), cycle(4), 2, 2));       // 4 >= 4 boundary
    CHECK_FALSE(check_theorem_condition(path(3), cycle(9), 2, 3));  // 3 < 6
    CHECK(check_theorem_condition(empty(25), empty(25), 5, 5));

    // symmetric under swapping the pair together with the gammas
    CHECK(check_theorem_condition(path(5), cycle(7), 2, 3) ==
          check_theorem_condition(cycle(7), path(5), 3, 2));
}

TEST_CASE("corollary order bound") {
    CHECK(check_corollary_bound(16, 16, 0.5));   // 2^(16/4) = 16, equality
    CHECK_FALSE(check_corollary_bound(17, 16, 0.5));
    CHECK(check_corollary_bound(1LL << 32, 256, 0.5));  // 2^(256/8) = 2^32

    CHECK_THROWS_AS(check_corollary_bound(4, 1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(check_corollary_bound(4, 4, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(check_corollary_bound(3, 4, 0.5), std::invalid_argument);
}

TEST_CASE("log-scale bound agrees with exact integer powers") {
    // q = 2 (p = 0.5): bound = 2^(h / log2 h); compare against the exact
    // power wherever it fits in 64 bits
    for (long h : {4L, 16L, 64L, 256L}) {
        const double e = static_cast<double>(h) / std::log2(static_cast<double>(h));
        const long floor_e = static_cast<long>(e);
        if (floor_e >= 63) continue;
        const long pow_floor = 1L << floor_e;
        CHECK(check_corollary_bound(pow_floor, h, 0.5));
        // doubling the bound always lands strictly above it (the exponent
        // grows by a full unit), well past any log-scale tolerance
        CHECK_FALSE(check_corollary_bound(2 * pow_floor, h, 0.5));
    }
}
