#include "doctest.h"
#include "stab3/bounds.hpp"
#include "stab3/catalog.hpp"
#include "stab3/families.hpp"
#include "stab3/verify.hpp"

#include <stdexcept>

using namespace stab3;

TEST_CASE("gottesman codes for m = 3..8") {
    for (int m = 3; m <= 8; ++m) {
        INFO("m=" << m);
        const StabilizerCode c = gottesman_code(m);
        CHECK(c.n == (1 << m));
        CHECK(c.s == m + 2);
        CHECK(c.k == c.n - m - 2);
        CHECK(c.pure);
        CHECK(verify_code(c).green());
    }
    CHECK(gottesman_code(3).provenance == "[2^3]");
}

TEST_CASE("no 4-qubit gottesman code") {
    CHECK_THROWS_AS(gottesman_code(2), std::invalid_argument);
}

TEST_CASE("the published 32-qubit variant") {
    const StabilizerCode c = gottesman_listing_32();
    CHECK(c.n == 32);
    CHECK(c.s == 7);
    CHECK(verify_code(c).green());
}

TEST_CASE("eight-block codes") {
    const int expect_s[] = {7, 7, 8, 8, 8, 8, 9}; // m = 3..9
    for (int m = 3; m <= 9; ++m) {
        INFO("m=" << m);
        const StabilizerCode c = eight_block_code(m);
        CHECK(c.n == 8 * m);
        CHECK(c.s == expect_s[m - 3]);
        CHECK(verify_code(c).green());
    }
    const StabilizerCode big = eight_block_code(26); // used by the 371 chain
    CHECK(big.n == 208);
    CHECK(big.s == 10);
    CHECK(verify_code(big).green());
    CHECK_THROWS_AS(eight_block_code(2), std::invalid_argument);
}

TEST_CASE("perfect codes saturate the Hamming bound") {
    for (int m = 2; m <= 5; ++m) {
        INFO("m=" << m);
        const StabilizerCode c = perfect_code(m);
        const std::int64_t fm = f_seq(m);
        CHECK(c.n == fm);
        CHECK(c.s == 2 * m);
        CHECK((std::int64_t{1} << (2 * m)) == 3 * fm + 1); // exact saturation
        CHECK(hamming_s(fm) == 2 * m);
        CHECK(c.pure);
        CHECK(verify_code(c).green());
    }
    CHECK(perfect_code(4).provenance == "[2^6]>[2^4]>[5]");
}

TEST_CASE("8 f_m codes saturate the Hamming bound") {
    for (int m = 1; m <= 3; ++m) {
        INFO("m=" << m);
        const StabilizerCode c = eight_fm_code(m);
        CHECK(c.n == 8 * f_seq(m));
        CHECK(c.s == 2 * m + 3);
        CHECK(hamming_s(c.n) == 2 * m + 3);
        CHECK(verify_code(c).green());
    }
    CHECK(eight_fm_code(2).provenance == "[2^5]>[2^3]");
}
