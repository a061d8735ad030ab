#include "doctest.h"
#include "stab3/bounds.hpp"
#include "stab3/build.hpp"
#include "stab3/verify.hpp"

#include <stdexcept>
#include <string>
#include <vector>

using namespace stab3;

namespace {

std::vector<std::string> letters(const GeneratorBlock& b) {
    std::vector<std::string> out;
    for (const Pauli& g : b.gens) out.push_back(format_pauli(g));
    return out;
}

} // namespace

TEST_CASE("worked plan at n = 38") {
    const Theorem2Plan p = theorem2_plan(38);
    CHECK(p.case_id == 'a');
    CHECK(p.m == 2);
    CHECK(p.alpha == 5);
    CHECK(p.beta == 3);
    CHECK(p.chain_text() == "[8*3]>[14]");
}

TEST_CASE("worked plan at n = 371") {
    const Theorem2Plan p = theorem2_plan(371);
    CHECK(p.case_id == 'b');
    CHECK(p.m == 3);
    CHECK(p.alpha == 38);
    CHECK(p.beta == 2);
    CHECK(p.chain_text() == "[8*26]>[2^7]>[35]");
}

TEST_CASE("worked plan at n = 81") {
    const Theorem2Plan p = theorem2_plan(81);
    CHECK(p.case_id == 'a');
    CHECK(p.m == 2);
    CHECK(p.alpha == 0);
    CHECK(p.beta == 0);
    CHECK(p.chain_text() == "[2^6]>[17]");
}

TEST_CASE("plans cover only n >= 38") {
    CHECK_THROWS_AS(theorem2_plan(37), std::invalid_argument);
    // chain lengths always sum to n
    for (std::int64_t n : {38, 50, 81, 100, 128, 200, 341 + 1, 371, 1000}) {
        const Theorem2Plan p = theorem2_plan(n);
        std::int64_t total = 0;
        for (const ChainFactor& f : p.chain) {
            if (f.kind == ChainFactor::gottesman) total += std::int64_t{1} << f.param;
            else if (f.kind == ChainFactor::eight_block) total += 8 * f.param;
            else total += f.param;
        }
        INFO("n=" << n << " chain=" << p.chain_text());
        CHECK(total == n);
        // leading eight-block factors never drop below j = 3
        if (p.chain.front().kind == ChainFactor::eight_block) CHECK(p.chain.front().param >= 3);
    }
}

TEST_CASE("build dispatch and provenance") {
    CHECK_THROWS_AS(build(4), std::invalid_argument);
    CHECK(build(5).provenance == "[4,4]_1>[1]_1");
    CHECK(build(6).provenance == "[5]+Z6");
    CHECK(build(81).provenance == "[2^6]>[17]");
    CHECK(build(81).s == 8);
    CHECK(build(40).provenance == "[2^5]>[2^3]");  // perfect path beats the chain
    CHECK(build(40).s == 7);
    CHECK(build(85).provenance == "[2^6]>[2^4]>[5]");
    CHECK(build(85).s == 8);
}

TEST_CASE("frozen rows for build(13)") {
    const std::vector<std::string> want = {
        "XXXXXXXXXXIII",
        "ZZZZZZZZZZIII",
        "IXYZIIIXYZXXX",
        "IIIIYZXYZXZZZ",
        "IYZXIIIYZXXYZ",
        "IIIIXYZXYZYZX",
    };
    CHECK(letters(build(13).block) == want);
}

TEST_CASE("frozen rows for build(37)") {
    const std::vector<std::string> want = {
        std::string(32, 'X') + "IIIII",
        std::string(32, 'Z') + "IIIII",
        "IXIXIXIXIXIXIXIXZYZYZYZYZYZYZYZYXXXXI",
        "IZXYIZXYIZXYIZXYZIYXZIYXZIYXZIYXZZZZI",
        "IIZZXXYYIIZZXXYYIIZZXXYYIIZZXXYYXYZIX",
        "IIIIZZZZXXXXYYYYIIIIZZZZXXXXYYYYYZXIZ",
        "IIIIIIIIZZZZZZZZXXXXXXXXYYYYYYYYIIIII",
    };
    CHECK(letters(build(37).block) == want);
}

TEST_CASE("the 371-qubit chain saturates the Hamming bound") {
    const StabilizerCode c = build(371);
    CHECK(c.s == 11);
    CHECK(hamming_s(371) == 11);
    CHECK(c.provenance == "[8*26]>[2^7]>[35]");
    CHECK(verify_code(c).green());
}

TEST_CASE("forced theorem-2 chain at a perfect length is one generator worse") {
    const StabilizerCode forced = build_theorem2(40);
    CHECK(forced.s == 8);
    CHECK(build(40).s == 7);
    CHECK(verify_code(forced).green());
    CHECK_THROWS_AS(build_theorem2(37), std::invalid_argument);
}

TEST_CASE("spot lengths match the published s") {
    const std::vector<std::pair<std::int64_t, int>> spots = {
        {38, 8}, {39, 8}, {41, 8}, {42, 8}, {43, 8}, {50, 8}, {64, 8},
        {82, 9}, {83, 9}, {84, 9}, {86, 9}, {100, 9}, {128, 9},
    };
    for (const auto& [n, s] : spots) {
        INFO("n=" << n);
        const StabilizerCode c = build(n);
        CHECK(c.s == s);
        CHECK(c.n == n);
    }
}
