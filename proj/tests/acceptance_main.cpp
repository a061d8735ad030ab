// Acceptance gate: one line per criterion, exit code = number of failures.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "stab3/bounds.hpp"
#include "stab3/build.hpp"
#include "stab3/catalog.hpp"
#include "stab3/families.hpp"
#include "stab3/io.hpp"
#include "stab3/verify.hpp"

namespace {

using namespace stab3;
using Fail = std::optional<std::string>;

std::string fixture(const std::string& name) {
    return std::string(STAB3_FIXTURES) + "/" + name;
}

// Published best generator count for 5 <= n <= 128, frozen independently of
// the classification code so the two derivations cross-check each other.
int published_s(std::int64_t n) {
    static const int small[] = {4, 5, 6, 5, 6, 6, 6, 6, 6, 6, 6, 6, 6,
                                7, 7, 7, 6, 7, 7, 7, 7, 7, 7, 7, 7, 7,
                                7, 7, 7, 7, 7, 7, 7};
    if (n <= 37) return small[n - 5];
    if (n <= 39) return 8;
    if (n == 40) return 7;
    if (n <= 42) return 8;
    if (n <= 85) return (n >= 82 && n <= 84) ? 9 : 8;
    return 9; // 86..128
}

Fail criterion_table() {
    for (std::int64_t n = 5; n <= 128; ++n) {
        const StabilizerCode c = build(n);
        if (c.s != published_s(n))
            return "n=" + std::to_string(n) + " built s=" + std::to_string(c.s) +
                   " expected " + std::to_string(published_s(n));
        if (classify_length(n).s_best != published_s(n))
            return "n=" + std::to_string(n) + " classification disagrees with table";
    }
    return {};
}

Fail criterion_verify_sweep() {
    for (std::int64_t n = 5; n <= 128; ++n) {
        const StabilizerCode c = build(n);
        if (c.pure != (n != 6))
            return "n=" + std::to_string(n) + " unexpected purity";
        const VerificationReport r = verify_code(c);
        if (!r.green() || !r.s_matches)
            return "n=" + std::to_string(n) + " report:\n" + r.render();
    }
    return {};
}

Fail criterion_plans() {
    const Theorem2Plan p38 = theorem2_plan(38);
    if (p38.case_id != 'a' || p38.m != 2 || p38.alpha != 5 || p38.beta != 3 ||
        p38.chain_text() != "[8*3]>[14]")
        return "plan(38) = " + p38.chain_text();
    const Theorem2Plan p371 = theorem2_plan(371);
    if (p371.case_id != 'b' || p371.m != 3 || p371.alpha != 38 || p371.beta != 2 ||
        p371.chain_text() != "[8*26]>[2^7]>[35]")
        return "plan(371) = " + p371.chain_text();
    const StabilizerCode c81 = build(81);
    if (c81.provenance != "[2^6]>[17]" || c81.s != 8)
        return "build(81) gave " + c81.provenance + " s=" + std::to_string(c81.s);
    const StabilizerCode c371 = build(371);
    if (c371.s != 11 || c371.s != hamming_s(371))
        return "build(371) s=" + std::to_string(c371.s);
    if (!verify_code(c371).green()) return "build(371) failed verification";
    return {};
}

Fail criterion_families() {
    for (int m = 2; m <= 5; ++m) {
        const StabilizerCode c = perfect_code(m);
        if (3 * c.n + 1 != std::int64_t{1} << c.s)
            return "perfect m=" + std::to_string(m) + " does not saturate the sphere count";
        if (!c.pure || c.s != 2 * m) return "perfect m=" + std::to_string(m) + " malformed";
        if (!verify_code(c).green()) return "perfect m=" + std::to_string(m) + " not green";
    }
    for (int m = 1; m <= 3; ++m) {
        const StabilizerCode c = eight_fm_code(m);
        if (c.s != 2 * m + 3 || c.s != hamming_s(c.n))
            return "8f_m m=" + std::to_string(m) + " wrong s";
        if (!verify_code(c).green()) return "8f_m m=" + std::to_string(m) + " not green";
    }
    return {};
}

Fail criterion_lp_identities() {
    for (std::int64_t n = 5; n <= 341; ++n) {
        const StabilizerCode c = build(n);
        const WeightDistribution w = weight_distribution(c.block);
        const LpIdentityReport r = check_lp_identities(c.n, c.s, w);
        if (!r.all_ok()) return "identities fail at n=" + std::to_string(n);
        if (c.pure && (w.a[1] != 0 || w.a[2] != 0))
            return "pure code with low-weight stabilizer at n=" + std::to_string(n);
    }
    return {};
}

Fail criterion_certificates() {
    for (int m = 1; m <= 10; ++m) {
        const std::int64_t ns[] = {f_seq(m + 2) - 1, 8 * f_seq(m) + 1, 8 * f_seq(m) + 2};
        for (std::int64_t n : ns) {
            const CertificateReport cert = lp_certificate(n);
            if (cert.family == CertFamily::none || !cert.all_pass())
                return "certificate incomplete at n=" + std::to_string(n);
            if (cert.strengthened_bound != hamming_s(n) + 1)
                return "bound not strengthened at n=" + std::to_string(n);
            if (n <= 32768) {
                const StabilizerCode c = build(n);
                if (c.s != hamming_s(n) + 1)
                    return "construction misses the certificate bound at n=" + std::to_string(n);
            }
        }
    }
    return {};
}

Fail criterion_fixtures() {
    static const std::pair<const char*, const char*> named[] = {
        {"[1]_1", "block_1_1.txt"},       {"[2,4]_2", "block_2_4_2.txt"},
        {"[3,4]_2", "block_3_4_2.txt"},   {"[4,4]_1", "block_4_4_1.txt"},
        {"[3,5]_2", "block_3_5_2.txt"},   {"[5,5]_2", "block_5_5_2.txt"},
        {"[7,5]_1", "block_7_5_1.txt"},   {"[18,7]_1", "assembly_18_7_1.txt"},
        {"[18,7]_2", "assembly_18_7_2.txt"}, {"[20,7]_2", "assembly_20_7_2.txt"},
        {"[26,7]_2", "assembly_26_7_2.txt"},
    };
    for (const auto& [name, file] : named) {
        const GeneratorBlock got = read_rows_file(fixture(file));
        const GeneratorBlock want = named_block(name);
        if (got.gens != want.gens || got.n != want.n)
            return std::string("fixture mismatch for ") + name;
    }
    for (const char* file : {"partition0.txt", "partition1.txt", "partition2.txt"}) {
        const GeneratorBlock b = read_rows_file(fixture(file));
        const VerificationReport r = verify_rows(b, DetectMode::pure);
        if (b.n != 16 || b.s() != 6 || !r.green())
            return std::string("partition fixture not a [[16,10,3]]: ") + file;
    }
    for (const char* file : {"code5.txt", "code8.txt", "code17.txt"}) {
        const GeneratorBlock b = read_rows_file(fixture(file));
        if (!verify_rows(b, DetectMode::pure).green())
            return std::string("transcribed code fixture not green: ") + file;
    }
    const GeneratorBlock d6 = read_rows_file(fixture("degenerate6.txt"));
    if (d6.gens != small_code(6).block.gens) return "degenerate six-qubit fixture mismatch";
    const StabilizerCode t6 = table6_code();
    const StabilizerCode s36 = small_code(36);
    for (const StabilizerCode* c : {&t6, &s36}) {
        if (c->n != 36 || c->k != 29) return "36-qubit code has wrong parameters";
        if (!verify_code(*c).green()) return "36-qubit code not green";
    }
    if (read_rows_file(fixture("code36.txt")).gens != t6.block.gens)
        return "code36 fixture does not match the transcription";
    return {};
}

Fail criterion_witnesses() {
    for (std::int64_t n = 5; n <= 40; ++n) {
        const StabilizerCode c = build(n);
        if (c.k == 0) continue;
        const auto w3 = find_weight3_logical(c.block);
        if (!w3) return "no weight-3 logical at n=" + std::to_string(n);
        if (weight(*w3) != 3) return "witness has wrong weight at n=" + std::to_string(n);
    }
    const GeneratorBlock d4 = read_rows_file(fixture("code_6_0_4.txt"));
    if (find_weight3_logical(d4))
        return "distance-4 control block has a weight-3 witness";
    return {};
}

Fail criterion_large() {
    const StabilizerCode a = build(1365);
    if (a.s != 12) return "build(1365) s=" + std::to_string(a.s);
    if (!verify_code(a).green()) return "build(1365) not green";
    const StabilizerCode b = build(2728);
    if (b.s != 13) return "build(2728) s=" + std::to_string(b.s);
    if (!verify_code(b).green()) return "build(2728) not green";
    return {};
}

struct Criterion {
    int id;
    const char* what;
    double limit_s;
    std::function<Fail()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "published s-table reproduced for 5..128", 30.0, criterion_table},
        {2, "full verification sweep 5..128", 60.0, criterion_verify_sweep},
        {3, "length plans and chain builds", 60.0, criterion_plans},
        {4, "perfect and eight-block families", 60.0, criterion_families},
        {5, "weight-distribution identities", 60.0, criterion_lp_identities},
        {6, "strengthened certificates m=1..10", 120.0, criterion_certificates},
        {7, "fixture corpus round trip", 30.0, criterion_fixtures},
        {8, "weight-3 witnesses up to n=40", 30.0, criterion_witnesses},
        {9, "large instances 1365 and 2728", 120.0, criterion_large},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Fail fail;
        try {
            fail = c.run();
        } catch (const std::exception& e) {
            fail = std::string("exception: ") + e.what();
        }
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!fail && dt > c.limit_s)
            fail = "took " + std::to_string(dt) + "s (limit " +
                   std::to_string(c.limit_s) + "s)";
        if (fail) {
            ++failures;
            std::printf("FAIL criterion %d %s (%.2fs): %s\n", c.id, c.what, dt,
                        fail->c_str());
        } else {
            std::printf("PASS criterion %d %s (%.2fs)\n", c.id, c.what, dt);
        }
    }
    return failures;
}
