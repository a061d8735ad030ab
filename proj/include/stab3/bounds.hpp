#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stab3/block.hpp"

namespace stab3 {

// Least s with 2^s >= 3n+1 (integer arithmetic only).
int hamming_s(std::int64_t n);

// f_m = (4^m - 1)/3, the perfect lengths {1, 5, 21, 85, 341, ...}.
std::int64_t f_seq(int m);

enum class LengthFamily {
    plain_a,     // 8 f_m + 3 <= n <= f_{m+2} - 4
    plain_b,     // f_{m+1} + 1 <= n <= 8 f_m - 3
    perfect_8fm, // n = 8 f_m (m >= 1)
    perfect_fm,  // n = f_m (m >= 2)
    upper_u,     // 8 f_m - {1,2} (m >= 2) or f_{m+2} - {2,3} (m >= 2)
    lp_l,        // 8 f_m + {1,2} (m >= 1) or f_{m+2} - 1 (m >= 1)
    small,       // 5 <= n <= 37 table-driven remainder
    degenerate_6
};

const char* family_name(LengthFamily f);

struct LengthClass {
    std::int64_t n = 0;
    int m = 0; // family index where meaningful, else 0
    LengthFamily family = LengthFamily::small;
    int s_best = 0;
    bool optimal_proven = true; // false exactly for upper_u
};

LengthClass classify_length(std::int64_t n);

struct WeightDistribution {
    std::vector<std::int64_t> a; // A_0..A_n
};

// Counts stabilizer elements by support size over all 2^s generator products.
// Rejects s > cap (default 24).
WeightDistribution weight_distribution(const GeneratorBlock& b, int cap = 24);

inline WeightDistribution weight_distribution(const StabilizerCode& code, int cap = 24) {
    return weight_distribution(code.block, cap);
}

struct LpIdentityReport {
    // 2^s A_1 = sum_i (3n-4i) A_i
    bool a1_ok = false;
    std::int64_t a1_lhs = 0, a1_rhs = 0;
    // 2^{s+1} A_2 = sum_i ((4i-3n+1)^2 - 3n - 1) A_i
    bool a2_ok = false;
    std::int64_t a2_lhs = 0, a2_rhs = 0;
    // sum of even-index A_i >= 2^{s-1}
    bool even_ok = false;
    std::int64_t even_lhs = 0, even_rhs = 0;
    bool all_ok() const { return a1_ok && a2_ok && even_ok; }
};

LpIdentityReport check_lp_identities(int n, int s, const WeightDistribution& w);

inline LpIdentityReport check_lp_identities(const StabilizerCode& code, const WeightDistribution& w) {
    return check_lp_identities(code.n, code.s, w);
}

enum class CertFamily { none, fm2_minus_1, eight_fm_plus_1, eight_fm_plus_2 };

const char* cert_family_name(CertFamily f);

struct CertCheck {
    std::string name;
    bool ok = false;
    std::int64_t lhs = 0, rhs = 0;
};

struct CertificateReport {
    std::int64_t n = 0;
    int m = 0;
    CertFamily family = CertFamily::none;
    std::vector<CertCheck> checks;
    int strengthened_bound = 0; // s_H or s_H + 1
    bool all_pass() const;
};

// Exact integer evaluation of the strengthened-LP certificate inequalities at
// the three special families; members with every check passing get bound
// s_H + 1, everything else s_H.
CertificateReport lp_certificate(std::int64_t n);

} // namespace stab3
