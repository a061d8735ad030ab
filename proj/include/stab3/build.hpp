#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stab3/block.hpp"

namespace stab3 {

struct ChainFactor {
    enum Kind { gottesman, eight_block, small } kind = small;
    int param = 0; // m for gottesman/eight_block, n for small
    std::string name() const;
};

struct Theorem2Plan {
    char case_id = 'a'; // 'a' or 'b'
    int m = 0;
    std::int64_t alpha = 0;
    int beta = 0;
    std::vector<ChainFactor> chain;
    std::string chain_text() const; // e.g. "[8*3]>[14]"
};

// The unique (case, m, alpha, beta) covering n and its paste chain; n >= 38.
Theorem2Plan theorem2_plan(std::int64_t n);

// Best construction for any n >= 5: small catalog below 38, the perfect
// chains at f_m / 8 f_m lengths, otherwise the theorem-2 chain folded right
// to left. The result is exhaustively verified before being returned
// (degenerate mode only at n = 6) unless n exceeds verify_cap.
StabilizerCode build(std::int64_t n);

// As build(), but force the theorem-2 chain even at perfect lengths (one
// generator worse there); for comparison tests. Requires n >= 38.
StabilizerCode build_theorem2(std::int64_t n);

// Lengths above this are constructed but not exhaustively verified by build().
constexpr std::int64_t kVerifyCap = 1 << 15;

} // namespace stab3
