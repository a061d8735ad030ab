#pragma once

#include "stab3/block.hpp"

namespace stab3 {

// [[2^m, 2^m-m-2, 3]]: rows X(n), Z(n), then the check matrix [H_m | A_m H_m]
// with the deterministic companion A_m. Requires m >= 3: for m = 2 the two
// check rows anticommute (sum_v v v^T mod 2 is nonzero off-diagonal exactly
// at m = 2), so no such 4-qubit stabilizer exists.
StabilizerCode gottesman_code(int m);

// The specific [[32,25,3]] whose check matrix is [R H_5 | A_5 R H_5] with the
// fixed A_5 and R below; this is the code the 28-qubit blocks are punctured
// from, and its column listing is golden data.
StabilizerCode gottesman_listing_32();

// The fixed 5x5 matrices for gottesman_listing_32 (row-major 0/1).
extern const int kA5[5][5];
extern const int kR5[5][5];

// [[8m, 8m-l-5, 3]] with l = ceil(log2 m): five rows replicating the 8-qubit
// code m times, plus l tail rows; m = 3,4 use the catalog tail letters, m >= 5
// lifts the check rows of gottesman_code(l) punctured to the first m columns.
StabilizerCode eight_block_code(int m);

// Perfect lengths f_m = (4^m-1)/3: [2^{2(m-1)}] > ... > [2^4] > [5]; m >= 2.
StabilizerCode perfect_code(int m);

// Lengths 8 f_m: [2^{2m+1}] > [2^{2m-1}] > ... > [2^3]; m >= 1.
StabilizerCode eight_fm_code(int m);

} // namespace stab3
