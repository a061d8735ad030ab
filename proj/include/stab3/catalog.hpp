#pragma once

#include <string>
#include <vector>

#include "stab3/block.hpp"

namespace stab3 {

// Named 2ed-blocks and helper codes used by the small-length constructions:
//   [1]_1 [2,4]_2 [3,4]_2 [4,4]_1 [3,5]_2 [5,5]_2 [7,5]_1
//   [6,6]_1 [6,6]_2 [10,6]_1 [10,6]_2 [10] [6,0,4] [17]
//   [18,7]_1 [18,7]_2 [20,7]_2 [26,7]_2 [28,7]_1 [28,7]_2
// Every lookup re-verifies that the recomputed e matches the name's
// subscript. "[7,5]_2" is rejected with an explanation: a 7-qubit 5-generator
// 2ed block whose group contains X(7) and Z(7) always has e <= 1 (proven by
// exhausting all 3072 admissible column designs), so the e = 2 label is
// unrealizable; the wide blocks that cite it use the e = 1 block and gain
// their second pair from the tail rows.
GeneratorBlock named_block(const std::string& name);

std::vector<std::string> named_block_names();

// Pure optimal code for 5 <= n <= 37 built from its catalog chain; n = 6
// returns the degenerate [[6,1,3]] (pure = false).
StabilizerCode small_code(int n);

// The 36-qubit, 7-generator code transcribed verbatim (golden data); verified
// independently of the pasted small_code(36).
StabilizerCode table6_code();

// The catalog chain for small_code(n), e.g. {"[10,6]_2","[3,4]_2"} for n=13.
std::vector<std::string> small_chain(int n);

namespace detail {
// Raw transcription rows (shared with fixtures; tests assert equality).
const std::vector<std::string>& rows_eq3();
const std::vector<std::string>& rows_eq4();
const std::vector<std::string>& rows_17();
const std::vector<std::string>& rows_named(const std::string& name);
const std::vector<std::vector<std::string>>& rows_partitions();
const std::vector<std::string>& rows_table6_40();
const std::vector<int>& table6_column_labels();
const std::vector<std::string>& tail_letters_8m(int m);
} // namespace detail

} // namespace stab3
