#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stab3/pauli.hpp"

namespace stab3 {

// Ordered generator list of common length. Noncommuting pairs are always
// recomputed from the rows, never cached or trusted.
struct GeneratorBlock {
    int n = 0;
    std::vector<Pauli> gens;

    int s() const { return static_cast<int>(gens.size()); }
};

GeneratorBlock make_block(std::vector<Pauli> rows);
GeneratorBlock make_block(const std::vector<std::string>& rows);
// Exact match for brace lists of string literals (a two-literal list would
// otherwise also fit vector<Pauli>'s iterator-pair constructor).
GeneratorBlock make_block(std::initializer_list<const char*> rows);

// All unordered row pairs {i,j} with anticommuting generators, in (i,j) order.
std::vector<std::pair<int, int>> noncommuting_pairs(const GeneratorBlock& b);

// The invariant pair count e: half the GF(2) rank of the s x s commutation
// form B(i,j) = [gens i and j anticommute]. A generating set can display more
// literal noncommuting pairs than e (row recombination removes the excess);
// rank(B)/2 is what block names' subscripts count.
int block_e(const GeneratorBlock& b);

bool leading_xz(const GeneratorBlock& b);

// Rank of the s x 2n symplectic matrix (independence test).
int symplectic_rank(const GeneratorBlock& b);

// x bits 0..n-1, z bits n..2n-1.
std::vector<std::uint64_t> symplectic_row(const Pauli& p);

// Side-by-side pasting: rows 0,1 are X(left.n)|I and Z(left.n)|I, then
// row 2+i is left.gens[2+i] | right.gens[i]; overhang rows on either side are
// padded with identity. s = max(left.s, right.s + 2). Requires leading_xz(left).
GeneratorBlock paste(const GeneratorBlock& left, const GeneratorBlock& right);

struct AlignedPaste {
    GeneratorBlock block;
    int e = 0; // achieved minimum
};

// paste() after canonicalizing both operands by group-preserving row
// recombination (noncommuting pairs made adjacent, radical last; the left
// block keeps its X/Z prefix), then a deterministic lexicographic-first
// search over right-row permutations, early-exiting at e = 0.
AlignedPaste paste_aligned(const GeneratorBlock& left, const GeneratorBlock& right);

// Group-preserving canonical form used by paste_aligned; exposed for tests.
// fixed_prefix rows are kept in place (after clearing their pairs with the
// rest when the prefix itself anticommutes, as for leading X/Z rows).
GeneratorBlock normalize_pairs(const GeneratorBlock& b, int fixed_prefix);

// Delete the listed qubit coordinates (0-based, distinct); survivors keep
// their relative order.
GeneratorBlock puncture(const GeneratorBlock& b, const std::vector<int>& coords);

struct StabilizerCode {
    GeneratorBlock block;
    int n = 0, k = 0, s = 0;
    bool pure = true;
    std::string provenance;
};

// Promotion re-verifies commutativity and independence; a block with
// noncommuting pairs or dependent rows never becomes a StabilizerCode.
StabilizerCode make_code(GeneratorBlock b, bool pure, std::string provenance);

} // namespace stab3
