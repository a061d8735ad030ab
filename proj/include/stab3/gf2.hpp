#pragma once

#include <cstdint>
#include <vector>

namespace stab3 {

// Bit-packed binary matrix, row-major; bit c of a row is column c.
struct BinMatrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<std::uint64_t>> data;

    BinMatrix() = default;
    BinMatrix(int r, int c);

    bool get(int r, int c) const { return (data[r][c >> 6] >> (c & 63)) & 1u; }
    void set(int r, int c, bool v);

    bool operator==(const BinMatrix&) const = default;
};

BinMatrix identity_matrix(int m);

// m x 2^m matrix whose column k is the binary expansion of k, row i holding
// bit i (bit 0 least significant). Column 0 is all-zero.
BinMatrix hamming_matrix(int m);

// Companion matrix of x^m + x + 1; invertible and fixed-point free for every
// m >= 2 (both asserted at construction).
BinMatrix companion_fixed_point_free(int m);

bool is_invertible(const BinMatrix& a);

// A s != 0 and A s != s for every nonzero s, i.e. A and A+I both invertible.
bool is_fixed_point_free(const BinMatrix& a);

int rank(const BinMatrix& m);
BinMatrix matmul(const BinMatrix& a, const BinMatrix& b);
BinMatrix mat_add(const BinMatrix& a, const BinMatrix& b);

// Incremental GF(2) row space for membership tests.
class RowSpace {
public:
    explicit RowSpace(int cols) : cols_(cols) {}
    // Returns true if v was independent (and absorbs it).
    bool add(std::vector<std::uint64_t> v);
    bool contains(std::vector<std::uint64_t> v) const;
    int rank() const { return static_cast<int>(basis_.size()); }

private:
    int cols_;
    std::vector<std::vector<std::uint64_t>> basis_; // echelon rows
    std::vector<int> pivot_;                        // pivot column per basis row
    void reduce(std::vector<std::uint64_t>& v, int& lead) const;
};

bool in_row_space(const std::vector<std::uint64_t>& v, const BinMatrix& m);

} // namespace stab3
