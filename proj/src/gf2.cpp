#include "stab3/gf2.hpp"

#include <stdexcept>

#include "stab3/pauli.hpp" // words_for

namespace stab3 {

BinMatrix::BinMatrix(int r, int c)
    : rows(r), cols(c), data(static_cast<std::size_t>(r), std::vector<std::uint64_t>(words_for(c), 0)) {
    if (r < 0 || c < 0) throw std::invalid_argument("negative matrix shape");
}

void BinMatrix::set(int r, int c, bool v) {
    const std::uint64_t m = std::uint64_t{1} << (c & 63);
    if (v) data[r][c >> 6] |= m; else data[r][c >> 6] &= ~m;
}

BinMatrix identity_matrix(int m) {
    BinMatrix out(m, m);
    for (int i = 0; i < m; ++i) out.set(i, i, true);
    return out;
}

BinMatrix hamming_matrix(int m) {
    if (m < 1) throw std::invalid_argument("hamming_matrix needs m >= 1");
    if (m > 24) throw std::invalid_argument("hamming_matrix m too large");
    BinMatrix out(m, 1 << m);
    for (int k = 0; k < (1 << m); ++k)
        for (int i = 0; i < m; ++i)
            if ((k >> i) & 1) out.set(i, k, true);
    return out;
}

BinMatrix companion_fixed_point_free(int m) {
    if (m < 2) throw std::invalid_argument("companion_fixed_point_free needs m >= 2");
    // Companion of x^m + x + 1: ones on the subdiagonal, last column holds the
    // low coefficients (c_0 = c_1 = 1).
    BinMatrix a(m, m);
    for (int i = 1; i < m; ++i) a.set(i, i - 1, true);
    a.set(0, m - 1, true);
    a.set(1, m - 1, true);
    if (!is_invertible(a) || !is_fixed_point_free(a))
        throw std::runtime_error("companion matrix failed its own predicates");
    return a;
}

int rank(const BinMatrix& m) {
    std::vector<std::vector<std::uint64_t>> rows = m.data;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        const std::size_t w = static_cast<std::size_t>(c) >> 6;
        const std::uint64_t bit = std::uint64_t{1} << (c & 63);
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (rows[i][w] & bit) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || !(rows[i][w] & bit)) continue;
            for (std::size_t j = w; j < rows[i].size(); ++j) rows[i][j] ^= rows[r][j];
        }
        ++r;
    }
    return r;
}

bool is_invertible(const BinMatrix& a) {
    if (a.rows != a.cols) throw std::invalid_argument("is_invertible needs a square matrix");
    return rank(a) == a.rows;
}

BinMatrix mat_add(const BinMatrix& a, const BinMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw std::invalid_argument("mat_add shape mismatch");
    BinMatrix out = a;
    for (int i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < out.data[i].size(); ++j) out.data[i][j] ^= b.data[i][j];
    return out;
}

bool is_fixed_point_free(const BinMatrix& a) {
    if (a.rows != a.cols) throw std::invalid_argument("is_fixed_point_free needs a square matrix");
    return is_invertible(a) && is_invertible(mat_add(a, identity_matrix(a.rows)));
}

BinMatrix matmul(const BinMatrix& a, const BinMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matmul shape mismatch");
    BinMatrix out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k)
            if (a.get(i, k))
                for (std::size_t j = 0; j < out.data[i].size(); ++j)
                    out.data[i][j] ^= b.data[k][j];
    return out;
}

void RowSpace::reduce(std::vector<std::uint64_t>& v, int& lead) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const int p = pivot_[i];
        if ((v[p >> 6] >> (p & 63)) & 1u)
            for (std::size_t j = 0; j < v.size(); ++j) v[j] ^= basis_[i][j];
    }
    lead = -1;
    for (int c = 0; c < cols_; ++c)
        if ((v[c >> 6] >> (c & 63)) & 1u) { lead = c; break; }
}

bool RowSpace::add(std::vector<std::uint64_t> v) {
    v.resize(words_for(cols_), 0);
    int lead;
    reduce(v, lead);
    if (lead < 0) return false;
    basis_.push_back(std::move(v));
    pivot_.push_back(lead);
    return true;
}

bool RowSpace::contains(std::vector<std::uint64_t> v) const {
    v.resize(words_for(cols_), 0);
    int lead;
    reduce(v, lead);
    return lead < 0;
}

bool in_row_space(const std::vector<std::uint64_t>& v, const BinMatrix& m) {
    RowSpace space(m.cols);
    for (int i = 0; i < m.rows; ++i) space.add(m.data[i]);
    return space.contains(v);
}

} // namespace stab3
