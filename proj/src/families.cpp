#include "stab3/families.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "stab3/bounds.hpp"
#include "stab3/catalog.hpp"
#include "stab3/gf2.hpp"

namespace stab3 {

namespace {

// Check rows from a column map: qubit k carries x-part xcol(k) and z-part
// A*xcol(k), one generator per matrix row.
std::vector<Pauli> check_rows(int m, const BinMatrix& xcols, const BinMatrix& zcols) {
    const int n = xcols.cols;
    std::vector<Pauli> rows;
    for (int i = 0; i < m; ++i) {
        Pauli p(n);
        for (int k = 0; k < n; ++k) {
            p.set_x(k, xcols.get(i, k));
            p.set_z(k, zcols.get(i, k));
        }
        rows.push_back(std::move(p));
    }
    return rows;
}

BinMatrix from_array(const int a[5][5]) {
    BinMatrix m(5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) m.set(i, j, a[i][j] != 0);
    return m;
}

} // namespace

StabilizerCode gottesman_code(int m) {
    if (m < 3)
        throw std::invalid_argument(
            "gottesman_code needs m >= 3: for m = 2 the two check rows anticommute");
    if (m > 20) throw std::invalid_argument("gottesman_code m too large");
    const int n = 1 << m;
    const BinMatrix h = hamming_matrix(m);
    const BinMatrix ah = matmul(companion_fixed_point_free(m), h);
    std::vector<Pauli> rows = {all_x(n), all_z(n)};
    for (Pauli& p : check_rows(m, h, ah)) rows.push_back(std::move(p));
    return make_code(make_block(std::move(rows)), true, "[2^" + std::to_string(m) + "]");
}

StabilizerCode gottesman_listing_32() {
    // Columns are R*c_k with the bits of k read most-significant-first; the
    // published 40-column listing fixes this exact presentation.
    const BinMatrix r = from_array(kR5), a5 = from_array(kA5);
    BinMatrix hmsb(5, 32);
    for (int k = 0; k < 32; ++k)
        for (int i = 0; i < 5; ++i)
            if ((k >> (4 - i)) & 1) hmsb.set(i, k, true);
    const BinMatrix rh = matmul(r, hmsb);
    const BinMatrix arh = matmul(a5, rh);
    std::vector<Pauli> rows = {all_x(32), all_z(32)};
    for (Pauli& p : check_rows(5, rh, arh)) rows.push_back(std::move(p));
    return make_code(make_block(std::move(rows)), true, "[2^5]");
}

StabilizerCode eight_block_code(int m) {
    if (m < 3) throw std::invalid_argument("eight_block_code needs m >= 3");
    if (m > 4096) throw std::invalid_argument("eight_block_code m too large");
    const GeneratorBlock base = make_block(detail::rows_eq4());
    std::vector<Pauli> rows;
    for (const Pauli& r : base.gens) {
        Pauli acc = r;
        for (int t = 1; t < m; ++t) acc = concat(acc, r);
        rows.push_back(std::move(acc));
    }
    std::vector<Pauli> tails;
    if (m == 3 || m == 4) {
        for (const std::string& t : detail::tail_letters_8m(m)) tails.push_back(parse_pauli(t));
    } else {
        const int lm = std::bit_width(static_cast<unsigned>(m - 1)); // ceil(log2 m)
        const StabilizerCode g = gottesman_code(lm);
        std::vector<Pauli> check(g.block.gens.begin() + 2, g.block.gens.end());
        std::vector<int> drop;
        for (int q = m; q < (1 << lm); ++q) drop.push_back(q);
        GeneratorBlock punct = puncture(make_block(std::move(check)), drop);
        tails = punct.gens;
    }
    for (const Pauli& t : tails) rows.push_back(block_lift(t, 8));
    return make_code(make_block(std::move(rows)), true, "[8*" + std::to_string(m) + "]");
}

StabilizerCode perfect_code(int m) {
    if (m < 2) throw std::invalid_argument("perfect_code needs m >= 2");
    if (m > 8) throw std::invalid_argument("perfect_code m too large");
    StabilizerCode five = small_code(5);
    if (m == 2) return five;
    GeneratorBlock cur = five.block;
    std::string prov = "[5]";
    for (int l = 2; l < m; ++l) {
        cur = paste(gottesman_code(2 * l).block, cur);
        prov = "[2^" + std::to_string(2 * l) + "]>" + prov;
    }
    return make_code(std::move(cur), true, std::move(prov));
}

StabilizerCode eight_fm_code(int m) {
    if (m < 1) throw std::invalid_argument("eight_fm_code needs m >= 1");
    if (m > 7) throw std::invalid_argument("eight_fm_code m too large");
    GeneratorBlock cur = gottesman_code(3).block;
    std::string prov = "[2^3]";
    for (int l = 2; l <= m; ++l) {
        cur = paste(gottesman_code(2 * l + 1).block, cur);
        prov = "[2^" + std::to_string(2 * l + 1) + "]>" + prov;
    }
    return make_code(std::move(cur), true, std::move(prov));
}

} // namespace stab3
