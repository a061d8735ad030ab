#include "stab3/block.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "stab3/gf2.hpp"

namespace stab3 {

GeneratorBlock make_block(std::vector<Pauli> rows) {
    if (rows.empty()) throw std::invalid_argument("empty generator list");
    GeneratorBlock b;
    b.n = rows[0].n;
    for (const Pauli& p : rows)
        if (p.n != b.n) throw std::invalid_argument("generator length mismatch");
    b.gens = std::move(rows);
    return b;
}

GeneratorBlock make_block(const std::vector<std::string>& rows) {
    std::vector<Pauli> ps;
    ps.reserve(rows.size());
    for (const std::string& r : rows) ps.push_back(parse_pauli(r));
    return make_block(std::move(ps));
}

GeneratorBlock make_block(std::initializer_list<const char*> rows) {
    return make_block(std::vector<std::string>(rows.begin(), rows.end()));
}

std::vector<std::pair<int, int>> noncommuting_pairs(const GeneratorBlock& b) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < b.s(); ++i)
        for (int j = i + 1; j < b.s(); ++j)
            if (anticommutes(b.gens[i], b.gens[j])) out.emplace_back(i, j);
    return out;
}

static BinMatrix commutation_form(const GeneratorBlock& b) {
    BinMatrix m(b.s(), b.s());
    for (int i = 0; i < b.s(); ++i)
        for (int j = i + 1; j < b.s(); ++j)
            if (anticommutes(b.gens[i], b.gens[j])) {
                m.set(i, j, true);
                m.set(j, i, true);
            }
    return m;
}

int block_e(const GeneratorBlock& b) {
    return rank(commutation_form(b)) / 2; // alternating form rank is even
}

bool leading_xz(const GeneratorBlock& b) {
    return b.s() >= 2 && b.gens[0] == all_x(b.n) && b.gens[1] == all_z(b.n);
}

std::vector<std::uint64_t> symplectic_row(const Pauli& p) {
    std::vector<std::uint64_t> v(words_for(2 * p.n), 0);
    for (std::size_t i = 0; i < p.x.size(); ++i) v[i] = p.x[i];
    const int off = p.n, word = off >> 6, shift = off & 63;
    for (std::size_t i = 0; i < p.z.size(); ++i) {
        v[word + i] |= p.z[i] << shift;
        if (shift && word + i + 1 < v.size()) v[word + i + 1] |= p.z[i] >> (64 - shift);
    }
    return v;
}

int symplectic_rank(const GeneratorBlock& b) {
    RowSpace space(2 * b.n);
    for (const Pauli& p : b.gens) space.add(symplectic_row(p));
    return space.rank();
}

GeneratorBlock paste(const GeneratorBlock& left, const GeneratorBlock& right) {
    if (!leading_xz(left))
        throw std::invalid_argument("paste: left block must start with the all-X and all-Z rows");
    const int s = std::max(left.s(), right.s() + 2);
    std::vector<Pauli> rows;
    rows.reserve(static_cast<std::size_t>(s));
    rows.push_back(concat(all_x(left.n), identity(right.n)));
    rows.push_back(concat(all_z(left.n), identity(right.n)));
    for (int i = 2; i < s; ++i) {
        const Pauli& l = (i < left.s()) ? left.gens[i] : identity(left.n);
        const Pauli& r = (i - 2 < right.s()) ? right.gens[i - 2] : identity(right.n);
        rows.push_back(concat(l, r));
    }
    GeneratorBlock out = make_block(std::move(rows));
    const int eL = block_e(left), eR = block_e(right), e = block_e(out);
    if (e < std::abs(eL - eR) || e > eL + eR)
        throw std::logic_error("paste: e bound violated");
    return out;
}

GeneratorBlock normalize_pairs(const GeneratorBlock& b, int fixed_prefix) {
    std::vector<Pauli> rows = b.gens;
    if (fixed_prefix == 2 && b.s() >= 2 && anticommutes(rows[0], rows[1])) {
        // Clear the prefix pair's couplings so later recombination never
        // needs to touch rows 0 and 1.
        for (std::size_t j = 2; j < rows.size(); ++j) {
            if (anticommutes(rows[0], rows[j])) rows[j] = multiply(rows[j], rows[1]);
            if (anticommutes(rows[1], rows[j])) rows[j] = multiply(rows[j], rows[0]);
        }
    }
    std::vector<Pauli> prefix(rows.begin(), rows.begin() + fixed_prefix);
    std::vector<Pauli> pool(rows.begin() + fixed_prefix, rows.end());
    std::vector<Pauli> pairs, radical;
    while (!pool.empty()) {
        Pauli a = pool.front();
        pool.erase(pool.begin());
        int pi = -1;
        for (std::size_t k = 0; k < pool.size(); ++k)
            if (anticommutes(a, pool[k])) { pi = static_cast<int>(k); break; }
        if (pi < 0) {
            radical.push_back(a);
            continue;
        }
        Pauli bb = pool[static_cast<std::size_t>(pi)];
        pool.erase(pool.begin() + pi);
        for (Pauli& c : pool) {
            const bool ba = anticommutes(a, c), bbit = anticommutes(bb, c);
            if (ba) c = multiply(c, bb);
            if (bbit) c = multiply(c, a);
        }
        pairs.push_back(a);
        pairs.push_back(bb);
    }
    std::vector<Pauli> out = std::move(prefix);
    out.insert(out.end(), pairs.begin(), pairs.end());
    out.insert(out.end(), radical.begin(), radical.end());
    return make_block(std::move(out));
}

AlignedPaste paste_aligned(const GeneratorBlock& left, const GeneratorBlock& right) {
    if (!leading_xz(left))
        throw std::invalid_argument("paste_aligned: left block must start with the all-X and all-Z rows");
    const GeneratorBlock ln = normalize_pairs(left, 2);
    const GeneratorBlock rn = normalize_pairs(right, 0);
    std::vector<int> perm(static_cast<std::size_t>(rn.s()));
    std::iota(perm.begin(), perm.end(), 0);
    AlignedPaste best;
    bool have = false;
    do {
        GeneratorBlock cand_right;
        cand_right.n = rn.n;
        for (int i : perm) cand_right.gens.push_back(rn.gens[static_cast<std::size_t>(i)]);
        GeneratorBlock cand = paste(ln, cand_right);
        const int e = static_cast<int>(noncommuting_pairs(cand).size());
        if (!have || e < best.e) {
            best.block = std::move(cand);
            best.e = e;
            have = true;
        }
        if (best.e == 0) break;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

GeneratorBlock puncture(const GeneratorBlock& b, const std::vector<int>& coords) {
    std::vector<bool> drop(static_cast<std::size_t>(b.n), false);
    for (int c : coords) {
        if (c < 0 || c >= b.n)
            throw std::invalid_argument("puncture: coordinate " + std::to_string(c) + " out of range");
        if (drop[static_cast<std::size_t>(c)])
            throw std::invalid_argument("puncture: duplicate coordinate " + std::to_string(c));
        drop[static_cast<std::size_t>(c)] = true;
    }
    std::vector<int> keep;
    for (int q = 0; q < b.n; ++q)
        if (!drop[static_cast<std::size_t>(q)]) keep.push_back(q);
    std::vector<Pauli> rows;
    rows.reserve(b.gens.size());
    for (const Pauli& p : b.gens) {
        Pauli np(static_cast<int>(keep.size()));
        for (std::size_t i = 0; i < keep.size(); ++i) {
            np.set_x(static_cast<int>(i), p.x_bit(keep[i]));
            np.set_z(static_cast<int>(i), p.z_bit(keep[i]));
        }
        rows.push_back(std::move(np));
    }
    return make_block(std::move(rows));
}

StabilizerCode make_code(GeneratorBlock b, bool pure, std::string provenance) {
    const auto bad = noncommuting_pairs(b);
    if (!bad.empty())
        throw std::runtime_error("make_code: generators do not commute (pair " +
                                 std::to_string(bad[0].first) + "," + std::to_string(bad[0].second) + ")");
    if (symplectic_rank(b) != b.s())
        throw std::runtime_error("make_code: dependent generators");
    StabilizerCode code;
    code.n = b.n;
    code.s = b.s();
    code.k = code.n - code.s;
    code.pure = pure;
    code.provenance = std::move(provenance);
    code.block = std::move(b);
    return code;
}

} // namespace stab3
