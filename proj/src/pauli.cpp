#include "stab3/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace stab3 {

Pauli::Pauli(int n_qubits) : n(n_qubits), x(words_for(n_qubits), 0), z(words_for(n_qubits), 0) {
    if (n_qubits < 0) throw std::invalid_argument("negative qubit count");
}

void Pauli::set_x(int q, bool v) {
    const std::uint64_t m = std::uint64_t{1} << (q & 63);
    if (v) x[q >> 6] |= m; else x[q >> 6] &= ~m;
}

void Pauli::set_z(int q, bool v) {
    const std::uint64_t m = std::uint64_t{1} << (q & 63);
    if (v) z[q >> 6] |= m; else z[q >> 6] &= ~m;
}

char Pauli::letter(int q) const {
    const int code = int(x_bit(q)) | (int(z_bit(q)) << 1);
    return "IXZY"[code];
}

void Pauli::set_letter(int q, char c) {
    switch (c) {
        case 'I': set_x(q, false); set_z(q, false); break;
        case 'X': set_x(q, true);  set_z(q, false); break;
        case 'Z': set_x(q, false); set_z(q, true);  break;
        case 'Y': set_x(q, true);  set_z(q, true);  break;
        default: throw std::invalid_argument(std::string("bad Pauli letter '") + c + "'");
    }
}

Pauli parse_pauli(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty Pauli string");
    Pauli p(static_cast<int>(text.size()));
    for (int q = 0; q < p.n; ++q) {
        const char c = text[static_cast<std::size_t>(q)];
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
            throw std::invalid_argument("bad character '" + std::string(1, c) +
                                        "' at position " + std::to_string(q));
        p.set_letter(q, c);
    }
    return p;
}

std::string format_pauli(const Pauli& p) {
    std::string out(static_cast<std::size_t>(p.n), 'I');
    for (int q = 0; q < p.n; ++q) out[static_cast<std::size_t>(q)] = p.letter(q);
    return out;
}

Pauli identity(int n) { return Pauli(n); }

static void fill_mask(std::vector<std::uint64_t>& w, int n) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = ~std::uint64_t{0};
    if (n & 63) w.back() = (std::uint64_t{1} << (n & 63)) - 1;
    if (n == 0 && !w.empty()) w.back() = 0;
}

Pauli all_x(int n) { Pauli p(n); fill_mask(p.x, n); return p; }
Pauli all_z(int n) { Pauli p(n); fill_mask(p.z, n); return p; }
Pauli all_y(int n) { Pauli p(n); fill_mask(p.x, n); fill_mask(p.z, n); return p; }

static void check_same_n(const Pauli& a, const Pauli& b) {
    if (a.n != b.n)
        throw std::invalid_argument("Pauli length mismatch: " + std::to_string(a.n) +
                                    " vs " + std::to_string(b.n));
}

bool anticommutes(const Pauli& a, const Pauli& b) {
    check_same_n(a, b);
    int acc = 0;
    for (std::size_t i = 0; i < a.x.size(); ++i)
        acc ^= std::popcount(a.x[i] & b.z[i]) ^ std::popcount(a.z[i] & b.x[i]);
    return acc & 1;
}

bool commutes(const Pauli& a, const Pauli& b) { return !anticommutes(a, b); }

Pauli multiply(const Pauli& a, const Pauli& b) {
    check_same_n(a, b);
    Pauli out = a;
    for (std::size_t i = 0; i < out.x.size(); ++i) {
        out.x[i] ^= b.x[i];
        out.z[i] ^= b.z[i];
    }
    return out;
}

int weight(const Pauli& p) {
    int w = 0;
    for (std::size_t i = 0; i < p.x.size(); ++i) w += std::popcount(p.x[i] | p.z[i]);
    return w;
}

Pauli concat(const Pauli& a, const Pauli& b) {
    Pauli out(a.n + b.n);
    out.x = a.x; out.x.resize(words_for(out.n), 0);
    out.z = a.z; out.z.resize(words_for(out.n), 0);
    const int off = a.n, word = off >> 6, shift = off & 63;
    for (std::size_t i = 0; i < b.x.size(); ++i) {
        out.x[word + i] |= b.x[i] << shift;
        out.z[word + i] |= b.z[i] << shift;
        if (shift && word + i + 1 < out.x.size()) {
            out.x[word + i + 1] |= b.x[i] >> (64 - shift);
            out.z[word + i + 1] |= b.z[i] >> (64 - shift);
        }
    }
    return out;
}

Pauli block_lift(const Pauli& p, int b) {
    if (b < 1) throw std::invalid_argument("block_lift factor must be >= 1");
    Pauli out(p.n * b);
    for (int q = 0; q < p.n; ++q) {
        const bool xb = p.x_bit(q), zb = p.z_bit(q);
        if (!xb && !zb) continue;
        for (int t = 0; t < b; ++t) {
            out.set_x(q * b + t, xb);
            out.set_z(q * b + t, zb);
        }
    }
    return out;
}

} // namespace stab3
