#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stab3 {

// Phase-free n-qubit Pauli operator stored as a symplectic F_2 pair.
// Bit q of x/z is qubit q; bit 0 is the leftmost letter of the text form.
// Letter at qubit q: (x,z) = (0,0) I, (1,0) X, (0,1) Z, (1,1) Y.
struct Pauli {
    int n = 0;
    std::vector<std::uint64_t> x, z;

    Pauli() = default;
    explicit Pauli(int n_qubits);

    bool x_bit(int q) const { return (x[q >> 6] >> (q & 63)) & 1u; }
    bool z_bit(int q) const { return (z[q >> 6] >> (q & 63)) & 1u; }
    void set_x(int q, bool v);
    void set_z(int q, bool v);
    char letter(int q) const;
    void set_letter(int q, char c);

    bool operator==(const Pauli&) const = default;
};

inline std::size_t words_for(int nbits) { return (static_cast<std::size_t>(nbits) + 63) / 64; }

Pauli parse_pauli(const std::string& text);
std::string format_pauli(const Pauli& p);

Pauli identity(int n);
Pauli all_x(int n);
Pauli all_y(int n);
Pauli all_z(int n);

// Symplectic product is popcount(a.x & b.z) + popcount(a.z & b.x) mod 2;
// the operators commute iff it vanishes.
bool commutes(const Pauli& a, const Pauli& b);
bool anticommutes(const Pauli& a, const Pauli& b);

// Phase-free product: componentwise XOR of the masks.
Pauli multiply(const Pauli& a, const Pauli& b);

// Support size (number of non-identity letters).
int weight(const Pauli& p);

// a on qubits 0..a.n-1, b on the rest.
Pauli concat(const Pauli& a, const Pauli& b);

// Replace each letter L by L^{\otimes b} on a block of b qubits (I stays I).
Pauli block_lift(const Pauli& p, int b);

} // namespace stab3
