#include "stab3/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "stab3/bounds.hpp"
#include "stab3/gf2.hpp"

namespace stab3 {

namespace {

constexpr char kLetters[4] = "XYZ";

// Per-qubit anticommutation masks over the generators: bit i of x_synd[q] is
// set iff an X error on qubit q anticommutes with generator i (i.e. the
// generator has Z or Y there); z_synd likewise for Z errors. A Y error's
// syndrome is the XOR of the two.
struct SyndromeTable {
    std::vector<std::uint64_t> sx, sz;

    explicit SyndromeTable(const GeneratorBlock& b)
        : sx(static_cast<std::size_t>(b.n), 0), sz(static_cast<std::size_t>(b.n), 0) {
        if (b.s() > 64) throw std::invalid_argument("syndrome masks support at most 64 generators");
        for (int i = 0; i < b.s(); ++i) {
            const Pauli& g = b.gens[static_cast<std::size_t>(i)];
            for (int q = 0; q < b.n; ++q) {
                if (g.z_bit(q)) sx[static_cast<std::size_t>(q)] |= std::uint64_t{1} << i;
                if (g.x_bit(q)) sz[static_cast<std::size_t>(q)] |= std::uint64_t{1} << i;
            }
        }
    }

    std::uint64_t operator()(int q, int l) const {
        const auto u = static_cast<std::size_t>(q);
        return l == 0 ? sx[u] : l == 2 ? sz[u] : (sx[u] ^ sz[u]);
    }
};

Pauli single(int n, int q, int l) {
    Pauli p(n);
    p.set_letter(q, kLetters[l]);
    return p;
}

RowSpace generator_space(const GeneratorBlock& b) {
    RowSpace rs(2 * b.n);
    for (const Pauli& g : b.gens) rs.add(symplectic_row(g));
    return rs;
}

} // namespace

std::string Counterexample::text() const {
    std::ostringstream os;
    if (w == 1) {
        os << "weight-1 qubit " << q1 << " letter " << l1;
    } else if (w == 2) {
        os << "weight-2 qubits " << q1 << "," << q2 << " letters " << l1 << l2;
    } else {
        os << "weight-3 qubits " << q1 << "," << q2 << "," << q3 << " letters " << l1 << l2 << l3;
    }
    return os.str();
}

Pauli Counterexample::as_pauli(int n) const {
    Pauli p(n);
    if (w >= 1) p.set_letter(q1, l1);
    if (w >= 2) p.set_letter(q2, l2);
    if (w >= 3) p.set_letter(q3, l3);
    return p;
}

std::vector<std::pair<int, int>> verify_commuting(const GeneratorBlock& b) {
    return noncommuting_pairs(b);
}

bool verify_independent(const GeneratorBlock& b) {
    return symplectic_rank(b) == b.s();
}

std::optional<Counterexample> detects_all_small_errors(const GeneratorBlock& b, DetectMode mode) {
    const int n = b.n;
    const SyndromeTable synd(b);
    const bool deg = mode == DetectMode::degenerate;
    std::optional<RowSpace> rs;
    if (deg) rs.emplace(generator_space(b));

    for (int q = 0; q < n; ++q)
        for (int l = 0; l < 3; ++l)
            if (synd(q, l) == 0) {
                if (deg && rs->contains(symplectic_row(single(n, q, l)))) continue;
                return Counterexample{1, q, 0, 0, kLetters[l], 'I', 'I'};
            }

    // Weight-2 errors a!=b escape iff synd(a,la) == synd(b,lb); find
    // collisions by sorting, then rescan in documented order only on failure.
    std::vector<std::tuple<std::uint64_t, int, int>> entries;
    entries.reserve(static_cast<std::size_t>(3) * static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q)
        for (int l = 0; l < 3; ++l)
            entries.emplace_back(synd(q, l), q, l);
    std::sort(entries.begin(), entries.end());

    bool failing = false;
    for (std::size_t i = 0; i + 1 < entries.size() && !failing; ) {
        std::size_t j = i + 1;
        while (j < entries.size() && std::get<0>(entries[j]) == std::get<0>(entries[i])) ++j;
        for (std::size_t a = i; a < j && !failing; ++a)
            for (std::size_t c = a + 1; c < j && !failing; ++c) {
                if (std::get<1>(entries[a]) == std::get<1>(entries[c])) continue;
                if (deg) {
                    const Pauli err = multiply(
                        single(n, std::get<1>(entries[a]), std::get<2>(entries[a])),
                        single(n, std::get<1>(entries[c]), std::get<2>(entries[c])));
                    if (rs->contains(symplectic_row(err))) continue;
                }
                failing = true;
            }
        i = j;
    }
    if (!failing) return std::nullopt;

    for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c)
            for (int la = 0; la < 3; ++la)
                for (int lc = 0; lc < 3; ++lc) {
                    if (synd(a, la) != synd(c, lc)) continue;
                    if (deg) {
                        const Pauli err = multiply(single(n, a, la), single(n, c, lc));
                        if (rs->contains(symplectic_row(err))) continue;
                    }
                    return Counterexample{2, a, c, 0, kLetters[la], kLetters[lc], 'I'};
                }
    throw std::logic_error("collision found by sort but not by rescan");
}

std::optional<Counterexample> find_weight3_zero_syndrome(const GeneratorBlock& b) {
    const int n = b.n;
    const SyndromeTable synd(b);
    for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c)
            for (int d = c + 1; d < n; ++d)
                for (int la = 0; la < 3; ++la)
                    for (int lc = 0; lc < 3; ++lc)
                        for (int ld = 0; ld < 3; ++ld)
                            if ((synd(a, la) ^ synd(c, lc) ^ synd(d, ld)) == 0)
                                return Counterexample{3, a, c, d, kLetters[la], kLetters[lc], kLetters[ld]};
    return std::nullopt;
}

std::optional<Pauli> find_weight3_logical(const GeneratorBlock& b) {
    const int n = b.n;
    const SyndromeTable synd(b);
    const RowSpace rs = generator_space(b);
    for (int a = 0; a < n; ++a)
        for (int c = a + 1; c < n; ++c)
            for (int d = c + 1; d < n; ++d)
                for (int la = 0; la < 3; ++la)
                    for (int lc = 0; lc < 3; ++lc)
                        for (int ld = 0; ld < 3; ++ld) {
                            if ((synd(a, la) ^ synd(c, lc) ^ synd(d, ld)) != 0) continue;
                            Pauli err = multiply(multiply(single(n, a, la), single(n, c, lc)),
                                                 single(n, d, ld));
                            if (!rs.contains(symplectic_row(err))) return err;
                        }
    return std::nullopt;
}

VerificationReport verify_rows(const GeneratorBlock& b, DetectMode mode) {
    VerificationReport r;
    r.n = b.n;
    r.s = b.s();
    r.k = b.n - b.s();
    r.bad_pairs = verify_commuting(b);
    r.commuting = r.bad_pairs.empty();
    r.independent = verify_independent(b);
    if (b.s() <= 64) {
        r.counterexample = detects_all_small_errors(b, mode);
        r.detection = !r.counterexample.has_value();
    }
    if (b.n >= 5) {
        r.s_best = classify_length(b.n).s_best;
        r.s_matches = r.s == r.s_best;
    } else {
        r.s_best = 0;
        r.s_matches = true;
    }
    return r;
}

VerificationReport verify_code(const StabilizerCode& code) {
    return verify_rows(code.block, code.pure ? DetectMode::pure : DetectMode::degenerate);
}

std::string VerificationReport::render() const {
    std::ostringstream os;
    os << "n=" << n << "\n";
    os << "s=" << s << "\n";
    os << "k=" << k << "\n";
    os << "commuting=" << (commuting ? "ok" : "fail") << "\n";
    if (!commuting)
        os << "bad_pair=" << bad_pairs.front().first << "," << bad_pairs.front().second << "\n";
    os << "independent=" << (independent ? "ok" : "fail") << "\n";
    os << "detection=" << (detection ? "ok" : "fail") << "\n";
    if (counterexample) os << "first_counterexample=" << counterexample->text() << "\n";
    if (n >= 5) {
        os << "s_best=" << s_best << "\n";
        os << "optimal=" << (s_matches ? "yes" : "no") << "\n";
    }
    return os.str();
}

} // namespace stab3
