#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stab3/block.hpp"

namespace stab3 {

enum class DetectMode { pure, degenerate };

// A weight-1..3 error that escapes detection, in the documented enumeration
// order: weight-1 by ascending qubit then letter X < Y < Z; weight-2 by
// ascending qubit pair then 3x3 letter pair (first qubit's letter major);
// weight-3 analogously. text() is the stable rendering used in reports.
struct Counterexample {
    int w = 0;                    // 1, 2 or 3
    int q1 = 0, q2 = 0, q3 = 0;   // only the first w are meaningful
    char l1 = 'I', l2 = 'I', l3 = 'I';
    std::string text() const;
    Pauli as_pauli(int n) const;
};

// Empty iff every generator pair commutes.
std::vector<std::pair<int, int>> verify_commuting(const GeneratorBlock& b);

// GF(2) independence of the s symplectic rows.
bool verify_independent(const GeneratorBlock& b);

// Pure mode: every weight-1/2 error anticommutes with some generator.
// Degenerate mode: undetected errors must lie in the generator row space.
std::optional<Counterexample> detects_all_small_errors(const GeneratorBlock& b, DetectMode mode);

// First weight-3 zero-syndrome error, if any (needed for distance-4 checks).
std::optional<Counterexample> find_weight3_zero_syndrome(const GeneratorBlock& b);

// First weight-3 error commuting with all generators but outside their row
// space — a witness that the distance is exactly 3.
std::optional<Pauli> find_weight3_logical(const GeneratorBlock& b);

struct VerificationReport {
    int n = 0, s = 0, k = 0;
    bool commuting = false;
    bool independent = false;
    bool detection = false;
    std::vector<std::pair<int, int>> bad_pairs;
    std::optional<Counterexample> counterexample;
    int s_best = 0;      // classification expectation for this length
    bool s_matches = false;
    bool green() const { return commuting && independent && detection; }
    std::string render() const; // multi-line key=value text
};

VerificationReport verify_code(const StabilizerCode& code);
VerificationReport verify_rows(const GeneratorBlock& b, DetectMode mode);

} // namespace stab3
