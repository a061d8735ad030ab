#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stab3/block.hpp"
#include "stab3/bounds.hpp"
#include "stab3/build.hpp"
#include "stab3/catalog.hpp"
#include "stab3/io.hpp"
#include "stab3/verify.hpp"

namespace py = pybind11;

namespace {

using namespace stab3;

std::vector<std::string> rows_of(const GeneratorBlock& b) {
    std::vector<std::string> out;
    out.reserve(b.gens.size());
    for (const Pauli& g : b.gens) out.push_back(format_pauli(g));
    return out;
}

py::dict code_dict(const StabilizerCode& c) {
    py::dict d;
    d["n"] = c.n;
    d["k"] = c.k;
    d["s"] = c.s;
    d["pure"] = c.pure;
    d["provenance"] = c.provenance;
    d["rows"] = rows_of(c.block);
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "optimal [[n, n-s, 3]] stabilizer codes: construction, "
              "verification, weight identities, LP certificates";

    m.def(
        "build",
        [](std::int64_t n) { return code_dict(stab3::build(n)); },
        py::arg("n"),
        "Best known distance-3 code on n >= 5 qubits, exhaustively verified "
        "up to the cap; dict with n, k, s, pure, provenance, rows.");

    m.def(
        "verify",
        [](const std::vector<std::string>& rows, bool degenerate) {
            const GeneratorBlock b = make_block(rows);
            const VerificationReport r =
                verify_rows(b, degenerate ? DetectMode::degenerate : DetectMode::pure);
            py::dict d;
            d["green"] = r.green();
            d["n"] = r.n;
            d["s"] = r.s;
            d["k"] = r.k;
            d["s_best"] = r.s_best;
            d["optimal"] = r.s_matches;
            d["report"] = r.render();
            return d;
        },
        py::arg("rows"), py::arg("degenerate") = false,
        "Check commutation, independence and weight-1/2 detection for IXYZ rows.");

    m.def(
        "named_block",
        [](const std::string& name) { return rows_of(stab3::named_block(name)); },
        py::arg("name"), "Rows of a catalog block, e.g. \"[4,4]_1\" or \"[18,7]_2\".");

    m.def("hamming_s", &stab3::hamming_s, py::arg("n"),
          "Least s with 2^s >= 3n + 1.");

    m.def(
        "classify",
        [](std::int64_t n) {
            const LengthClass c = classify_length(n);
            py::dict d;
            d["n"] = c.n;
            d["m"] = c.m;
            d["family"] = family_name(c.family);
            d["s_best"] = c.s_best;
            d["optimal_proven"] = c.optimal_proven;
            return d;
        },
        py::arg("n"), "Length family, best s, and whether optimality is settled.");

    m.def(
        "weight_distribution",
        [](const std::vector<std::string>& rows) {
            return weight_distribution(make_block(rows)).a;
        },
        py::arg("rows"), "A_0..A_n over all generator products (s <= 24).");

    m.def(
        "certificate",
        [](std::int64_t n) {
            const CertificateReport r = lp_certificate(n);
            py::dict d;
            d["n"] = r.n;
            d["m"] = r.m;
            d["family"] = cert_family_name(r.family);
            d["bound"] = r.strengthened_bound;
            d["all_pass"] = r.all_pass();
            py::list checks;
            for (const CertCheck& c : r.checks) {
                py::dict e;
                e["name"] = c.name;
                e["ok"] = c.ok;
                e["lhs"] = c.lhs;
                e["rhs"] = c.rhs;
                checks.append(e);
            }
            d["checks"] = checks;
            return d;
        },
        py::arg("n"), "Exact strengthened-LP certificate evaluation.");

    m.def(
        "paste",
        [](const std::vector<std::string>& left, const std::vector<std::string>& right) {
            const AlignedPaste p = paste_aligned(make_block(left), make_block(right));
            py::dict d;
            d["rows"] = rows_of(p.block);
            d["e"] = p.e;
            return d;
        },
        py::arg("left"), py::arg("right"),
        "Aligned side-by-side paste; returns the combined rows and achieved e.");

    m.def(
        "weight3_witness",
        [](const std::vector<std::string>& rows) -> std::optional<std::string> {
            const auto w = find_weight3_logical(make_block(rows));
            if (!w) return std::nullopt;
            return format_pauli(*w);
        },
        py::arg("rows"),
        "A weight-3 undetected non-stabilizer error, or None if the distance "
        "exceeds 3.");
}
