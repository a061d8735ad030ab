#include "stab3/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace stab3 {

namespace {

Pauli parse_check_row(const std::string& line) {
    const auto bar = line.find('|');
    const std::string xs = line.substr(0, bar), zs = line.substr(bar + 1);
    if (xs.size() != zs.size())
        throw std::invalid_argument("x and z bit strings differ in length");
    Pauli p(static_cast<int>(xs.size()));
    for (std::size_t q = 0; q < xs.size(); ++q) {
        if ((xs[q] != '0' && xs[q] != '1') || (zs[q] != '0' && zs[q] != '1'))
            throw std::invalid_argument("check rows must be 0/1 bits");
        p.set_x(static_cast<int>(q), xs[q] == '1');
        p.set_z(static_cast<int>(q), zs[q] == '1');
    }
    return p;
}

} // namespace

GeneratorBlock read_rows(std::istream& in) {
    std::vector<Pauli> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (line.find('=') != std::string::npos) continue; // records metadata
        try {
            rows.push_back(line.find('|') != std::string::npos ? parse_check_row(line)
                                                               : parse_pauli(line));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        }
        if (rows.size() > 1 && rows.back().n != rows.front().n)
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": row length differs from earlier rows");
    }
    if (rows.empty()) throw std::invalid_argument("no generator rows found");
    return make_block(std::move(rows));
}

GeneratorBlock read_rows_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return read_rows(in);
}

void write_code(std::ostream& out, const StabilizerCode& code, CodeFormat fmt) {
    out << "# [[" << code.n << "," << code.k << ",3]] s=" << code.s
        << " pure=" << (code.pure ? "true" : "false") << " via " << code.provenance << "\n";
    if (fmt == CodeFormat::records) {
        out << "n=" << code.n << "\n";
        out << "k=" << code.k << "\n";
        out << "s=" << code.s << "\n";
        out << "pure=" << (code.pure ? "true" : "false") << "\n";
        out << "provenance=" << code.provenance << "\n";
    }
    for (const Pauli& g : code.block.gens) {
        if (fmt == CodeFormat::check) {
            std::string xs, zs;
            for (int q = 0; q < g.n; ++q) {
                xs += g.x_bit(q) ? '1' : '0';
                zs += g.z_bit(q) ? '1' : '0';
            }
            out << xs << "|" << zs << "\n";
        } else {
            out << format_pauli(g) << "\n";
        }
    }
}

std::string code_to_string(const StabilizerCode& code, CodeFormat fmt) {
    std::ostringstream os;
    write_code(os, code, fmt);
    return os.str();
}

} // namespace stab3
