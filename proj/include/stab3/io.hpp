#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stab3/block.hpp"

namespace stab3 {

enum class CodeFormat { pauli, check, records };

// Row format: '#' comment lines, then one generator per line over {I,X,Y,Z}.
GeneratorBlock read_rows(std::istream& in);
GeneratorBlock read_rows_file(const std::string& path);

// All formats start with "# [[n,k,3]] s=<s> pure=<bool> via <provenance>".
// pauli: letter rows. check: "xbits|zbits" 0/1 rows. records: key=value lines
// (n, k, s, pure, provenance) followed by the letter rows.
void write_code(std::ostream& out, const StabilizerCode& code, CodeFormat fmt);
std::string code_to_string(const StabilizerCode& code, CodeFormat fmt);

} // namespace stab3
