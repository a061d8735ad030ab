#include "stab3/catalog.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "stab3/families.hpp"

namespace stab3 {

namespace {

// Wide blocks: the constituents' five rows side by side, plus one lifted
// letter row per tail word (letter t[i] spans constituent i).
GeneratorBlock assemble(const std::vector<GeneratorBlock>& blocks,
                        const std::vector<std::string>& tails) {
    std::vector<Pauli> rows;
    for (int i = 0; i < 5; ++i) {
        Pauli r = blocks[0].gens[static_cast<std::size_t>(i)];
        for (std::size_t b = 1; b < blocks.size(); ++b)
            r = concat(r, blocks[b].gens[static_cast<std::size_t>(i)]);
        rows.push_back(std::move(r));
    }
    for (const std::string& t : tails) {
        Pauli r(0);
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            const int n = blocks[b].n;
            Pauli piece(n);
            switch (t[b]) {
                case 'I': piece = identity(n); break;
                case 'X': piece = all_x(n); break;
                case 'Y': piece = all_y(n); break;
                case 'Z': piece = all_z(n); break;
                default: throw std::logic_error("bad tail letter");
            }
            r = (b == 0) ? piece : concat(r, piece);
        }
        rows.push_back(std::move(r));
    }
    return make_block(std::move(rows));
}

std::pair<GeneratorBlock, GeneratorBlock> split_partition(int idx) {
    const auto& part = detail::rows_partitions()[static_cast<std::size_t>(idx)];
    std::vector<std::string> left, right;
    for (const std::string& r : part) {
        left.push_back(r.substr(0, 10));
        right.push_back(r.substr(10));
    }
    return {make_block(left), make_block(right)};
}

int expected_e(const std::string& name) {
    const auto us = name.rfind("_");
    if (us == std::string::npos || us + 1 >= name.size()) return 0;
    return std::stoi(name.substr(us + 1));
}

std::map<std::string, GeneratorBlock> build_catalog() {
    std::map<std::string, GeneratorBlock> cat;
    for (const char* nm : {"[1]_1", "[2,4]_2", "[3,4]_2", "[4,4]_1", "[3,5]_2", "[5,5]_2", "[7,5]_1"})
        cat.emplace(nm, make_block(detail::rows_named(nm)));
    auto p0 = split_partition(0);
    auto p1 = split_partition(1);
    auto p2 = split_partition(2);
    cat.emplace("[10]", p0.first);
    cat.emplace("[6,0,4]", p0.second);
    cat.emplace("[10,6]_1", p1.first);
    cat.emplace("[6,6]_1", p1.second);
    cat.emplace("[10,6]_2", p2.first);
    cat.emplace("[6,6]_2", p2.second);
    cat.emplace("[17]", make_block(detail::rows_17()));

    const GeneratorBlock b55 = cat.at("[5,5]_2"), b35 = cat.at("[3,5]_2"), b75 = cat.at("[7,5]_1");
    const std::vector<std::string> tails = {"IXYZ", "IYZX"};
    cat.emplace("[18,7]_1", assemble({b55, b55, b55, b35}, tails));
    cat.emplace("[18,7]_2", assemble({b75, b55, b35, b35}, tails));
    cat.emplace("[20,7]_2", assemble({b75, b55, b55, b35}, tails));
    cat.emplace("[26,7]_2", assemble({b75, b75, b75, b55}, tails));

    const StabilizerCode listing32 = gottesman_listing_32();
    cat.emplace("[28,7]_2", puncture(listing32.block, {5, 10, 19, 28}));
    cat.emplace("[28,7]_1", puncture(listing32.block, {0, 1, 2, 3}));

    for (const auto& [nm, blk] : cat) {
        if (block_e(blk) != expected_e(nm))
            throw std::logic_error("catalog entry " + nm + " has wrong e");
    }
    return cat;
}

const std::map<std::string, GeneratorBlock>& catalog() {
    static const std::map<std::string, GeneratorBlock> cat = build_catalog();
    return cat;
}

} // namespace

GeneratorBlock named_block(const std::string& name) {
    if (name == "[7,5]_2")
        throw std::invalid_argument(
            "[7,5]_2 is unrealizable: a 7-qubit 5-generator 2ed block containing the all-X "
            "and all-Z rows always has e <= 1 (all 3072 admissible column designs have "
            "commutation-form rank 2); the wide assemblies use [7,5]_1 instead");
    auto it = catalog().find(name);
    if (it == catalog().end()) throw std::invalid_argument("unknown block name " + name);
    return it->second;
}

std::vector<std::string> named_block_names() {
    std::vector<std::string> out;
    for (const auto& [nm, blk] : catalog()) out.push_back(nm);
    return out;
}

std::vector<std::string> small_chain(int n) {
    static const std::map<int, std::vector<std::string>> chains = {
        {5, {"[4,4]_1", "[1]_1"}},
        {7, {"[6,6]_1", "[1]_1"}},
        {8, {"[2^3]"}},
        {9, {"[6,6]_2", "[3,4]_2"}},
        {10, {"[10]"}},
        {11, {"[10,6]_1", "[1]_1"}},
        {12, {"[10,6]_2", "[2,4]_2"}},
        {13, {"[10,6]_2", "[3,4]_2"}},
        {14, {"[10,6]_1", "[4,4]_1"}},
        {15, {"[10]", "[5]"}},
        {16, {"[2^4]"}},
        {17, {"[17]"}},
        {18, {"[10]", "[2^3]"}},
        {19, {"[18,7]_1", "[1]_1"}},
        {20, {"[18,7]_2", "[2,4]_2"}},
        {21, {"[2^4]", "[5]"}},
        {22, {"[18,7]_1", "[4,4]_1"}},
        {23, {"[18,7]_2", "[5,5]_2"}},
        {24, {"[8*3]"}},
        {25, {"[18,7]_1", "[7,5]_1"}},
        {26, {"[18,7]_2", "[7,5]_1", "[1]_1"}},
        {27, {"[18,7]_1", "[2^3]", "[1]_1"}},
        {28, {"[20,7]_2", "[7,5]_1", "[1]_1"}},
        {29, {"[8*3]", "[5]"}},
        {30, {"[28,7]_2", "[2,4]_2"}},
        {31, {"[28,7]_2", "[3,4]_2"}},
        {32, {"[2^5]"}},
        {33, {"[28,7]_2", "[5,5]_2"}},
        {34, {"[26,7]_2", "[7,5]_1", "[1]_1"}},
        {35, {"[28,7]_1", "[7,5]_1"}},
        {36, {"[28,7]_2", "[7,5]_1", "[1]_1"}},
        {37, {"[2^5]", "[5]"}},
    };
    auto it = chains.find(n);
    if (it == chains.end()) return {};
    return it->second;
}

namespace {

GeneratorBlock resolve_factor(const std::string& nm) {
    if (nm.rfind("[2^", 0) == 0) return gottesman_code(std::stoi(nm.substr(3))).block;
    if (nm.rfind("[8*", 0) == 0) return eight_block_code(std::stoi(nm.substr(3))).block;
    // Transcribed blocks first: "[10]" and "[17]" live in the catalog, and
    // treating them as lengths would recurse right back into small_code.
    auto it = catalog().find(nm);
    if (it != catalog().end()) return it->second;
    if (nm.find(',') == std::string::npos && nm.find('_') == std::string::npos)
        return small_code(std::stoi(nm.substr(1))).block;
    return named_block(nm);
}

StabilizerCode build_small(int n) {
    if (n == 6) {
        // The one degenerate length: the 5-qubit code padded by a qubit fixed
        // with an explicit Z generator.
        std::vector<Pauli> rows;
        for (const std::string& r : detail::rows_eq3()) rows.push_back(concat(parse_pauli(r), identity(1)));
        Pauli z6(6);
        z6.set_letter(5, 'Z');
        rows.push_back(std::move(z6));
        return make_code(make_block(std::move(rows)), false, "[5]+Z6");
    }
    const std::vector<std::string> chain = small_chain(n);
    std::string prov;
    for (const std::string& c : chain) prov += (prov.empty() ? "" : ">") + c;
    GeneratorBlock cur = resolve_factor(chain.back());
    for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it) {
        AlignedPaste ap = paste_aligned(resolve_factor(*it), cur);
        cur = std::move(ap.block);
    }
    return make_code(std::move(cur), true, std::move(prov));
}

} // namespace

StabilizerCode small_code(int n) {
    if (n < 5 || n > 37) throw std::invalid_argument("small_code covers 5..37");
    static std::map<int, StabilizerCode> cache;
    // recursive: chains like "[2^4]>[5]" re-enter via resolve_factor("[5]")
    static std::recursive_mutex mu;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_small(n)).first;
    return it->second;
}

StabilizerCode table6_code() {
    std::vector<std::string> rows;
    for (const std::string& r : detail::rows_table6_40()) rows.push_back(r.substr(4));
    return make_code(make_block(rows), true, "table6");
}

} // namespace stab3
