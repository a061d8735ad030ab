#include "stab3/catalog.hpp"
#include "stab3/families.hpp"

#include <map>
#include <stdexcept>

// Verbatim transcriptions of the published generator tables. The same rows
// are checked in as plain-text fixtures under tests/fixtures; a test asserts
// the two copies agree and re-verifies every block from the fixture side.

namespace stab3::detail {

const std::vector<std::string>& rows_eq3() {
    static const std::vector<std::string> rows = {
        "XXXXI",
        "ZZZZI",
        "XYZIX",
        "YZXIZ",
    };
    return rows;
}

const std::vector<std::string>& rows_eq4() {
    static const std::vector<std::string> rows = {
        "XXXXXXXX",
        "ZZZZZZZZ",
        "IZIZYXYX",
        "IZXYIZXY",
        "IYZXZXIY",
    };
    return rows;
}

const std::vector<std::string>& rows_17() {
    static const std::vector<std::string> rows = {
        "IIXIZYZYXXZYIIXXY",
        "IIZXIZIYYYXXZYYXX",
        "IXIIXZXZYYYIYXZIY",
        "IZIZZIYXYXZYZXZZX",
        "XIIZYIIXZZYXYZIYX",
        "ZIIXYYYIYIYXIXXZY",
    };
    return rows;
}

const std::vector<std::string>& rows_named(const std::string& name) {
    static const std::map<std::string, std::vector<std::string>> blocks = {
        {"[1]_1", {"X", "Z"}},
        {"[2,4]_2", {"XI", "ZI", "IX", "IZ"}},
        {"[3,4]_2", {"XXX", "ZZZ", "XYZ", "YZX"}},
        {"[4,4]_1", {"XXXX", "ZZZZ", "XYZI", "YZXI"}},
        {"[3,5]_2", {"XXX", "ZZZ", "ZIZ", "ZXY", "YZX"}},
        {"[5,5]_2", {"XXXXX", "ZZZZZ", "YXYXI", "IZXYI", "ZXIYI"}},
        {"[7,5]_1", {"XXXXXXX", "ZZZZZZZ", "ZIZYXYX", "ZXYIZXY", "YZXZXIY"}},
    };
    auto it = blocks.find(name);
    if (it == blocks.end()) throw std::invalid_argument("no transcription for " + name);
    return it->second;
}

// Three 16-column partitions of the same length-16 code; splitting each after
// column 10 yields the [10,...] and [6,...] blocks.
const std::vector<std::vector<std::string>>& rows_partitions() {
    static const std::vector<std::vector<std::string>> parts = {
        {"XXXXXXXXXXXXXXXX", "ZZZZZZZZZZZZZZZZ",
         "IXYZIIIXYZYXZZYX", "IYZXIIIYZXZYXXZY",
         "IIIIXYZXZYXYZXYZ", "IIIIYZXYXZYZXYZX"},
        {"XXXXXXXXXXXXXXXX", "ZZZZZZZZZZZZZZZZ",
         "IXYZYXZZYXIIIXYZ", "IYZXZYXXZYIIIYZX",
         "IIIIXYZXYZXYZXZY", "IIIIYZXYZXYZXYXZ"},
        {"XXXXXXXXXXXXXXXX", "ZZZZZZZZZZZZZZZZ",
         "IXYZIIIXYZYZXZXY", "IYZXIIIYZXZXYXYZ",
         "IIIIXYZXYZXYZXYZ", "IIIIYZXYZXYZXYZX"},
    };
    return parts;
}

// The 32-qubit code as published: four removed-coordinate columns first, the
// 28 surviving columns, then 7+1 appended qubits.
const std::vector<std::string>& rows_table6_40() {
    static const std::vector<std::string> rows = {
        std::string(32, 'X') + std::string(8, 'I'),
        std::string(32, 'Z') + std::string(8, 'I'),
        "ZIXY" "IZIZIIZIZZIZIZYXYYXYXYXYXXYX" "XXXXXXX" "I",
        "YZYZ" "IYZXIZXIYXIYZXZXIZXIYZXIYXIY" "ZZZZZZZ" "I",
        "ZXZX" "IZIZIIZXYYXYXYIZIIZIZXYXYYXY" "YZXZXIY" "X",
        "IXXI" "IZXYZYXIZYZIYXZIYIZXYZIYXZXY" "ZXYIZXY" "Z",
        "YYYY" "IZIZXXYYXXZIZIXYXIZIZZIZIXYX" "ZIZYXYX" "I",
    };
    return rows;
}

const std::vector<int>& table6_column_labels() {
    static const std::vector<int> cols = {5, 10, 19, 28,
                                          0, 1, 2, 3, 4, 6, 7, 8, 9, 11, 12, 13, 14, 15,
                                          16, 17, 18, 20, 21, 22, 23, 24, 25, 26, 27, 29, 30, 31};
    return cols;
}

const std::vector<std::string>& tail_letters_8m(int m) {
    static const std::map<int, std::vector<std::string>> tails = {
        {3, {"IXY", "IYZ"}},
        {4, {"IXYZ", "IYZX"}},
        {6, {"IZYXYX", "XYIZXY", "ZXZXIY"}},
    };
    auto it = tails.find(m);
    if (it == tails.end()) throw std::invalid_argument("no published tail letters for this m");
    return it->second;
}

} // namespace stab3::detail

namespace stab3 {

const int kA5[5][5] = {
    {1, 1, 0, 0, 0},
    {1, 1, 0, 1, 0},
    {0, 1, 0, 0, 0},
    {0, 1, 1, 0, 1},
    {0, 1, 1, 0, 0},
};

const int kR5[5][5] = {
    {1, 0, 0, 0, 0},
    {0, 0, 0, 0, 1},
    {0, 1, 0, 0, 0},
    {0, 0, 0, 1, 0},
    {1, 1, 1, 0, 0},
};

} // namespace stab3
