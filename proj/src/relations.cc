#include <array>
#include <sstream>

#include "pg/errors.hh"
#include "pg/prohibition.hh"

namespace pg {

namespace {

// Cell encoding: '<' proper subset, 'L' subset-or-equal, '=' equal,
// '>' proper superset, 'G' superset-or-equal, '!' not equal.
// Row-major over pair classes 00,01,...,33; the tables are kept exactly as
// published, including the one-sided 'L'/'G' cells.

// 16 rows (00..33) by 15 columns (01..33; there is no 00 column).
constexpr std::array<const char*, 16> kPairTable = {
    ">>>>>>>>>>>>>>>",  // 00
    "===!>>>!>>>!>>>",  // 01
    "===!>>>!>>>!>>>",  // 02
    "===!>>>!>>>!>>>",  // 03
    "!!!=>>>=>>>=>>>",  // 10
    "<<<<===<=G><=>>",  // 11
    "<<<<===<=G><=>>",  // 12
    "<<<<===<=G><=>>",  // 13
    "!!!=>>>=>>>=>>>",  // 20
    "<<<<===<=G><=>>",  // 21
    "<<<<LLL<L=><>>>",  // 22
    "<<<<<<<<<<=<<!>",  // 23
    "!!!=>>>=>>>=>>>",  // 30
    "<<<<===<=>><=>>",  // 31
    "<<<<<<<<<<!<<=>",  // 32
    "<<<<<<<<<<<<<<=",  // 33
};

// 4 rows (conventional classes 0..3) by 16 columns (00..33).
constexpr std::array<const char*, 4> kConventionalTable = {
    "<===!>>>!>>>!>>>",  // 0
    "<<<<<===<=G><=>>",  // 1
    "<<<<<<<<<<<=<<!>",  // 2
    "<<<<<<<<<<<<<<<=",  // 3
};

Relation decode(char c) {
    switch (c) {
        case '<': return Relation::ProperSubset;
        case 'L': return Relation::SubsetOrEqual;
        case '=': return Relation::Equal;
        case '>': return Relation::ProperSuperset;
        case 'G': return Relation::SupersetOrEqual;
        case '!': return Relation::NotEqual;
    }
    throw Error("corrupt relation table");
}

int pair_index(PairClass pc) {
    return class_level(pc.positive) * 4 + class_level(pc.negative);
}

ChomskyClass class_from_digit(char d) {
    switch (d) {
        case '0': return ChomskyClass::Type0;
        case '1': return ChomskyClass::Type1;
        case '2': return ChomskyClass::Type2;
        case '3': return ChomskyClass::Type3;
    }
    throw Error("unknown pair");
}

std::string pair_label(int index) {
    return std::string{static_cast<char>('0' + index / 4), static_cast<char>('0' + index % 4)};
}

}  // namespace

std::string_view relation_symbol(Relation r) {
    switch (r) {
        case Relation::ProperSubset: return "⊂";
        case Relation::SubsetOrEqual: return "⊆";
        case Relation::Equal: return "=";
        case Relation::ProperSuperset: return "⊃";
        case Relation::SupersetOrEqual: return "⊇";
        case Relation::NotEqual: return "≠";
    }
    return "=";
}

Relation pair_pair_relation(PairClass row, PairClass col) {
    int col_index = pair_index(col);
    if (col_index == 0) throw Error("unknown pair: the tables carry no 00 column");
    return decode(kPairTable[pair_index(row)][col_index - 1]);
}

Relation class_pair_relation(ChomskyClass row, PairClass col) {
    return decode(kConventionalTable[class_level(row)][pair_index(col)]);
}

Relation relation_lookup(std::string_view row, std::string_view col) {
    auto as_pair = [](std::string_view key) -> std::optional<PairClass> {
        if (key.size() != 2) return std::nullopt;
        return PairClass{class_from_digit(key[0]), class_from_digit(key[1])};
    };
    auto as_class = [](std::string_view key) -> std::optional<ChomskyClass> {
        if (key.size() != 1) return std::nullopt;
        return class_from_digit(key[0]);
    };
    if (auto r = as_pair(row)) {
        if (auto c = as_pair(col)) return pair_pair_relation(*r, *c);
        if (auto c = as_class(col)) return class_pair_relation(*c, *r);
    } else if (auto rc = as_class(row)) {
        if (auto c = as_pair(col)) return class_pair_relation(*rc, *c);
    }
    throw Error("unknown pair: " + std::string(row) + ", " + std::string(col));
}

std::string render_relation_tables() {
    std::ostringstream out;
    out << "table 1 (pair class vs pair class)\ncolumns:";
    for (int c = 1; c < 16; ++c) out << ' ' << pair_label(c);
    out << '\n';
    for (int r = 0; r < 16; ++r) {
        out << pair_label(r) << ':';
        for (int c = 0; c < 15; ++c) out << ' ' << relation_symbol(decode(kPairTable[r][c]));
        out << '\n';
    }
    out << "table 2 (conventional class vs pair class)\ncolumns:";
    for (int c = 0; c < 16; ++c) out << ' ' << pair_label(c);
    out << '\n';
    for (int r = 0; r < 4; ++r) {
        out << r << ':';
        for (int c = 0; c < 16; ++c) out << ' ' << relation_symbol(decode(kConventionalTable[r][c]));
        out << '\n';
    }
    return out.str();
}

}  // namespace pg
