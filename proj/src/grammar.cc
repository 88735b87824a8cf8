#include "pg/grammar.hh"

#include <algorithm>

namespace pg {

Symbol terminal(std::string name) { return Symbol{SymbolKind::Terminal, std::move(name)}; }

Symbol nonterminal(std::string name) { return Symbol{SymbolKind::Nonterminal, std::move(name)}; }

std::string format_word(const Word& w) {
    if (w.empty()) return "eps";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += w[i];
    }
    return out;
}

bool ShortlexLess::operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

int class_level(ChomskyClass c) {
    switch (c) {
        case ChomskyClass::Type0: return 0;
        case ChomskyClass::Type1: return 1;
        case ChomskyClass::Type2: return 2;
        case ChomskyClass::Type3: return 3;
    }
    return 0;
}

std::string_view class_name(ChomskyClass c) {
    switch (c) {
        case ChomskyClass::Type0: return "Type0";
        case ChomskyClass::Type1: return "Type1";
        case ChomskyClass::Type2: return "Type2";
        case ChomskyClass::Type3: return "Type3";
    }
    return "Type0";
}

ProhibitionGrammar with_empty_negative(Grammar positive) {
    Grammar negative;
    negative.alphabet = positive.alphabet;
    negative.nonterminals = {positive.start};
    negative.start = positive.start;
    return ProhibitionGrammar{std::move(positive), std::move(negative)};
}

bool is_right_linear(const Grammar& g) {
    for (const Production& p : g.productions) {
        if (p.lhs.size() != 1 || p.lhs[0].kind != SymbolKind::Nonterminal) return false;
        if (p.rhs.empty()) continue;  // A -> eps
        if (p.rhs[0].kind != SymbolKind::Terminal) return false;
        if (p.rhs.size() == 1) continue;  // A -> a
        if (p.rhs.size() == 2 && p.rhs[1].kind == SymbolKind::Nonterminal) continue;  // A -> aB
        return false;
    }
    return true;
}

bool is_context_free(const Grammar& g) {
    return std::all_of(g.productions.begin(), g.productions.end(), [](const Production& p) {
        return p.lhs.size() == 1 && p.lhs[0].kind == SymbolKind::Nonterminal;
    });
}

bool is_noncontracting(const Grammar& g) {
    bool start_on_rhs = false;
    for (const Production& p : g.productions)
        for (const Symbol& s : p.rhs)
            if (s.kind == SymbolKind::Nonterminal && s.name == g.start) start_on_rhs = true;
    for (const Production& p : g.productions) {
        if (p.rhs.empty() && p.lhs.size() == 1 && p.lhs[0].kind == SymbolKind::Nonterminal &&
            p.lhs[0].name == g.start && !start_on_rhs)
            continue;
        if (p.lhs.size() > p.rhs.size()) return false;
    }
    return true;
}

ChomskyClass classify(const Grammar& g) {
    if (is_right_linear(g)) return ChomskyClass::Type3;
    if (is_context_free(g)) return ChomskyClass::Type2;
    if (is_noncontracting(g)) return ChomskyClass::Type1;
    return ChomskyClass::Type0;
}

std::vector<std::string> validate(const Grammar& g) {
    std::vector<std::string> violations;
    for (const std::string& t : g.alphabet)
        if (g.nonterminals.count(t))
            violations.push_back("symbol " + t + " declared as both terminal and nonterminal");
    if (!g.nonterminals.count(g.start))
        violations.push_back("start symbol " + g.start + " is not a declared nonterminal");

    auto declared = [&](const Symbol& s) {
        return s.kind == SymbolKind::Terminal ? g.alphabet.count(s.name) > 0
                                              : g.nonterminals.count(s.name) > 0;
    };
    for (std::size_t i = 0; i < g.productions.size(); ++i) {
        const Production& p = g.productions[i];
        for (const Symbol& s : p.lhs)
            if (!declared(s))
                violations.push_back("undeclared symbol " + s.name + " in production " + std::to_string(i));
        for (const Symbol& s : p.rhs)
            if (!declared(s))
                violations.push_back("undeclared symbol " + s.name + " in production " + std::to_string(i));
        bool has_nonterminal = std::any_of(p.lhs.begin(), p.lhs.end(), [](const Symbol& s) {
            return s.kind == SymbolKind::Nonterminal;
        });
        if (p.lhs.empty() || !has_nonterminal)
            violations.push_back("production " + std::to_string(i) +
                                 " has no nonterminal on the left-hand side");
    }
    return violations;
}

}  // namespace pg
