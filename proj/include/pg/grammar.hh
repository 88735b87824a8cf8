#ifndef PG_GRAMMAR_HH
#define PG_GRAMMAR_HH

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace pg {

enum class SymbolKind { Terminal, Nonterminal };

struct Symbol {
    SymbolKind kind;
    std::string name;

    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

Symbol terminal(std::string name);
Symbol nonterminal(std::string name);

// A word is a sequence of terminal tokens; the empty vector is the empty word.
using Word = std::vector<std::string>;

// Space-joined tokens; the empty word prints as "eps".
std::string format_word(const Word& w);

// Length-then-lexicographic order on words.
struct ShortlexLess {
    bool operator()(const Word& a, const Word& b) const;
};

struct Production {
    std::vector<Symbol> lhs;  // nonempty, contains at least one nonterminal
    std::vector<Symbol> rhs;  // empty means the production rewrites to the empty word

    friend bool operator==(const Production&, const Production&) = default;
};

struct Grammar {
    std::set<std::string> alphabet;      // terminal tokens
    std::set<std::string> nonterminals;  // disjoint from alphabet
    std::string start;
    std::vector<Production> productions;  // declaration order is preserved

    friend bool operator==(const Grammar&, const Grammar&) = default;
};

enum class ChomskyClass { Type0, Type1, Type2, Type3 };

int class_level(ChomskyClass c);  // Type0 -> 0 ... Type3 -> 3
std::string_view class_name(ChomskyClass c);

// A pair of grammars over one shared alphabet. The pair generates the words
// derivable in the positive grammar and not derivable in the negative one.
// Nonterminal namespaces of the two components are independent.
struct ProhibitionGrammar {
    Grammar positive;
    Grammar negative;

    const std::set<std::string>& alphabet() const { return positive.alphabet; }

    friend bool operator==(const ProhibitionGrammar&, const ProhibitionGrammar&) = default;
};

// Wraps a grammar with a negative component generating the empty language.
ProhibitionGrammar with_empty_negative(Grammar positive);

// Most restrictive class first; a grammar satisfying both the noncontracting
// and the context-free shape is reported at the Type2/Type3 level.
ChomskyClass classify(const Grammar& g);

// One entry per violated structural invariant; empty means well-formed.
std::vector<std::string> validate(const Grammar& g);

// Every production has the shape A -> aB, A -> a or A -> eps.
bool is_right_linear(const Grammar& g);

// Every left-hand side is a single nonterminal.
bool is_context_free(const Grammar& g);

// |lhs| <= |rhs| everywhere, except that start -> eps is permitted when the
// start symbol appears on no right-hand side.
bool is_noncontracting(const Grammar& g);

}  // namespace pg

#endif
