#ifndef PG_CFG_HH
#define PG_CFG_HH

#include <string>
#include <vector>

#include "pg/automata.hh"
#include "pg/grammar.hh"

namespace pg {

// Chomsky normal form. Rules are A -> B C or A -> a over integer ids; the
// empty word is carried by accepts_epsilon. The start id never appears on a
// right-hand side.
struct CnfGrammar {
    struct BinaryRule {
        int lhs, left, right;
    };
    struct TerminalRule {
        int lhs, terminal;
    };

    std::vector<std::string> nonterminals;  // index is the id
    std::vector<std::string> terminals;     // sorted, unique; index is the id
    int start = 0;
    std::vector<BinaryRule> binary_rules;
    std::vector<TerminalRule> terminal_rules;
    bool accepts_epsilon = false;
};

// Requires classify(g) in {Type2, Type3}. Introduces a fresh start symbol,
// eliminates epsilon and unit rules, and drops useless nonterminals.
CnfGrammar to_cnf(const Grammar& g);

bool cyk_member(const CnfGrammar& c, const Word& w);

// Context-free grammar for L(c) intersected with the language of d, built on
// (state, nonterminal, state) triples. Non-generating and unreachable triples
// are pruned.
Grammar cfg_intersect_dfa(const CnfGrammar& c, const Dfa& d);

// Context-free grammar for the words derivable in g2 and rejected by g3.
// Requires classify(g2) in {Type2, Type3} and classify(g3) == Type3.
Grammar construct_cf_minus_regular(const Grammar& g2, const Grammar& g3);

// Requires classify(g) in {Type2, Type3}. True iff no terminal word derives.
bool cfg_is_empty(const Grammar& g);

}  // namespace pg

#endif
