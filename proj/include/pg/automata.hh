#ifndef PG_AUTOMATA_HH
#define PG_AUTOMATA_HH

#include <map>
#include <set>
#include <string>
#include <vector>

#include "pg/grammar.hh"

namespace pg {

using StateId = std::size_t;

// Nondeterministic automaton; moves on kEpsilon consume no input.
struct Nfa {
    static constexpr int kEpsilon = -1;

    std::size_t state_count = 0;
    std::vector<std::string> alphabet;  // sorted, unique
    std::map<std::pair<StateId, int>, std::set<StateId>> transitions;
    StateId start = 0;
    std::set<StateId> accepting;
};

// Deterministic automaton with a total transition function.
struct Dfa {
    std::size_t state_count = 0;
    std::vector<std::string> alphabet;               // sorted, unique
    std::vector<std::vector<StateId>> transition;    // [state][symbol index]
    StateId start = 0;
    std::set<StateId> accepting;
};

// Requires classify(g) == Type3. One state per nonterminal plus a final state;
// the derivations of g correspond exactly to the accepting runs.
Nfa regular_to_nfa(const Grammar& g);

Nfa to_nfa(const Dfa& d);

// Subset construction with epsilon closure; the result is total.
Dfa determinize(const Nfa& n);

Dfa complement(const Dfa& d);

// Product automata over a shared alphabet, restricted to reachable pairs.
Dfa intersect(const Dfa& a, const Dfa& b);
Dfa difference(const Dfa& a, const Dfa& b);

// Partition refinement over the reachable states; minimal among total DFAs.
Dfa minimize(const Dfa& d);

// Language equality; on inequality *counterexample (when non-null) receives a
// shortest word accepted by exactly one operand.
bool equivalent(const Dfa& a, const Dfa& b, Word* counterexample = nullptr);

// Right-linear grammar deriving exactly the accepted language.
Grammar dfa_to_regular_grammar(const Dfa& d);

bool dfa_member(const Dfa& d, const Word& w);

// determinize(regular_to_nfa(g)), minimized.
Dfa compile_regular(const Grammar& g);

// Right-linear grammar for the words derivable in pos but not in neg.
Grammar construct_regular_difference(const Grammar& pos, const Grammar& neg);

// Text listing: start state, accepting states, then one transition per line.
std::string export_dfa(const Dfa& d);

}  // namespace pg

#endif
