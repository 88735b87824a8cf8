#include "pg/automata.hh"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "pg/errors.hh"

namespace pg {

namespace {

std::vector<std::string> sorted_alphabet(const std::set<std::string>& alphabet) {
    return {alphabet.begin(), alphabet.end()};
}

int symbol_index(const std::vector<std::string>& alphabet, const std::string& token) {
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), token);
    if (it == alphabet.end() || *it != token)
        throw AlphabetError("symbol " + token + " is not in the alphabet");
    return static_cast<int>(it - alphabet.begin());
}

void require_same_alphabet(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a != b) throw AlphabetError("alphabet mismatch between automata");
}

std::set<StateId> epsilon_closure(const Nfa& n, std::set<StateId> states) {
    std::deque<StateId> queue(states.begin(), states.end());
    while (!queue.empty()) {
        StateId s = queue.front();
        queue.pop_front();
        auto it = n.transitions.find({s, Nfa::kEpsilon});
        if (it == n.transitions.end()) continue;
        for (StateId t : it->second)
            if (states.insert(t).second) queue.push_back(t);
    }
    return states;
}

// Product automaton restricted to pairs reachable from the two start states.
Dfa product(const Dfa& a, const Dfa& b, bool (*accepts)(bool, bool)) {
    require_same_alphabet(a.alphabet, b.alphabet);
    Dfa out;
    out.alphabet = a.alphabet;
    std::map<std::pair<StateId, StateId>, StateId> ids;
    std::deque<std::pair<StateId, StateId>> queue;
    auto intern = [&](StateId sa, StateId sb) {
        auto [it, fresh] = ids.try_emplace({sa, sb}, ids.size());
        if (fresh) {
            queue.push_back({sa, sb});
            out.transition.emplace_back(out.alphabet.size());
            if (accepts(a.accepting.count(sa) > 0, b.accepting.count(sb) > 0))
                out.accepting.insert(it->second);
        }
        return it->second;
    };
    out.start = intern(a.start, b.start);
    while (!queue.empty()) {
        auto [sa, sb] = queue.front();
        queue.pop_front();
        StateId id = ids.at({sa, sb});
        for (std::size_t x = 0; x < out.alphabet.size(); ++x)
            out.transition[id][x] = intern(a.transition[sa][x], b.transition[sb][x]);
    }
    out.state_count = ids.size();
    return out;
}

std::vector<bool> reachable_states(const Dfa& d) {
    std::vector<bool> seen(d.state_count, false);
    std::deque<StateId> queue{d.start};
    seen[d.start] = true;
    while (!queue.empty()) {
        StateId s = queue.front();
        queue.pop_front();
        for (StateId t : d.transition[s])
            if (!seen[t]) {
                seen[t] = true;
                queue.push_back(t);
            }
    }
    return seen;
}

}  // namespace

Nfa regular_to_nfa(const Grammar& g) {
    if (classify(g) != ChomskyClass::Type3)
        throw ClassError("grammar is not right-linear");
    Nfa n;
    n.alphabet = sorted_alphabet(g.alphabet);
    std::map<std::string, StateId> state_of;
    for (const std::string& nt : g.nonterminals) state_of.emplace(nt, state_of.size());
    StateId final_state = state_of.size();
    n.state_count = final_state + 1;
    n.start = state_of.at(g.start);
    n.accepting.insert(final_state);
    for (const Production& p : g.productions) {
        StateId from = state_of.at(p.lhs[0].name);
        if (p.rhs.empty()) {
            n.accepting.insert(from);
        } else {
            int x = symbol_index(n.alphabet, p.rhs[0].name);
            StateId to = p.rhs.size() == 2 ? state_of.at(p.rhs[1].name) : final_state;
            n.transitions[{from, x}].insert(to);
        }
    }
    return n;
}

Nfa to_nfa(const Dfa& d) {
    Nfa n;
    n.state_count = d.state_count;
    n.alphabet = d.alphabet;
    n.start = d.start;
    n.accepting = d.accepting;
    for (StateId s = 0; s < d.state_count; ++s)
        for (std::size_t x = 0; x < d.alphabet.size(); ++x)
            n.transitions[{s, static_cast<int>(x)}].insert(d.transition[s][x]);
    return n;
}

Dfa determinize(const Nfa& n) {
    Dfa d;
    d.alphabet = n.alphabet;
    std::map<std::set<StateId>, StateId> ids;
    std::deque<std::set<StateId>> queue;
    auto intern = [&](std::set<StateId> subset) {
        auto [it, fresh] = ids.try_emplace(subset, ids.size());
        if (fresh) {
            d.transition.emplace_back(d.alphabet.size());
            bool accepts = std::any_of(subset.begin(), subset.end(),
                                       [&](StateId s) { return n.accepting.count(s) > 0; });
            if (accepts) d.accepting.insert(it->second);
            queue.push_back(std::move(subset));
        }
        return it->second;
    };
    d.start = intern(epsilon_closure(n, {n.start}));
    while (!queue.empty()) {
        std::set<StateId> subset = queue.front();
        queue.pop_front();
        StateId id = ids.at(subset);
        for (std::size_t x = 0; x < d.alphabet.size(); ++x) {
            std::set<StateId> next;
            for (StateId s : subset) {
                auto it = n.transitions.find({s, static_cast<int>(x)});
                if (it != n.transitions.end()) next.insert(it->second.begin(), it->second.end());
            }
            d.transition[id][x] = intern(epsilon_closure(n, std::move(next)));
        }
    }
    d.state_count = ids.size();
    return d;
}

Dfa complement(const Dfa& d) {
    Dfa out = d;
    out.accepting.clear();
    for (StateId s = 0; s < d.state_count; ++s)
        if (!d.accepting.count(s)) out.accepting.insert(s);
    return out;
}

Dfa intersect(const Dfa& a, const Dfa& b) {
    return product(a, b, [](bool x, bool y) { return x && y; });
}

Dfa difference(const Dfa& a, const Dfa& b) { return intersect(a, complement(b)); }

Dfa minimize(const Dfa& d) {
    std::vector<bool> reach = reachable_states(d);
    std::vector<StateId> kept;
    std::vector<int> renumber(d.state_count, -1);
    for (StateId s = 0; s < d.state_count; ++s)
        if (reach[s]) {
            renumber[s] = static_cast<int>(kept.size());
            kept.push_back(s);
        }

    std::size_t n = kept.size();
    std::vector<int> cls(n);
    for (std::size_t i = 0; i < n; ++i) cls[i] = d.accepting.count(kept[i]) ? 1 : 0;
    for (;;) {
        std::map<std::vector<int>, int> classes;
        std::vector<int> next(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<int> signature{cls[i]};
            for (StateId t : d.transition[kept[i]]) signature.push_back(cls[renumber[t]]);
            next[i] = classes.try_emplace(signature, classes.size()).first->second;
        }
        std::size_t old_count = std::set<int>(cls.begin(), cls.end()).size();
        bool stable = classes.size() == old_count;
        cls = std::move(next);
        if (stable) break;
    }

    // Renumber classes in order of first appearance for a deterministic result.
    int class_count = *std::max_element(cls.begin(), cls.end()) + 1;
    std::vector<int> order(class_count, -1);
    int next_id = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (order[cls[i]] < 0) order[cls[i]] = next_id++;

    Dfa out;
    out.alphabet = d.alphabet;
    out.state_count = class_count;
    out.transition.assign(class_count, std::vector<StateId>(d.alphabet.size()));
    for (std::size_t i = 0; i < n; ++i) {
        int id = order[cls[i]];
        for (std::size_t x = 0; x < d.alphabet.size(); ++x)
            out.transition[id][x] = order[cls[renumber[d.transition[kept[i]][x]]]];
        if (d.accepting.count(kept[i])) out.accepting.insert(id);
    }
    out.start = order[cls[renumber[d.start]]];
    return out;
}

bool equivalent(const Dfa& a, const Dfa& b, Word* counterexample) {
    require_same_alphabet(a.alphabet, b.alphabet);
    std::map<std::pair<StateId, StateId>, std::pair<std::pair<StateId, StateId>, int>> parent;
    std::deque<std::pair<StateId, StateId>> queue;
    auto visit = [&](std::pair<StateId, StateId> pair, std::pair<StateId, StateId> from, int via) {
        if (parent.count(pair)) return;
        parent.emplace(pair, std::make_pair(from, via));
        queue.push_back(pair);
    };
    std::pair<StateId, StateId> origin{a.start, b.start};
    visit(origin, origin, -1);
    while (!queue.empty()) {
        auto pair = queue.front();
        queue.pop_front();
        if (a.accepting.count(pair.first) != b.accepting.count(pair.second)) {
            if (counterexample) {
                Word w;
                for (auto at = pair; parent.at(at).second >= 0; at = parent.at(at).first)
                    w.push_back(a.alphabet[parent.at(at).second]);
                std::reverse(w.begin(), w.end());
                *counterexample = std::move(w);
            }
            return false;
        }
        for (std::size_t x = 0; x < a.alphabet.size(); ++x)
            visit({a.transition[pair.first][x], b.transition[pair.second][x]}, pair,
                  static_cast<int>(x));
    }
    return true;
}

Grammar dfa_to_regular_grammar(const Dfa& d) {
    std::vector<bool> reach = reachable_states(d);
    // States that can still reach an accepting state.
    std::vector<bool> live(d.state_count, false);
    std::deque<StateId> queue;
    for (StateId s : d.accepting) {
        live[s] = true;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        StateId t = queue.front();
        queue.pop_front();
        for (StateId s = 0; s < d.state_count; ++s)
            if (!live[s] &&
                std::find(d.transition[s].begin(), d.transition[s].end(), t) != d.transition[s].end()) {
                live[s] = true;
                queue.push_back(s);
            }
    }

    auto name = [](StateId s) { return "Q" + std::to_string(s); };
    Grammar g;
    g.alphabet.insert(d.alphabet.begin(), d.alphabet.end());
    g.start = name(d.start);
    g.nonterminals.insert(g.start);
    if (!live[d.start]) return g;  // empty language
    for (StateId s = 0; s < d.state_count; ++s) {
        if (!reach[s] || !live[s]) continue;
        g.nonterminals.insert(name(s));
        for (std::size_t x = 0; x < d.alphabet.size(); ++x) {
            StateId t = d.transition[s][x];
            if (reach[t] && live[t])
                g.productions.push_back(
                    {{nonterminal(name(s))}, {terminal(d.alphabet[x]), nonterminal(name(t))}});
        }
        if (d.accepting.count(s)) g.productions.push_back({{nonterminal(name(s))}, {}});
    }
    return g;
}

bool dfa_member(const Dfa& d, const Word& w) {
    StateId s = d.start;
    for (const std::string& token : w) s = d.transition[s][symbol_index(d.alphabet, token)];
    return d.accepting.count(s) > 0;
}

Dfa compile_regular(const Grammar& g) { return minimize(determinize(regular_to_nfa(g))); }

Grammar construct_regular_difference(const Grammar& pos, const Grammar& neg) {
    Dfa diff = difference(compile_regular(pos), compile_regular(neg));
    return dfa_to_regular_grammar(minimize(diff));
}

std::string export_dfa(const Dfa& d) {
    std::ostringstream out;
    out << d.start << '\n';
    bool first = true;
    for (StateId s : d.accepting) {
        out << (first ? "" : " ") << s;
        first = false;
    }
    out << '\n';
    for (StateId s = 0; s < d.state_count; ++s)
        for (std::size_t x = 0; x < d.alphabet.size(); ++x)
            out << s << ' ' << d.alphabet[x] << ' ' << d.transition[s][x] << '\n';
    return out.str();
}

}  // namespace pg
