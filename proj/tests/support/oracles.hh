#pragma once

// Independent ground-truth helpers for the tests: membership by exhaustive
// derivation enumeration (no CYK, no automata) and a derivation-trace
// replay checker.

#include <algorithm>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "pg/cfg.hh"
#include "pg/derivation.hh"
#include "pg/grammar.hh"

namespace oracles {

// Membership by exhaustive leftmost derivation enumeration on a CNF grammar.
// Top-down over (matched-prefix-length, pending-nonterminal-stack) states;
// every pending nonterminal must still emit at least one terminal, which
// bounds the state space.
inline bool cnf_derives(const pg::CnfGrammar& g, const pg::Word& w) {
    if (w.empty()) return g.accepts_epsilon;
    std::vector<int> target;
    for (const std::string& t : w) {
        auto it = std::lower_bound(g.terminals.begin(), g.terminals.end(), t);
        if (it == g.terminals.end() || *it != t) return false;
        target.push_back(static_cast<int>(it - g.terminals.begin()));
    }
    const std::size_t n = target.size();
    std::set<std::pair<std::size_t, std::vector<int>>> seen;
    std::function<bool(std::size_t, std::vector<int>)> go =
        [&](std::size_t pos, std::vector<int> pending) -> bool {
        if (pending.empty()) return pos == n;
        if (pos + pending.size() > n) return false;
        if (!seen.insert({pos, pending}).second) return false;
        int head = pending.front();
        std::vector<int> rest(pending.begin() + 1, pending.end());
        for (const auto& r : g.terminal_rules)
            if (r.lhs == head && target[pos] == r.terminal)
                if (go(pos + 1, rest)) return true;
        for (const auto& r : g.binary_rules)
            if (r.lhs == head) {
                std::vector<int> next;
                next.reserve(rest.size() + 2);
                next.push_back(r.left);
                next.push_back(r.right);
                next.insert(next.end(), rest.begin(), rest.end());
                if (go(pos, std::move(next))) return true;
            }
        return false;
    };
    return go(0, {g.start});
}

// True iff the trace is a genuine derivation in g: it starts at the start
// symbol, ends at w, and each consecutive pair differs by one production
// applied at one position.
inline bool valid_derivation(const pg::Grammar& g, const std::vector<pg::SententialForm>& trace,
                             const pg::Word& w) {
    if (trace.empty()) return false;
    if (trace.front() != pg::SententialForm{pg::nonterminal(g.start)}) return false;
    pg::SententialForm final_form;
    for (const std::string& t : w) final_form.push_back(pg::terminal(t));
    if (trace.back() != final_form) return false;
    for (std::size_t k = 0; k + 1 < trace.size(); ++k) {
        const pg::SententialForm& cur = trace[k];
        const pg::SententialForm& nxt = trace[k + 1];
        bool ok = false;
        for (const pg::Production& p : g.productions) {
            if (ok) break;
            if (p.lhs.size() > cur.size()) continue;
            for (std::size_t i = 0; i + p.lhs.size() <= cur.size() && !ok; ++i) {
                if (!std::equal(p.lhs.begin(), p.lhs.end(), cur.begin() + i)) continue;
                pg::SententialForm candidate(cur.begin(), cur.begin() + i);
                candidate.insert(candidate.end(), p.rhs.begin(), p.rhs.end());
                candidate.insert(candidate.end(), cur.begin() + i + p.lhs.size(), cur.end());
                if (candidate == nxt) ok = true;
            }
        }
        if (!ok) return false;
    }
    return true;
}

}  // namespace oracles
