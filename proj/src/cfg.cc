#include "pg/cfg.hh"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "pg/errors.hh"

namespace pg {

namespace {

void require_context_free(const Grammar& g, const char* who) {
    ChomskyClass c = classify(g);
    if (c != ChomskyClass::Type2 && c != ChomskyClass::Type3)
        throw ClassError(std::string(who) + " requires a context-free grammar");
}

int terminal_id(const std::vector<std::string>& terminals, const std::string& token) {
    auto it = std::lower_bound(terminals.begin(), terminals.end(), token);
    if (it == terminals.end() || *it != token)
        throw AlphabetError("symbol " + token + " is not in the alphabet");
    return static_cast<int>(it - terminals.begin());
}

// Working representation during the normal-form conversion. Nonterminal ids
// are non-negative; terminal id t is encoded as -(t + 1).
struct CnfBuilder {
    std::vector<std::string> names;
    std::map<std::string, int> ids;
    std::set<std::string> used_names;
    std::vector<std::pair<int, std::vector<int>>> rules;

    int intern(const std::string& name) {
        auto [it, fresh] = ids.try_emplace(name, static_cast<int>(names.size()));
        if (fresh) {
            names.push_back(name);
            used_names.insert(name);
        }
        return it->second;
    }

    int fresh(const std::string& base) {
        if (!used_names.count(base)) return intern(base);
        for (int k = 0;; ++k) {
            std::string candidate = base + std::to_string(k);
            if (!used_names.count(candidate)) return intern(candidate);
        }
    }
};

constexpr int encode_terminal(int t) { return -(t + 1); }
constexpr bool is_terminal_code(int code) { return code < 0; }
constexpr int decode_terminal(int code) { return -code - 1; }

}  // namespace

CnfGrammar to_cnf(const Grammar& g) {
    require_context_free(g, "to_cnf");

    CnfGrammar out;
    out.terminals.assign(g.alphabet.begin(), g.alphabet.end());

    CnfBuilder b;
    b.used_names.insert(g.alphabet.begin(), g.alphabet.end());
    for (const std::string& nt : g.nonterminals) b.intern(nt);
    int start = b.fresh("S");
    b.rules.push_back({start, {b.ids.at(g.start)}});
    for (const Production& p : g.productions) {
        std::vector<int> rhs;
        for (const Symbol& s : p.rhs)
            rhs.push_back(s.kind == SymbolKind::Terminal
                              ? encode_terminal(terminal_id(out.terminals, s.name))
                              : b.ids.at(s.name));
        b.rules.push_back({b.ids.at(p.lhs[0].name), std::move(rhs)});
    }

    // Terminals inside long right-hand sides move behind wrapper nonterminals.
    std::map<int, int> wrapper;
    std::size_t original_rules = b.rules.size();
    for (std::size_t r = 0; r < original_rules; ++r) {
        if (b.rules[r].second.size() < 2) continue;
        for (std::size_t i = 0; i < b.rules[r].second.size(); ++i) {
            int code = b.rules[r].second[i];
            if (!is_terminal_code(code)) continue;
            auto it = wrapper.find(code);
            if (it == wrapper.end()) {
                int nt = b.fresh("T" + out.terminals[decode_terminal(code)]);
                b.rules.push_back({nt, {code}});
                it = wrapper.emplace(code, nt).first;
            }
            b.rules[r].second[i] = it->second;
        }
    }

    // Binarize; pushed tail rules are revisited until every side is short.
    for (std::size_t r = 0; r < b.rules.size(); ++r) {
        while (b.rules[r].second.size() > 2) {
            int tail = b.fresh("X");
            int head = b.rules[r].second[0];
            std::vector<int> rest(b.rules[r].second.begin() + 1, b.rules[r].second.end());
            b.rules.push_back({tail, std::move(rest)});
            b.rules[r].second = {head, tail};
        }
    }

    // Epsilon elimination over right-hand sides of length at most two.
    std::vector<bool> nullable(b.names.size(), false);
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& [lhs, rhs] : b.rules) {
            if (nullable[lhs]) continue;
            bool all = std::all_of(rhs.begin(), rhs.end(), [&](int code) {
                return !is_terminal_code(code) && nullable[code];
            });
            if (all) {
                nullable[lhs] = true;
                changed = true;
            }
        }
    }
    out.accepts_epsilon = nullable[start];
    std::set<std::pair<int, std::vector<int>>> expanded;
    for (const auto& [lhs, rhs] : b.rules) {
        if (!rhs.empty()) expanded.insert({lhs, rhs});
        if (rhs.size() == 2) {
            if (!is_terminal_code(rhs[0]) && nullable[rhs[0]]) expanded.insert({lhs, {rhs[1]}});
            if (!is_terminal_code(rhs[1]) && nullable[rhs[1]]) expanded.insert({lhs, {rhs[0]}});
        }
    }

    // Unit elimination: replace A ->* B chains by B's non-unit rules.
    std::size_t n = b.names.size();
    std::vector<std::set<int>> unit_reach(n);
    for (std::size_t a = 0; a < n; ++a) {
        std::deque<int> queue{static_cast<int>(a)};
        unit_reach[a].insert(static_cast<int>(a));
        while (!queue.empty()) {
            int at = queue.front();
            queue.pop_front();
            for (const auto& [lhs, rhs] : expanded)
                if (lhs == at && rhs.size() == 1 && !is_terminal_code(rhs[0]) &&
                    unit_reach[a].insert(rhs[0]).second)
                    queue.push_back(rhs[0]);
        }
    }
    std::set<std::pair<int, std::vector<int>>> final_rules;
    for (std::size_t a = 0; a < n; ++a)
        for (int via : unit_reach[a])
            for (const auto& [lhs, rhs] : expanded)
                if (lhs == via && !(rhs.size() == 1 && !is_terminal_code(rhs[0])))
                    final_rules.insert({static_cast<int>(a), rhs});

    // Drop non-generating and unreachable nonterminals.
    std::vector<bool> generating(n, false);
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& [lhs, rhs] : final_rules) {
            if (generating[lhs]) continue;
            bool all = std::all_of(rhs.begin(), rhs.end(), [&](int code) {
                return is_terminal_code(code) || generating[code];
            });
            if (all) {
                generating[lhs] = true;
                changed = true;
            }
        }
    }
    std::vector<bool> reachable(n, false);
    reachable[start] = true;
    std::deque<int> queue{start};
    while (!queue.empty()) {
        int at = queue.front();
        queue.pop_front();
        for (const auto& [lhs, rhs] : final_rules) {
            if (lhs != at) continue;
            bool all = std::all_of(rhs.begin(), rhs.end(), [&](int code) {
                return is_terminal_code(code) || generating[code];
            });
            if (!all) continue;
            for (int code : rhs)
                if (!is_terminal_code(code) && !reachable[code]) {
                    reachable[code] = true;
                    queue.push_back(code);
                }
        }
    }

    std::vector<int> renumber(n, -1);
    auto keep = [&](int id) { return generating[id] && reachable[id]; };
    out.nonterminals.push_back(b.names[start]);
    renumber[start] = 0;
    for (std::size_t id = 0; id < n; ++id)
        if (keep(static_cast<int>(id)) && renumber[id] < 0) {
            renumber[id] = static_cast<int>(out.nonterminals.size());
            out.nonterminals.push_back(b.names[id]);
        }
    out.start = 0;
    for (const auto& [lhs, rhs] : final_rules) {
        if (renumber[lhs] < 0) continue;
        bool all = std::all_of(rhs.begin(), rhs.end(),
                               [&](int code) { return is_terminal_code(code) || renumber[code] >= 0; });
        if (!all) continue;
        if (rhs.size() == 1 && is_terminal_code(rhs[0]))
            out.terminal_rules.push_back({renumber[lhs], decode_terminal(rhs[0])});
        else if (rhs.size() == 2)
            out.binary_rules.push_back({renumber[lhs], renumber[rhs[0]], renumber[rhs[1]]});
    }
    return out;
}

bool cyk_member(const CnfGrammar& c, const Word& w) {
    if (w.empty()) return c.accepts_epsilon;
    std::size_t n = w.size();
    std::vector<int> tid(n);
    for (std::size_t i = 0; i < n; ++i) tid[i] = terminal_id(c.terminals, w[i]);

    std::size_t blocks = (c.nonterminals.size() + 63) / 64;
    if (blocks == 0) blocks = 1;
    std::vector<std::uint64_t> table(n * n * blocks, 0);
    auto cell = [&](std::size_t i, std::size_t len) {
        return table.data() + ((len - 1) * n + i) * blocks;
    };
    auto set_bit = [&](std::uint64_t* c0, int id) { c0[id / 64] |= std::uint64_t(1) << (id % 64); };
    auto get_bit = [&](const std::uint64_t* c0, int id) {
        return (c0[id / 64] >> (id % 64)) & 1;
    };

    for (std::size_t i = 0; i < n; ++i)
        for (const auto& r : c.terminal_rules)
            if (r.terminal == tid[i]) set_bit(cell(i, 1), r.lhs);

    for (std::size_t len = 2; len <= n; ++len)
        for (std::size_t i = 0; i + len <= n; ++i) {
            std::uint64_t* target = cell(i, len);
            for (std::size_t k = 1; k < len; ++k) {
                const std::uint64_t* left = cell(i, k);
                const std::uint64_t* right = cell(i + k, len - k);
                bool left_empty = std::all_of(left, left + blocks, [](std::uint64_t b) { return b == 0; });
                if (left_empty) continue;
                for (const auto& r : c.binary_rules)
                    if (get_bit(left, r.left) && get_bit(right, r.right)) set_bit(target, r.lhs);
            }
        }
    return get_bit(cell(0, n), c.start) != 0;
}

Grammar cfg_intersect_dfa(const CnfGrammar& c, const Dfa& d) {
    if (c.terminals != d.alphabet) throw AlphabetError("alphabet mismatch between grammar and automaton");

    std::size_t nq = d.state_count;
    std::size_t nn = c.nonterminals.size();
    auto triple = [&](StateId q, int a, StateId q2) { return (q * nn + a) * nq + q2; };

    std::vector<std::vector<int>> rules_by_left(nn), rules_by_right(nn);
    for (std::size_t r = 0; r < c.binary_rules.size(); ++r) {
        rules_by_left[c.binary_rules[r].left].push_back(static_cast<int>(r));
        rules_by_right[c.binary_rules[r].right].push_back(static_cast<int>(r));
    }

    // Bottom-up: mark (q, A, q') as soon as A derives some word driving q to q'.
    std::vector<bool> generating(nq * nn * nq, false);
    std::deque<std::size_t> agenda;
    auto derive = [&](StateId q, int a, StateId q2) {
        std::size_t t = triple(q, a, q2);
        if (!generating[t]) {
            generating[t] = true;
            agenda.push_back(t);
        }
    };
    for (const auto& r : c.terminal_rules)
        for (StateId q = 0; q < nq; ++q) derive(q, r.lhs, d.transition[q][r.terminal]);
    while (!agenda.empty()) {
        std::size_t t = agenda.front();
        agenda.pop_front();
        StateId q2 = t % nq;
        int a = static_cast<int>((t / nq) % nn);
        StateId q = static_cast<StateId>(t / nq / nn);
        for (int ri : rules_by_left[a]) {
            const auto& r = c.binary_rules[ri];
            for (StateId q3 = 0; q3 < nq; ++q3)
                if (generating[triple(q2, r.right, q3)]) derive(q, r.lhs, q3);
        }
        for (int ri : rules_by_right[a]) {
            const auto& r = c.binary_rules[ri];
            for (StateId q0 = 0; q0 < nq; ++q0)
                if (generating[triple(q0, r.left, q)]) derive(q0, r.lhs, q2);
        }
    }

    // Downward reachability from the accepting start triples.
    std::vector<bool> reachable(nq * nn * nq, false);
    std::deque<std::size_t> queue;
    auto reach = [&](std::size_t t) {
        if (generating[t] && !reachable[t]) {
            reachable[t] = true;
            queue.push_back(t);
        }
    };
    for (StateId f : d.accepting) reach(triple(d.start, c.start, f));
    while (!queue.empty()) {
        std::size_t t = queue.front();
        queue.pop_front();
        StateId q2 = t % nq;
        int a = static_cast<int>((t / nq) % nn);
        StateId q = static_cast<StateId>(t / nq / nn);
        for (std::size_t ri = 0; ri < c.binary_rules.size(); ++ri) {
            const auto& r = c.binary_rules[ri];
            if (r.lhs != a) continue;
            for (StateId q1 = 0; q1 < nq; ++q1)
                if (generating[triple(q, r.left, q1)] && generating[triple(q1, r.right, q2)]) {
                    reach(triple(q, r.left, q1));
                    reach(triple(q1, r.right, q2));
                }
        }
    }

    Grammar g;
    g.alphabet.insert(c.terminals.begin(), c.terminals.end());
    std::set<std::string> used(g.alphabet.begin(), g.alphabet.end());
    auto fresh = [&](const std::string& base) {
        std::string candidate = base;
        for (int k = 0; used.count(candidate); ++k) candidate = base + "_" + std::to_string(k);
        used.insert(candidate);
        return candidate;
    };
    g.start = fresh("S");
    g.nonterminals.insert(g.start);

    std::map<std::size_t, std::string> name_of;
    for (int a = 0; a < static_cast<int>(nn); ++a)
        for (StateId q = 0; q < nq; ++q)
            for (StateId q2 = 0; q2 < nq; ++q2) {
                std::size_t t = triple(q, a, q2);
                if (!reachable[t]) continue;
                std::string name = fresh(c.nonterminals[a] + "_" + std::to_string(q) + "_" +
                                         std::to_string(q2));
                name_of.emplace(t, name);
                g.nonterminals.insert(name);
            }

    if (c.accepts_epsilon && d.accepting.count(d.start))
        g.productions.push_back({{nonterminal(g.start)}, {}});
    for (StateId f : d.accepting) {
        auto it = name_of.find(triple(d.start, c.start, f));
        if (it != name_of.end())
            g.productions.push_back({{nonterminal(g.start)}, {nonterminal(it->second)}});
    }
    for (const auto& [t, name] : name_of) {
        StateId q2 = t % nq;
        int a = static_cast<int>((t / nq) % nn);
        StateId q = static_cast<StateId>(t / nq / nn);
        for (const auto& r : c.binary_rules) {
            if (r.lhs != a) continue;
            for (StateId q1 = 0; q1 < nq; ++q1) {
                auto left = name_of.find(triple(q, r.left, q1));
                auto right = name_of.find(triple(q1, r.right, q2));
                if (left != name_of.end() && right != name_of.end())
                    g.productions.push_back({{nonterminal(name)},
                                             {nonterminal(left->second), nonterminal(right->second)}});
            }
        }
        for (const auto& r : c.terminal_rules)
            if (r.lhs == a && d.transition[q][r.terminal] == q2)
                g.productions.push_back({{nonterminal(name)}, {terminal(c.terminals[r.terminal])}});
    }
    return g;
}

Grammar construct_cf_minus_regular(const Grammar& g2, const Grammar& g3) {
    require_context_free(g2, "construct_cf_minus_regular");
    if (classify(g3) != ChomskyClass::Type3)
        throw ClassError("construct_cf_minus_regular requires a right-linear negative grammar");
    if (g2.alphabet != g3.alphabet)
        throw AlphabetError("alphabet mismatch between the two grammars");
    return cfg_intersect_dfa(to_cnf(g2), complement(compile_regular(g3)));
}

bool cfg_is_empty(const Grammar& g) {
    require_context_free(g, "cfg_is_empty");
    std::set<std::string> generating;
    for (bool changed = true; changed;) {
        changed = false;
        for (const Production& p : g.productions) {
            if (generating.count(p.lhs[0].name)) continue;
            bool all = std::all_of(p.rhs.begin(), p.rhs.end(), [&](const Symbol& s) {
                return s.kind == SymbolKind::Terminal || generating.count(s.name) > 0;
            });
            if (all) {
                generating.insert(p.lhs[0].name);
                changed = true;
            }
        }
    }
    return !generating.count(g.start);
}

}  // namespace pg
