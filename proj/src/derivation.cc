#include "pg/derivation.hh"

#include <algorithm>
#include <unordered_map>

#include "pg/errors.hh"

namespace pg {

namespace {

struct FormHash {
    std::size_t operator()(const std::vector<int>& form) const {
        std::size_t h = 1469598103934665603ull;
        for (int v : form) {
            h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Grammar with interned symbols; nonnegative ids, rules in declaration order.
struct Rewriter {
    std::vector<std::string> names;
    std::vector<bool> is_terminal;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> rules;
    int start = 0;

    explicit Rewriter(const Grammar& g) {
        std::unordered_map<std::string, int> ids;
        auto intern = [&](const Symbol& s) {
            auto [it, fresh] = ids.try_emplace(s.name, static_cast<int>(names.size()));
            if (fresh) {
                names.push_back(s.name);
                is_terminal.push_back(s.kind == SymbolKind::Terminal);
            }
            return it->second;
        };
        start = intern(nonterminal(g.start));
        for (const std::string& t : g.alphabet) intern(terminal(t));
        for (const Production& p : g.productions) {
            std::vector<int> lhs, rhs;
            for (const Symbol& s : p.lhs) lhs.push_back(intern(s));
            for (const Symbol& s : p.rhs) rhs.push_back(intern(s));
            rules.push_back({std::move(lhs), std::move(rhs)});
        }
    }

    std::vector<int> intern_word(const Word& w, const Grammar& g) const {
        std::vector<int> out;
        for (const std::string& token : w) {
            if (!g.alphabet.count(token))
                throw AlphabetError("symbol " + token + " is not in the alphabet");
            for (std::size_t id = 0; id < names.size(); ++id)
                if (is_terminal[id] && names[id] == token) {
                    out.push_back(static_cast<int>(id));
                    break;
                }
        }
        return out;
    }

    SententialForm to_form(const std::vector<int>& form) const {
        SententialForm out;
        for (int id : form)
            out.push_back(is_terminal[id] ? terminal(names[id]) : nonterminal(names[id]));
        return out;
    }
};

struct SearchOptions {
    std::size_t max_steps;
    std::size_t max_form_length;
    bool exact_length_prune;  // pruning by length cannot lose derivations
    bool leftmost;            // rewrite only the leftmost nonterminal (context-free)
    bool prune_against_target;
};

struct SearchResult {
    Membership value = Membership::Unknown;
    std::vector<std::vector<int>> trace;
};

// Breadth-first closure of the one-step rewriting relation, deduplicated.
SearchResult search(const Rewriter& rw, const std::vector<int>& target, const SearchOptions& opt) {
    std::unordered_map<std::vector<int>, int, FormHash> visited;
    std::vector<const std::vector<int>*> forms;
    std::vector<int> parent;
    bool lossy_prune = false;

    auto build_trace = [&](int at) {
        std::vector<std::vector<int>> trace;
        for (; at >= 0; at = parent[at]) trace.push_back(*forms[at]);
        std::reverse(trace.begin(), trace.end());
        return trace;
    };

    auto visit = [&](std::vector<int> form, int from) {
        auto [it, fresh] = visited.try_emplace(std::move(form), static_cast<int>(forms.size()));
        if (!fresh) return -1;
        forms.push_back(&it->first);
        parent.push_back(from);
        return it->second;
    };

    std::vector<int> initial{rw.start};
    if (initial == target) return {Membership::In, {initial}};
    visit(std::move(initial), -1);

    std::size_t steps = 0;
    for (std::size_t head = 0; head < forms.size(); ++head) {
        if (steps == opt.max_steps) return {Membership::Unknown, {}};
        ++steps;
        const std::vector<int> form = *forms[head];

        std::size_t first_nt = form.size();
        for (std::size_t i = 0; i < form.size(); ++i)
            if (!rw.is_terminal[form[i]]) {
                first_nt = i;
                break;
            }

        for (std::size_t pos = 0; pos < form.size(); ++pos) {
            if (opt.leftmost && pos != first_nt) continue;
            for (const auto& [lhs, rhs] : rw.rules) {
                if (pos + lhs.size() > form.size()) continue;
                if (!std::equal(lhs.begin(), lhs.end(), form.begin() + pos)) continue;
                std::vector<int> next;
                next.reserve(form.size() - lhs.size() + rhs.size());
                next.insert(next.end(), form.begin(), form.begin() + pos);
                next.insert(next.end(), rhs.begin(), rhs.end());
                next.insert(next.end(), form.begin() + pos + lhs.size(), form.end());

                if (opt.prune_against_target) {
                    std::size_t terminals = 0, prefix = 0;
                    bool before_nt = true, mismatch = false;
                    for (int id : next) {
                        if (!rw.is_terminal[id]) {
                            before_nt = false;
                            continue;
                        }
                        ++terminals;
                        if (before_nt) {
                            if (prefix >= target.size() || target[prefix] != id) mismatch = true;
                            ++prefix;
                        }
                    }
                    if (mismatch || terminals > target.size()) continue;
                }
                if (next.size() > opt.max_form_length) {
                    if (!opt.exact_length_prune) lossy_prune = true;
                    continue;
                }
                bool is_target = next == target;
                int id = visit(std::move(next), static_cast<int>(head));
                if (id >= 0 && is_target) return {Membership::In, build_trace(id)};
            }
        }
    }
    return {lossy_prune ? Membership::Unknown : Membership::NotIn, {}};
}

void require_budget(const Budget& b) {
    if (b.max_steps == 0 || b.max_form_length == 0)
        throw Error("budget fields must be positive");
}

Verdict to_verdict(const Rewriter& rw, SearchResult&& r) {
    Verdict v{r.value, std::nullopt};
    if (r.value == Membership::In) {
        std::vector<SententialForm> evidence;
        for (const auto& form : r.trace) evidence.push_back(rw.to_form(form));
        v.evidence = std::move(evidence);
    }
    return v;
}

}  // namespace

std::string_view membership_name(Membership m) {
    switch (m) {
        case Membership::In: return "in";
        case Membership::NotIn: return "not-in";
        case Membership::Unknown: return "unknown";
    }
    return "unknown";
}

std::string format_form(const SententialForm& f) {
    if (f.empty()) return "eps";
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) out += ' ';
        out += f[i].name;
    }
    return out;
}

Verdict cs_decide(const Grammar& g, const Word& w) {
    if (!is_noncontracting(g)) throw ClassError("grammar is not noncontracting");
    Rewriter rw(g);
    std::vector<int> target = rw.intern_word(w, g);
    if (w.empty()) {
        // Only the permitted start -> eps production can reach the empty word.
        for (const Production& p : g.productions)
            if (p.rhs.empty() && p.lhs.size() == 1 && p.lhs[0].name == g.start) {
                Verdict v{Membership::In, {}};
                v.evidence = {{nonterminal(g.start)}, {}};
                return v;
            }
        return {Membership::NotIn, std::nullopt};
    }
    SearchOptions opt{/*max_steps=*/static_cast<std::size_t>(-1),
                      /*max_form_length=*/w.size(),
                      /*exact_length_prune=*/true,
                      /*leftmost=*/false,
                      /*prune_against_target=*/false};
    return to_verdict(rw, search(rw, target, opt));
}

bool cs_member(const Grammar& g, const Word& w) {
    return cs_decide(g, w).value == Membership::In;
}

Verdict t0_member(const Grammar& g, const Word& w, const Budget& b) {
    require_budget(b);
    Rewriter rw(g);
    std::vector<int> target = rw.intern_word(w, g);
    SearchOptions opt{b.max_steps, b.max_form_length,
                      /*exact_length_prune=*/false,
                      /*leftmost=*/false,
                      /*prune_against_target=*/false};
    return to_verdict(rw, search(rw, target, opt));
}

std::optional<std::vector<SententialForm>> find_cf_derivation(const Grammar& g, const Word& w,
                                                              std::size_t max_steps) {
    if (!is_context_free(g)) throw ClassError("grammar is not context-free");
    Rewriter rw(g);
    std::vector<int> target = rw.intern_word(w, g);
    std::size_t longest_rhs = 0;
    for (const Production& p : g.productions) longest_rhs = std::max(longest_rhs, p.rhs.size());
    SearchOptions opt{max_steps,
                      /*max_form_length=*/2 * w.size() + 4 + longest_rhs,
                      /*exact_length_prune=*/false,
                      /*leftmost=*/true,
                      /*prune_against_target=*/true};
    SearchResult r = search(rw, target, opt);
    if (r.value != Membership::In) return std::nullopt;
    std::vector<SententialForm> evidence;
    for (const auto& form : r.trace) evidence.push_back(rw.to_form(form));
    return evidence;
}

}  // namespace pg
