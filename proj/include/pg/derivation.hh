#ifndef PG_DERIVATION_HH
#define PG_DERIVATION_HH

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "pg/grammar.hh"

namespace pg {

// Resource caps for the sentential-form search. Both fields are positive.
struct Budget {
    std::size_t max_steps = 10000;      // forms expanded
    std::size_t max_form_length = 16;   // longer forms are pruned

    static Budget default_for(const Word& w) { return {10000, 2 * w.size() + 4}; }
    static Budget for_slice(std::size_t max_len) { return {10000, 2 * max_len + 4}; }
};

enum class Membership { In, NotIn, Unknown };

std::string_view membership_name(Membership m);  // "in", "not-in", "unknown"

using SententialForm = std::vector<Symbol>;

std::string format_form(const SententialForm& f);  // "eps" for the empty form

// evidence, when present, is a derivation: it starts at the start symbol, ends
// at the word, and consecutive forms differ by one production application.
// A definitive verdict never changes under a larger budget.
struct Verdict {
    Membership value = Membership::Unknown;
    std::optional<std::vector<SententialForm>> evidence;
};

// Exact decision by saturating search over forms no longer than the word.
// Requires a noncontracting grammar; the empty word reduces to the start ->
// eps production.
bool cs_member(const Grammar& g, const Word& w);

// cs_member with the derivation attached to In verdicts.
Verdict cs_decide(const Grammar& g, const Word& w);

// Breadth-first search with global deduplication. In carries a derivation;
// NotIn is reported only when the form closure is exhausted with no form
// pruned by the length cap.
Verdict t0_member(const Grammar& g, const Word& w, const Budget& b);

// Bounded leftmost search for a derivation of w in a context-free grammar.
// Returns nothing if the caps are hit first.
std::optional<std::vector<SententialForm>> find_cf_derivation(const Grammar& g, const Word& w,
                                                              std::size_t max_steps = 200000);

}  // namespace pg

#endif
