#ifndef PG_ORACLE_HH
#define PG_ORACLE_HH

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

#include "pg/derivation.hh"
#include "pg/errors.hh"
#include "pg/grammar.hh"

namespace pg {

using WordSet = std::set<Word, ShortlexLess>;

// All words over the alphabet up to max_len, materialized.
struct LanguageSlice {
    std::vector<std::string> alphabet;
    std::size_t max_len = 0;
    WordSet words;

    friend bool operator==(const LanguageSlice&, const LanguageSlice&) = default;
};

// Every word of length at most max_len in length-then-lexicographic order.
// An empty alphabet is only meaningful for max_len == 0.
std::vector<Word> enumerate_words(const std::vector<std::string>& alphabet, std::size_t max_len);

namespace detail {
LanguageSlice slice_verdicts(const std::function<Membership(const Word&)>& member,
                             const std::vector<std::string>& alphabet, std::size_t max_len);
}

// Materializes the language up to max_len. The membership function must be
// definitive on every probed word: Unknown raises an error naming the word.
// Boolean membership functions are accepted as already definitive.
template <class MemberFn>
LanguageSlice slice(MemberFn&& member, const std::vector<std::string>& alphabet,
                    std::size_t max_len) {
    return detail::slice_verdicts(
        [&](const Word& w) -> Membership {
            if constexpr (std::is_same_v<std::invoke_result_t<MemberFn&, const Word&>, bool>)
                return member(w) ? Membership::In : Membership::NotIn;
            else
                return member(w).value;
        },
        alphabet, max_len);
}

// Verifies, on the slice up to max_len, the two set identities behind the
// reduction of a difference to complement and union:
//   L(D) minus L(E)  =  Sigma* minus ((Sigma* minus L(D)) union L(E))
// and the pointwise difference of the swapped pair. The first grammar must be
// of a decidable class; budget applies if the second is unrestricted.
bool check_lemma_identities(const Grammar& decidable_g, const Grammar& enumerable_g,
                            std::size_t max_len, const Budget& budget = Budget{});

// Constructive claims checkable at slice level.
//   T1: an empty negative component never changes a verdict
//   T2: the regular-difference construction is exact (plus automata equality)
//   T8: the noncontracting difference decider matches the slice difference
//   T9: the context-free-minus-regular construction is exact
//   P1: regular minus context-free equals the complement of a union
enum class Claim { T1, T2, T8, T9, P1 };

std::string_view claim_name(Claim c);
Claim parse_claim(std::string_view name);

struct InstanceOutcome {
    bool consistent = false;
    std::optional<Word> witness;  // a word separating the two routes
};

struct RelationReport {
    Claim claim;
    std::size_t max_len = 0;
    std::vector<InstanceOutcome> instances;

    bool all_consistent() const;
};

std::string to_string(const RelationReport& report);

// Checks one claim against concrete grammar pairs; class signatures are
// enforced per claim. The budget only matters for unrestricted components.
RelationReport verify_relation(Claim claim, const std::vector<ProhibitionGrammar>& instances,
                               std::size_t max_len, const Budget& budget = Budget{});

}  // namespace pg

#endif
