#ifndef PG_PROHIBITION_HH
#define PG_PROHIBITION_HH

#include <optional>
#include <string_view>

#include "pg/automata.hh"
#include "pg/cfg.hh"
#include "pg/derivation.hh"
#include "pg/grammar.hh"

namespace pg {

struct PairClass {
    ChomskyClass positive;
    ChomskyClass negative;

    friend bool operator==(const PairClass&, const PairClass&) = default;
};

std::string format_pair_class(PairClass pc);  // "(2,3)"

PairClass pair_class(const ProhibitionGrammar& pg);

// Membership in the generated language: decidable when both components are
// decidable; one-sided when exactly one component is unrestricted.
enum class DecidabilityStatus { Decidable, SemiDecidable, CoSemiDecidable, NeitherInGeneral };

std::string_view status_name(DecidabilityStatus s);

DecidabilityStatus decidability_status(PairClass pc);

// Difference semantics on component verdicts. A definitive negative-component
// In forces NotIn even when the positive side is still Unknown.
Membership combine_difference(Membership positive, Membership negative);

// One grammar compiled for repeated membership queries. The decision
// procedure follows the grammar class; the budget only matters for Type0.
class GrammarDecider {
  public:
    explicit GrammarDecider(Grammar g);

    ChomskyClass grammar_class() const { return class_; }
    const Grammar& grammar() const { return grammar_; }

    // want_evidence skips derivation extraction for In verdicts when false.
    Verdict decide(const Word& w, const Budget& b, bool want_evidence = true) const;

  private:
    Grammar grammar_;
    ChomskyClass class_;
    std::optional<Dfa> dfa_;
    std::optional<CnfGrammar> cnf_;
};

class ProhibitionDecider {
  public:
    explicit ProhibitionDecider(const ProhibitionGrammar& pg);

    PairClass pair() const { return {positive_.grammar_class(), negative_.grammar_class()}; }
    const GrammarDecider& positive() const { return positive_; }
    const GrammarDecider& negative() const { return negative_; }

    Verdict member(const Word& w, const Budget& b) const;

  private:
    GrammarDecider positive_;
    GrammarDecider negative_;
};

// Convenience entry point; compiles pg once and decides one word.
Verdict member(const ProhibitionGrammar& pg, const Word& w, const Budget& b);

// Inclusion relations between the sixteen pair classes and the four
// conventional classes, kept verbatim as published.
enum class Relation { ProperSubset, SubsetOrEqual, Equal, ProperSuperset, SupersetOrEqual, NotEqual };

std::string_view relation_symbol(Relation r);  // UTF-8 symbol

// Row-versus-column reading: ProperSubset in cell (row, col) states that the
// row class is strictly included in the column class.
Relation pair_pair_relation(PairClass row, PairClass col);
Relation class_pair_relation(ChomskyClass row, PairClass col);

// Keys are "00".."33" for pair classes and "0".."3" for conventional classes.
// One key must be a pair class; unknown cells raise an error.
Relation relation_lookup(std::string_view row, std::string_view col);

std::string render_relation_tables();

}  // namespace pg

#endif
