#include "pg/prohibition.hh"

#include "pg/errors.hh"

namespace pg {

std::string format_pair_class(PairClass pc) {
    return "(" + std::to_string(class_level(pc.positive)) + "," +
           std::to_string(class_level(pc.negative)) + ")";
}

PairClass pair_class(const ProhibitionGrammar& pg) {
    return {classify(pg.positive), classify(pg.negative)};
}

std::string_view status_name(DecidabilityStatus s) {
    switch (s) {
        case DecidabilityStatus::Decidable: return "decidable";
        case DecidabilityStatus::SemiDecidable: return "semi-decidable";
        case DecidabilityStatus::CoSemiDecidable: return "co-semi-decidable";
        case DecidabilityStatus::NeitherInGeneral: return "neither-in-general";
    }
    return "neither-in-general";
}

DecidabilityStatus decidability_status(PairClass pc) {
    bool positive_decidable = pc.positive != ChomskyClass::Type0;
    bool negative_decidable = pc.negative != ChomskyClass::Type0;
    if (positive_decidable && negative_decidable) return DecidabilityStatus::Decidable;
    if (!positive_decidable && negative_decidable) return DecidabilityStatus::SemiDecidable;
    if (positive_decidable && !negative_decidable) return DecidabilityStatus::CoSemiDecidable;
    return DecidabilityStatus::NeitherInGeneral;
}

Membership combine_difference(Membership positive, Membership negative) {
    if (positive == Membership::NotIn) return Membership::NotIn;
    if (negative == Membership::In) return Membership::NotIn;
    if (positive == Membership::In && negative == Membership::NotIn) return Membership::In;
    return Membership::Unknown;
}

GrammarDecider::GrammarDecider(Grammar g) : grammar_(std::move(g)), class_(classify(grammar_)) {
    switch (class_) {
        case ChomskyClass::Type3: dfa_ = compile_regular(grammar_); break;
        case ChomskyClass::Type2: cnf_ = to_cnf(grammar_); break;
        default: break;
    }
}

Verdict GrammarDecider::decide(const Word& w, const Budget& b, bool want_evidence) const {
    for (const std::string& token : w)
        if (!grammar_.alphabet.count(token))
            throw AlphabetError("symbol " + token + " is not in the alphabet");
    switch (class_) {
        case ChomskyClass::Type3:
        case ChomskyClass::Type2: {
            bool in = class_ == ChomskyClass::Type3 ? dfa_member(*dfa_, w) : cyk_member(*cnf_, w);
            if (!in) return {Membership::NotIn, std::nullopt};
            Verdict v{Membership::In, std::nullopt};
            if (want_evidence) v.evidence = find_cf_derivation(grammar_, w);
            return v;
        }
        case ChomskyClass::Type1: return cs_decide(grammar_, w);
        case ChomskyClass::Type0: return t0_member(grammar_, w, b);
    }
    return {Membership::Unknown, std::nullopt};
}

ProhibitionDecider::ProhibitionDecider(const ProhibitionGrammar& pg)
    : positive_(pg.positive), negative_(pg.negative) {
    if (pg.positive.alphabet != pg.negative.alphabet)
        throw AlphabetError("positive and negative grammars must share one alphabet");
}

Verdict ProhibitionDecider::member(const Word& w, const Budget& b) const {
    Verdict p = positive_.decide(w, b);
    if (p.value == Membership::NotIn) return {Membership::NotIn, std::nullopt};
    Verdict q = negative_.decide(w, b, /*want_evidence=*/false);
    Membership value = combine_difference(p.value, q.value);
    Verdict out{value, std::nullopt};
    if (value == Membership::In) out.evidence = std::move(p.evidence);
    return out;
}

Verdict member(const ProhibitionGrammar& pg, const Word& w, const Budget& b) {
    return ProhibitionDecider(pg).member(w, b);
}

}  // namespace pg
