#include "pg/oracle.hh"

#include <algorithm>
#include <sstream>

#include "pg/cfg.hh"
#include "pg/prohibition.hh"

namespace pg {

std::vector<Word> enumerate_words(const std::vector<std::string>& alphabet, std::size_t max_len) {
    std::vector<std::string> sigma(alphabet);
    std::sort(sigma.begin(), sigma.end());
    sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());
    if (sigma.empty() && max_len > 0)
        throw AlphabetError("enumerating words requires a nonempty alphabet");

    std::vector<Word> out{Word{}};
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i)
            for (const std::string& t : sigma) {
                Word w = out[i];
                w.push_back(t);
                out.push_back(std::move(w));
            }
        level_begin = level_end;
    }
    return out;
}

namespace detail {

LanguageSlice slice_verdicts(const std::function<Membership(const Word&)>& member,
                             const std::vector<std::string>& alphabet, std::size_t max_len) {
    LanguageSlice s;
    s.alphabet = alphabet;
    std::sort(s.alphabet.begin(), s.alphabet.end());
    s.alphabet.erase(std::unique(s.alphabet.begin(), s.alphabet.end()), s.alphabet.end());
    s.max_len = max_len;
    for (const Word& w : enumerate_words(s.alphabet, max_len)) {
        switch (member(w)) {
            case Membership::In: s.words.insert(w); break;
            case Membership::NotIn: break;
            case Membership::Unknown:
                throw IndefiniteError("membership of " + format_word(w) +
                                      " is unknown within the budget");
        }
    }
    return s;
}

}  // namespace detail

namespace {

std::vector<std::string> sorted_alphabet(const std::set<std::string>& alphabet) {
    return {alphabet.begin(), alphabet.end()};
}

WordSet set_difference(const WordSet& a, const WordSet& b) {
    WordSet out;
    for (const Word& w : a)
        if (!b.count(w)) out.insert(w);
    return out;
}

WordSet set_union(const WordSet& a, const WordSet& b) {
    WordSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

std::optional<Word> first_difference(const WordSet& a, const WordSet& b) {
    WordSet all = set_union(set_difference(a, b), set_difference(b, a));
    if (all.empty()) return std::nullopt;
    return *all.begin();
}

Membership definitive(const GrammarDecider& d, const Word& w, const Budget& b) {
    Membership m = d.decide(w, b, /*want_evidence=*/false).value;
    if (m == Membership::Unknown)
        throw IndefiniteError("membership of " + format_word(w) + " is unknown within the budget");
    return m;
}

}  // namespace

bool check_lemma_identities(const Grammar& decidable_g, const Grammar& enumerable_g,
                            std::size_t max_len, const Budget& budget) {
    if (classify(decidable_g) == ChomskyClass::Type0)
        throw ClassError("check_lemma_identities requires a decidable-class first grammar");
    if (decidable_g.alphabet != enumerable_g.alphabet)
        throw AlphabetError("alphabet mismatch between the two grammars");

    GrammarDecider d(decidable_g), e(enumerable_g);
    std::vector<std::string> sigma = sorted_alphabet(decidable_g.alphabet);

    WordSet universe;
    for (const Word& w : enumerate_words(sigma, max_len)) universe.insert(w);
    LanguageSlice sd = slice([&](const Word& w) { return d.decide(w, budget, false); }, sigma, max_len);
    LanguageSlice se = slice([&](const Word& w) { return e.decide(w, budget, false); }, sigma, max_len);

    // Pointwise difference versus complement-and-union over the slice.
    WordSet pointwise;
    for (const Word& w : universe)
        if (definitive(d, w, budget) == Membership::In && definitive(e, w, budget) == Membership::NotIn)
            pointwise.insert(w);
    WordSet algebraic =
        set_difference(universe, set_union(set_difference(universe, sd.words), se.words));
    if (pointwise != algebraic) return false;

    // The swapped pair, pointwise versus slice difference.
    WordSet swapped;
    for (const Word& w : universe)
        if (definitive(e, w, budget) == Membership::In && definitive(d, w, budget) == Membership::NotIn)
            swapped.insert(w);
    return swapped == set_difference(se.words, sd.words);
}

std::string_view claim_name(Claim c) {
    switch (c) {
        case Claim::T1: return "T1";
        case Claim::T2: return "T2";
        case Claim::T8: return "T8";
        case Claim::T9: return "T9";
        case Claim::P1: return "P1";
    }
    return "T1";
}

Claim parse_claim(std::string_view name) {
    if (name == "T1") return Claim::T1;
    if (name == "T2") return Claim::T2;
    if (name == "T8") return Claim::T8;
    if (name == "T9") return Claim::T9;
    if (name == "P1") return Claim::P1;
    throw Error("unknown claim " + std::string(name));
}

bool RelationReport::all_consistent() const {
    return std::all_of(instances.begin(), instances.end(),
                       [](const InstanceOutcome& o) { return o.consistent; });
}

std::string to_string(const RelationReport& report) {
    std::ostringstream out;
    out << "claim " << claim_name(report.claim) << '\n';
    out << "max-len " << report.max_len << '\n';
    out << "instances " << report.instances.size() << '\n';
    for (std::size_t i = 0; i < report.instances.size(); ++i) {
        const InstanceOutcome& o = report.instances[i];
        out << "instance " << (i + 1) << ": " << (o.consistent ? "consistent" : "violated");
        if (o.witness) out << " (witness: " << format_word(*o.witness) << ')';
        out << '\n';
    }
    out << "result: " << (report.all_consistent() ? "consistent" : "violated") << '\n';
    return out.str();
}

namespace {

InstanceOutcome check_t1(const ProhibitionGrammar& pg, std::size_t max_len, const Budget& budget) {
    const Grammar& neg = pg.negative;
    bool empty_negative =
        neg.productions.empty() ||
        (classify(neg) != ChomskyClass::Type0 && classify(neg) != ChomskyClass::Type1 &&
         cfg_is_empty(neg));
    if (!empty_negative)
        throw ClassError("claim T1 requires a negative component with the empty language");
    ProhibitionDecider pair(pg);
    GrammarDecider alone(pg.positive);
    for (const Word& w : enumerate_words(sorted_alphabet(pg.alphabet()), max_len)) {
        Membership with_pair = pair.member(w, budget).value;
        Membership bare = alone.decide(w, budget, false).value;
        if (with_pair != bare) return {false, w};
    }
    return {true, std::nullopt};
}

InstanceOutcome check_t2(const ProhibitionGrammar& pg, std::size_t max_len) {
    if (classify(pg.positive) != ChomskyClass::Type3 || classify(pg.negative) != ChomskyClass::Type3)
        throw ClassError("claim T2 requires a (3,3) pair");
    std::vector<std::string> sigma = sorted_alphabet(pg.alphabet());
    Dfa da = compile_regular(pg.positive);
    Dfa db = compile_regular(pg.negative);

    Grammar constructed = construct_regular_difference(pg.positive, pg.negative);
    if (classify(constructed) != ChomskyClass::Type3) return {false, std::nullopt};
    Dfa dd = compile_regular(constructed);

    LanguageSlice by_construction =
        slice([&](const Word& w) { return dfa_member(dd, w); }, sigma, max_len);
    WordSet by_words;
    for (const Word& w : enumerate_words(sigma, max_len))
        if (dfa_member(da, w) && !dfa_member(db, w)) by_words.insert(w);
    if (by_construction.words != by_words)
        return {false, first_difference(by_construction.words, by_words)};

    Word counterexample;
    if (!equivalent(dd, minimize(difference(da, db)), &counterexample))
        return {false, counterexample};
    return {true, std::nullopt};
}

InstanceOutcome check_t8(const ProhibitionGrammar& pg, std::size_t max_len) {
    if (!is_noncontracting(pg.positive) || !is_noncontracting(pg.negative))
        throw ClassError("claim T8 requires a noncontracting pair");
    std::vector<std::string> sigma = sorted_alphabet(pg.alphabet());
    WordSet pointwise;
    for (const Word& w : enumerate_words(sigma, max_len))
        if (cs_member(pg.positive, w) && !cs_member(pg.negative, w)) pointwise.insert(w);
    LanguageSlice sp = slice([&](const Word& w) { return cs_member(pg.positive, w); }, sigma, max_len);
    LanguageSlice sn = slice([&](const Word& w) { return cs_member(pg.negative, w); }, sigma, max_len);
    WordSet algebraic = set_difference(sp.words, sn.words);
    if (pointwise != algebraic) return {false, first_difference(pointwise, algebraic)};
    return {true, std::nullopt};
}

InstanceOutcome check_t9(const ProhibitionGrammar& pg, std::size_t max_len) {
    ChomskyClass cp = classify(pg.positive);
    if ((cp != ChomskyClass::Type2 && cp != ChomskyClass::Type3) ||
        classify(pg.negative) != ChomskyClass::Type3)
        throw ClassError("claim T9 requires a context-free positive and right-linear negative");
    std::vector<std::string> sigma = sorted_alphabet(pg.alphabet());
    Grammar constructed = construct_cf_minus_regular(pg.positive, pg.negative);
    ChomskyClass cc = classify(constructed);
    if (cc != ChomskyClass::Type2 && cc != ChomskyClass::Type3) return {false, std::nullopt};

    CnfGrammar cnf_diff = to_cnf(constructed);
    CnfGrammar cnf_pos = to_cnf(pg.positive);
    Dfa dn = compile_regular(pg.negative);
    LanguageSlice by_construction =
        slice([&](const Word& w) { return cyk_member(cnf_diff, w); }, sigma, max_len);
    WordSet by_words;
    for (const Word& w : enumerate_words(sigma, max_len))
        if (cyk_member(cnf_pos, w) && !dfa_member(dn, w)) by_words.insert(w);
    if (by_construction.words != by_words)
        return {false, first_difference(by_construction.words, by_words)};
    return {true, std::nullopt};
}

InstanceOutcome check_p1(const ProhibitionGrammar& pg, std::size_t max_len) {
    ChomskyClass cn = classify(pg.negative);
    if (classify(pg.positive) != ChomskyClass::Type3 ||
        (cn != ChomskyClass::Type2 && cn != ChomskyClass::Type3))
        throw ClassError("claim P1 requires a right-linear positive and context-free negative");
    std::vector<std::string> sigma = sorted_alphabet(pg.alphabet());
    Dfa dr = compile_regular(pg.positive);
    CnfGrammar cnf_neg = to_cnf(pg.negative);

    WordSet universe, pointwise;
    for (const Word& w : enumerate_words(sigma, max_len)) {
        universe.insert(w);
        if (dfa_member(dr, w) && !cyk_member(cnf_neg, w)) pointwise.insert(w);
    }
    Dfa complement_r = complement(dr);
    LanguageSlice sc = slice([&](const Word& w) { return dfa_member(complement_r, w); }, sigma, max_len);
    LanguageSlice sn = slice([&](const Word& w) { return cyk_member(cnf_neg, w); }, sigma, max_len);
    WordSet algebraic = set_difference(universe, set_union(sc.words, sn.words));
    if (pointwise != algebraic) return {false, first_difference(pointwise, algebraic)};
    return {true, std::nullopt};
}

}  // namespace

RelationReport verify_relation(Claim claim, const std::vector<ProhibitionGrammar>& instances,
                               std::size_t max_len, const Budget& budget) {
    RelationReport report{claim, max_len, {}};
    for (const ProhibitionGrammar& pg : instances) {
        switch (claim) {
            case Claim::T1: report.instances.push_back(check_t1(pg, max_len, budget)); break;
            case Claim::T2: report.instances.push_back(check_t2(pg, max_len)); break;
            case Claim::T8: report.instances.push_back(check_t8(pg, max_len)); break;
            case Claim::T9: report.instances.push_back(check_t9(pg, max_len)); break;
            case Claim::P1: report.instances.push_back(check_p1(pg, max_len)); break;
        }
    }
    return report;
}

}  // namespace pg
