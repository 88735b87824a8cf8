#include <doctest.h>

#include <string>
#include <vector>

#include "pg/cfg.hh"
#include "pg/derivation.hh"
#include "pg/errors.hh"
#include "pg/grammar.hh"
#include "pg/oracle.hh"
#include "support/corpus.hh"
#include "support/oracles.hh"

using namespace pg;

namespace {

Word make_word(std::size_t a, std::size_t b, std::size_t c = 0) {
    Word w;
    w.insert(w.end(), a, "a");
    w.insert(w.end(), b, "b");
    w.insert(w.end(), c, "c");
    return w;
}

}  // namespace

TEST_CASE("cs_member decides a^n b^n c^n") {
    Grammar g = corpus::load(corpus::kAnBnCn);
    CHECK(cs_member(g, {"a", "b", "c"}));
    CHECK(cs_member(g, make_word(2, 2, 2)));
    CHECK(cs_member(g, make_word(3, 3, 3)));
    CHECK_FALSE(cs_member(g, make_word(2, 2, 1)));
    CHECK_FALSE(cs_member(g, make_word(1, 2, 1)));
    CHECK_FALSE(cs_member(g, {}));  // no start -> eps production

    Grammar with_eps = corpus::load(corpus::kAnBnCnEps);
    CHECK(cs_member(with_eps, {}));
    CHECK(cs_member(with_eps, {"a", "b", "c"}));
    CHECK_FALSE(cs_member(with_eps, {"a", "b"}));
}

TEST_CASE("cs_member slices match the intended languages") {
    LanguageSlice s = slice(
        [g = corpus::load(corpus::kAnBnLong)](const Word& w) { return cs_member(g, w); },
        {"a", "b"}, 8);
    CHECK(s.words == WordSet{make_word(1, 1), make_word(2, 2), make_word(3, 3), make_word(4, 4)});

    LanguageSlice t = slice(
        [g = corpus::load(corpus::kJustAabb)](const Word& w) { return cs_member(g, w); },
        {"a", "b"}, 6);
    CHECK(t.words == WordSet{make_word(2, 2)});
}

TEST_CASE("cs_decide attaches a replayable derivation") {
    Grammar g = corpus::load(corpus::kAnBnCn);
    Word w = make_word(2, 2, 2);
    Verdict v = cs_decide(g, w);
    REQUIRE(v.value == Membership::In);
    REQUIRE(v.evidence.has_value());
    CHECK(oracles::valid_derivation(g, *v.evidence, w));

    Verdict no = cs_decide(g, make_word(2, 1, 2));
    CHECK(no.value == Membership::NotIn);
    CHECK_FALSE(no.evidence.has_value());

    Grammar with_eps = corpus::load(corpus::kAnBnCnEps);
    Verdict eps = cs_decide(with_eps, {});
    REQUIRE(eps.value == Membership::In);
    REQUIRE(eps.evidence.has_value());
    CHECK(oracles::valid_derivation(with_eps, *eps.evidence, {}));
}

TEST_CASE("cs_member enforces its preconditions") {
    CHECK_THROWS_AS(cs_member(corpus::load(corpus::kShrinkJustB), {"b"}), ClassError);
    CHECK_THROWS_AS(cs_member(corpus::load(corpus::kAnBnCn), {"d"}), AlphabetError);
}

TEST_CASE("t0_member finds members with the documented trace") {
    Grammar g = corpus::load(corpus::kAStar);  // S -> a S | eps
    Verdict v = t0_member(g, {"a", "a"}, {50, 10});
    REQUIRE(v.value == Membership::In);
    REQUIRE(v.evidence.has_value());
    std::vector<SententialForm> expected{
        {nonterminal("S")},
        {terminal("a"), nonterminal("S")},
        {terminal("a"), terminal("a"), nonterminal("S")},
        {terminal("a"), terminal("a")}};
    CHECK(*v.evidence == expected);
}

TEST_CASE("t0_member saturates or hits the cap honestly") {
    // Forms of S -> a S a grow forever: the length cap is hit, so no verdict.
    Grammar growing = corpus::load("%alphabet a\n%positive\n%start S\nS -> a S a\n");
    CHECK(t0_member(growing, {"a"}, {100000, 20}).value == Membership::Unknown);

    // A two-form closure is fully explored: non-membership is certain.
    Grammar tiny = corpus::load("%alphabet a b\n%positive\n%start S\nS -> b\n");
    CHECK(t0_member(tiny, {"a"}, {100000, 20}).value == Membership::NotIn);

    // Budget exhaustion by construction.
    CHECK(t0_member(corpus::load(corpus::kAStar), make_word(6, 0), {3, 16}).value ==
          Membership::Unknown);

    CHECK_THROWS_AS(t0_member(tiny, {"a"}, {0, 5}), Error);
}

TEST_CASE("t0_member saturating verdicts on the contracting corpus") {
    Grammar g = corpus::load(corpus::kShrinkJustB);  // exactly {b}
    for (const Word& w : enumerate_words({"a", "b"}, 4)) {
        Verdict v = t0_member(g, w, Budget::default_for(w));
        CAPTURE(format_word(w));
        CHECK(v.value == (w == Word{"b"} ? Membership::In : Membership::NotIn));
        if (v.value == Membership::In) CHECK(oracles::valid_derivation(g, *v.evidence, w));
    }

    Grammar empty = corpus::load(corpus::kSaturatingEmpty);
    CHECK(t0_member(empty, {"a"}, {1000, 10}).value == Membership::NotIn);
    Grammar never = corpus::load(corpus::kGrowingEmpty);
    CHECK(t0_member(never, {"a"}, {1000, 10}).value == Membership::Unknown);
}

TEST_CASE("t0_member never contradicts the dedicated deciders") {
    SUBCASE("against cyk on context-free corpus grammars") {
        for (const std::string& text : {corpus::kAnBn, corpus::kJustAb, corpus::kBalanced}) {
            Grammar g = corpus::load(text);
            CnfGrammar c = to_cnf(g);
            CAPTURE(text);
            for (const Word& w : enumerate_words({"a", "b"}, 6)) {
                Verdict v = t0_member(g, w, {100000, 2 * w.size() + 4});
                if (v.value == Membership::In) {
                    CHECK(cyk_member(c, w));
                    CHECK(oracles::valid_derivation(g, *v.evidence, w));
                }
                if (v.value == Membership::NotIn) CHECK_FALSE(cyk_member(c, w));
                // Members are always found: the search is breadth-first.
                if (cyk_member(c, w)) CHECK(v.value == Membership::In);
            }
        }
    }
    SUBCASE("against cs_member on noncontracting corpus grammars") {
        for (const std::string& text : {corpus::kAnBnCn, corpus::kAnBnLong, corpus::kJustAabb}) {
            Grammar g = corpus::load(text);
            CAPTURE(text);
            std::vector<std::string> sigma(g.alphabet.begin(), g.alphabet.end());
            for (const Word& w : enumerate_words(sigma, 5)) {
                bool in_language = cs_member(g, w);
                Verdict v = t0_member(g, w, {100000, 2 * w.size() + 4});
                if (v.value == Membership::In) CHECK(in_language);
                if (v.value == Membership::NotIn) CHECK_FALSE(in_language);
                if (in_language) CHECK(v.value == Membership::In);
            }
        }
    }
}

TEST_CASE("definitive verdicts survive budget increases") {
    for (const std::string& text :
         {corpus::kAStar, corpus::kShrinkJustB, corpus::kWrappedAStar, corpus::kAnBn}) {
        Grammar g = corpus::load(text);
        CAPTURE(text);
        for (const Word& w : enumerate_words({"a", "b"}, 4)) {
            Verdict small = t0_member(g, w, {40, 8});
            if (small.value == Membership::Unknown) continue;
            for (const Budget& bigger : {Budget{400, 8}, Budget{40, 16}, Budget{4000, 32}}) {
                Verdict again = t0_member(g, w, bigger);
                CAPTURE(format_word(w));
                CHECK(again.value == small.value);
            }
        }
    }
}

TEST_CASE("find_cf_derivation returns a leftmost derivation or nothing") {
    Grammar g = corpus::load(corpus::kAnBn);
    auto trace = find_cf_derivation(g, make_word(3, 3));
    REQUIRE(trace.has_value());
    CHECK(oracles::valid_derivation(g, *trace, make_word(3, 3)));
    CHECK_FALSE(find_cf_derivation(g, make_word(2, 3)).has_value());
    CHECK_THROWS_AS(find_cf_derivation(corpus::load(corpus::kAnBnCn), {"a"}), ClassError);
}

TEST_CASE("budget helpers") {
    Budget d = Budget::default_for(make_word(3, 3));
    CHECK(d.max_steps == 10000);
    CHECK(d.max_form_length == 16);
    Budget s = Budget::for_slice(8);
    CHECK(s.max_form_length == 20);
    CHECK(membership_name(Membership::In) == "in");
    CHECK(membership_name(Membership::NotIn) == "not-in");
    CHECK(membership_name(Membership::Unknown) == "unknown");
    CHECK(format_form({}) == "eps");
    CHECK(format_form({terminal("a"), nonterminal("S")}) == "a S");
}
