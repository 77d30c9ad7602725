#include <catch2/catch_amalgamated.hpp>

#include <regex>

#include "srcw/word.hpp"
#include "test_support.hpp"

using namespace srcw;
using namespace srcw::testsupport;

namespace {

// independent pattern oracle for the T1..T4 partition
WordClass oracle_classify(const std::string& s) {
    static const std::regex t1("a*|b*");
    static const std::regex t2("a+b|b+a");
    static const std::regex t3("a+b{2,}|b+a{2,}");
    if (std::regex_match(s, t1)) return WordClass::T1;
    if (std::regex_match(s, t2)) return WordClass::T2;
    if (std::regex_match(s, t3)) return WordClass::T3;
    return WordClass::T4;
}

}  // namespace

TEST_CASE("parse rejects other characters") {
    CHECK_THROWS_AS(Word::parse("abc"), std::invalid_argument);
    CHECK_NOTHROW(Word::parse(""));
    CHECK_NOTHROW(Word::parse("abba"));
}

TEST_CASE("classify examples") {
    CHECK(classify(Word::parse("aaa")) == WordClass::T1);
    CHECK(classify(Word::parse("aab")) == WordClass::T2);
    CHECK(classify(Word::parse("abb")) == WordClass::T3);
    CHECK(classify(Word::parse("aba")) == WordClass::T4);
    CHECK(classify(Word::parse("")) == WordClass::T1);
    CHECK(classify(Word::parse("a")) == WordClass::T1);
    CHECK(classify(Word::parse("ab")) == WordClass::T2);
    CHECK(classify(Word::parse("bba")) == WordClass::T2);
    CHECK(classify(Word::parse("abba")) == WordClass::T4);
}

TEST_CASE("classify agrees with the pattern oracle and is letter-symmetric") {
    for (const Word& w : all_words_up_to(8)) {
        CHECK(classify(w) == oracle_classify(w.str()));
        CHECK(classify(w) == classify(w.mirrored()));
    }
}

TEST_CASE("prefixes, suffixes, factors") {
    auto f = factors(Word::parse("ab"));
    CHECK(f == std::set<Word>{Word::parse(""), Word::parse("a"), Word::parse("b"),
                              Word::parse("ab")});
    auto s = suffixes(Word::parse("aba"));
    CHECK(s == std::set<Word>{Word::parse(""), Word::parse("a"), Word::parse("ba"),
                              Word::parse("aba")});
    CHECK(prefixes(Word()) == std::set<Word>{Word()});

    for (const Word& w : all_words_up_to(6)) {
        auto fac = factors(w);
        CHECK(fac.size() <= w.size() * (w.size() + 1) / 2 + 1);
        for (const Word& p : prefixes(w)) CHECK(fac.count(p) == 1);
        for (const Word& p : suffixes(w)) CHECK(fac.count(p) == 1);
        CHECK(fac.count(w) == 1);
        CHECK(fac.count(Word()) == 1);
    }
}

TEST_CASE("theorem10_applicable") {
    CHECK_THROWS_AS(theorem10_applicable(Word::parse("abb")), std::invalid_argument);
    CHECK(theorem10_applicable(Word::parse("aba")));
    CHECK(theorem10_applicable(Word::parse("abba")));
    // literal condition 2 fires for abab (k = l = 1) even though D(abab) is
    // complete; the predicate reports the statement as written
    CHECK(theorem10_applicable(Word::parse("abab")));
    CHECK(theorem10_applicable(Word::parse("baba")));
}
