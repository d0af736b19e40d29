#include <catch2/catch_amalgamated.hpp>

#include <unordered_set>

#include "termforge/lexicon.hpp"
#include "termforge/sentences.hpp"

using namespace termforge;

TEST_CASE("terminator splitting") {
    auto s = sentencize("A cat sat. A dog ran!");
    REQUIRE(s.size() == 2);
    CHECK(s[0] == "A cat sat.");
    CHECK(s[1] == "A dog ran!");
}

TEST_CASE("text without terminators is one sentence") {
    auto s = sentencize("no terminator here");
    REQUIRE(s.size() == 1);
    CHECK(s[0] == "no terminator here");
}

TEST_CASE("blank lines split, single newlines join") {
    auto s = sentencize("line one\n\nline two");
    REQUIRE(s.size() == 2);
    CHECK(s[0] == "line one");
    CHECK(s[1] == "line two");

    auto joined = sentencize("soft\nwrap");
    REQUIRE(joined.size() == 1);
    CHECK(joined[0] == "soft wrap");
}

TEST_CASE("terminator runs stay attached") {
    auto s = sentencize("Really?! Yes.");
    REQUIRE(s.size() == 2);
    CHECK(s[0] == "Really?!");
    CHECK(s[1] == "Yes.");
}

TEST_CASE("dots inside tokens do not split") {
    auto s = sentencize("visit example.com today. done");
    REQUIRE(s.size() == 2);
    CHECK(s[0] == "visit example.com today.");
}

TEST_CASE("retain_sentence needs three lexicon words in a row") {
    const auto& lex = default_lexicon();
    CHECK(retain_sentence("the cat sat quietly", lex));
    CHECK_FALSE(retain_sentence("zxq qwv brzt", lex));
    CHECK(retain_sentence("le chat noir the cat sat", lex));
    CHECK_FALSE(retain_sentence("", lex));
    CHECK_FALSE(retain_sentence("the cat", lex));
}

TEST_CASE("retain_sentence strips surrounding punctuation and case") {
    const auto& lex = default_lexicon();
    CHECK(retain_sentence("\"The cat sat,\" he said.", lex));
    CHECK(retain_sentence("THE CAT SAT", lex));
}

TEST_CASE("retain_sentence run broken by a non-word") {
    std::unordered_set<std::string> lex = {"a", "b", "c"};
    CHECK_FALSE(retain_sentence("a b zz c a", lex));
    CHECK(retain_sentence("zz a b c", lex));
}

TEST_CASE("page_passes is case-sensitive substring matching") {
    CHECK(page_passes("living with fibromyalgia daily",
                      {"Fibromyalgia", "fibromyalgia"}));
    CHECK_FALSE(page_passes("healthy living tips", {"vitiligo", "Vitiligo"}));
    CHECK_FALSE(page_passes("Vitiligo facts", {"vitiligo"}));
    CHECK(page_passes("Vitiligo facts", {"vitiligo", "Vitiligo"}));
}
