#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "termforge/lexicon.hpp"
#include "termforge/porter.hpp"

using namespace termforge;

TEST_CASE("stems the terms that drive the extraction pipeline") {
    CHECK(porter_stem("conditions") == "condit");
    CHECK(porter_stem("diseases") == "diseas");
    CHECK(porter_stem("generalized") == "gener");
    CHECK(porter_stem("autoimmune") == "autoimmun");
    CHECK(porter_stem("treatment") == "treatment");
    CHECK(porter_stem("treatments") == "treatment");
    CHECK(porter_stem("patches") == "patch");
    CHECK(porter_stem("vitiligo") == "vitiligo");
    CHECK(porter_stem("bleaching") == "bleach");
    CHECK(porter_stem("online") == "onlin");
}

TEST_CASE("classic rule examples") {
    CHECK(porter_stem("caresses") == "caress");
    CHECK(porter_stem("ponies") == "poni");
    CHECK(porter_stem("cats") == "cat");
    CHECK(porter_stem("feed") == "feed");
    CHECK(porter_stem("agreed") == "agre");
    CHECK(porter_stem("plastered") == "plaster");
    CHECK(porter_stem("motoring") == "motor");
    CHECK(porter_stem("conflated") == "conflat");
    CHECK(porter_stem("troubled") == "troubl");
    CHECK(porter_stem("sized") == "size");
    CHECK(porter_stem("hopping") == "hop");
    CHECK(porter_stem("tanned") == "tan");
    CHECK(porter_stem("falling") == "fall");
    CHECK(porter_stem("hissing") == "hiss");
    CHECK(porter_stem("fizzed") == "fizz");
    CHECK(porter_stem("failing") == "fail");
    CHECK(porter_stem("filing") == "file");
    CHECK(porter_stem("happy") == "happi");
    CHECK(porter_stem("sky") == "sky");
    CHECK(porter_stem("relational") == "relat");
    CHECK(porter_stem("rational") == "ration");
    CHECK(porter_stem("effective") == "effect");
    CHECK(porter_stem("probate") == "probat");
    CHECK(porter_stem("rate") == "rate");
    CHECK(porter_stem("cease") == "ceas");
    CHECK(porter_stem("controll") == "control");
    CHECK(porter_stem("roll") == "roll");
}

TEST_CASE("short words pass through") {
    CHECK(porter_stem("a") == "a");
    CHECK(porter_stem("le") == "le");
    CHECK(porter_stem("is") == "is");
    CHECK(porter_stem("") == "");
}

TEST_CASE("degenerate suffix-only tokens") {
    CHECK(porter_stem("ies") == "i");
    CHECK(porter_stem("sses") == "ss");
    CHECK(porter_stem("eed") == "eed");
    CHECK(porter_stem("ing") == "ing");
    CHECK(porter_stem("ion") == "ion");
}

TEST_CASE("full fixture vocabulary agrees exactly") {
    std::ifstream in(std::string(TERMFORGE_TEST_DATA_DIR) + "/porter_pairs.tsv");
    REQUIRE(in.is_open());
    std::string line;
    size_t checked = 0, mismatches = 0;
    std::string first_bad;
    while (std::getline(in, line)) {
        size_t tab = line.find('\t');
        REQUIRE(tab != std::string::npos);
        std::string word = line.substr(0, tab);
        std::string want = line.substr(tab + 1);
        std::string got = porter_stem(word);
        if (got != want) {
            if (++mismatches == 1)
                first_bad = word + " -> " + got + " (want " + want + ")";
        }
        ++checked;
    }
    INFO("first mismatch: " << first_bad);
    CHECK(mismatches == 0);
    CHECK(checked > 90000);
}

TEST_CASE("stem_phrase maps element-wise") {
    CHECK(stem_phrase({"white", "patches"}) == std::vector<std::string>{"white", "patch"});
    CHECK(stem_phrase({"skin"}) == std::vector<std::string>{"skin"});
    CHECK(stem_phrase({"vitiligo", "treatments"}) ==
          std::vector<std::string>{"vitiligo", "treatment"});
}

TEST_CASE("non-idempotent lexicon words are exactly the frozen set") {
    std::ifstream in(std::string(TERMFORGE_TEST_DATA_DIR) + "/lexicon_nonidempotent.txt");
    REQUIRE(in.is_open());
    std::unordered_set<std::string> expected;
    std::string w;
    while (in >> w) expected.insert(w);
    REQUIRE(expected.size() == 139);

    size_t violations = 0;
    for (const auto& word : default_lexicon()) {
        std::string s = porter_stem(word);
        if (porter_stem(s) != s) {
            ++violations;
            INFO("unexpected non-idempotent word: " << word);
            CHECK(expected.count(word) == 1);
        }
    }
    CHECK(violations == expected.size());
}
