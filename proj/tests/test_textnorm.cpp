#include <catch2/catch_amalgamated.hpp>

#include "termforge/common.hpp"
#include "termforge/stopwords.hpp"
#include "termforge/textnorm.hpp"

using namespace termforge;

static std::vector<std::string> norm(const std::string& text, const NormOptions& opts = {}) {
    return normalize(text, opts).tokens;
}

TEST_CASE("digits are spelled out one per digit") {
    CHECK(norm("19") == std::vector<std::string>{"one", "nine"});
    CHECK(norm("2024") == std::vector<std::string>{"two", "zero", "two", "four"});
    CHECK(norm("0") == std::vector<std::string>{"zero"});
}

TEST_CASE("mixed alphanumeric tokens spell digit runs in place") {
    CHECK(norm("b12") == std::vector<std::string>{"b", "one", "two"});
    CHECK(norm("ab12cd3") == std::vector<std::string>{"ab", "one", "two", "cd", "three"});
}

TEST_CASE("case folding and punctuation stripping") {
    CHECK(norm("Fibromyalgia!") == std::vector<std::string>{"fibromyalgia"});
    CHECK(norm("It's caf\xc3\xa9 time.") == std::vector<std::string>{"its", "caf", "time"});
    CHECK(norm("  spaced\tout  ") == std::vector<std::string>{"spaced", "out"});
}

TEST_CASE("hyphens fuse by default and split on request") {
    CHECK(norm("chronic-fatigue") == std::vector<std::string>{"chronicfatigue"});
    NormOptions split;
    split.split_hyphens = true;
    CHECK(norm("chronic-fatigue", split) == std::vector<std::string>{"chronic", "fatigue"});
}

TEST_CASE("the stopped sentence from the worked example") {
    NormOptions opts;
    opts.stoplist = default_stoplist();
    auto tokens = norm(
        "Individuals with vitiligo feel self conscious about their appearance "
        "and have a poor self image that stems from fear of public rejection "
        "and psychosexual concerns",
        opts);
    std::vector<std::string> want = {"individuals", "vitiligo",     "feel",
                                     "conscious",   "appearance",   "poor",
                                     "image",       "stems",        "fear",
                                     "public",      "rejection",    "psychosexual",
                                     "concerns"};
    CHECK(tokens == want);
}

TEST_CASE("stoplist never reorders survivors") {
    NormOptions opts;
    opts.stoplist = {"b", "d"};
    CHECK(norm("a b c d e", opts) == std::vector<std::string>{"a", "c", "e"});
}

TEST_CASE("reserved tokens bypass every rule") {
    NormOptions opts;
    opts.stoplist = default_stoplist();
    opts.reserved = {"VVV"};
    CHECK(norm("The VVV Label!", opts) == std::vector<std::string>{"VVV", "label"});
}

TEST_CASE("empty and whitespace inputs give empty streams") {
    CHECK(norm("").empty());
    CHECK(norm("   \n\t ").empty());
    CHECK(norm("!!! ... ???").empty());
}

TEST_CASE("sentence bounds partition the token list") {
    auto ts = normalize("one line here\nand another\n\nthird");
    REQUIRE(ts.sentence_bounds.size() == 3);
    CHECK(ts.sentence_bounds[0] == std::pair<size_t, size_t>{0, 3});
    CHECK(ts.sentence_bounds[1] == std::pair<size_t, size_t>{3, 5});
    CHECK(ts.sentence_bounds[2] == std::pair<size_t, size_t>{5, 6});
    CHECK(ts.tokens.size() == 6);
}

TEST_CASE("normalize is idempotent on its own output") {
    NormOptions opts;
    opts.stoplist = default_stoplist();
    std::vector<std::string> inputs = {
        "The Quick-Brown Fox #42 jumped!",
        "b12 deficiency at 19",
        "Individuals with vitiligo feel self conscious",
    };
    for (const auto& text : inputs) {
        auto once = norm(text, opts);
        auto twice = norm(join(once, " "), opts);
        CHECK(once == twice);
    }
}

TEST_CASE("digit spelling length equals digit count") {
    for (const std::string t : {"7", "42", "1998", "00"}) {
        auto tokens = norm(t);
        CHECK(tokens.size() == t.size());
    }
}

TEST_CASE("stoplist text loader normalizes entries") {
    auto set = load_stoplist_text("The\nself\nDon't\n");
    CHECK(set.count("the"));
    CHECK(set.count("self"));
    CHECK(set.count("dont"));
    CHECK(set.size() == 3);
}
