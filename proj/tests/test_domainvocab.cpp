#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "termforge/domainvocab.hpp"
#include "termforge/embedding.hpp"

using namespace termforge;

namespace {

TokenStream stream_of(std::vector<std::string> tokens) {
    TokenStream ts;
    ts.tokens = std::move(tokens);
    if (!ts.tokens.empty()) ts.sentence_bounds.emplace_back(0, ts.tokens.size());
    return ts;
}

EmbeddingModel explicit_model(const std::vector<std::pair<std::string, std::vector<float>>>& rows) {
    EmbeddingModel m;
    m.dim = static_cast<int>(rows.front().second.size());
    for (const auto& [word, vec] : rows) {
        m.vocab.index.emplace(word, static_cast<int>(m.vocab.words.size()));
        m.vocab.words.push_back(word);
        m.vocab.counts.push_back(1);
        m.vocab.total_count += 1;
        m.w_in.insert(m.w_in.end(), vec.begin(), vec.end());
    }
    m.w_out.assign(m.w_in.size(), 0.0f);
    return m;
}

int zipf_draw(const std::vector<double>& cumulative, std::mt19937_64& rng) {
    double u = static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0) * cumulative.back();
    return static_cast<int>(std::upper_bound(cumulative.begin(), cumulative.end(), u) -
                            cumulative.begin());
}

// A domain text where 20 marker words occur nowhere else, mixed 50/50 with
// ordinary background vocabulary, plus a large Zipf-distributed background.
struct PlantedCorpus {
    TokenStream background;
    TokenStream domain;
    std::vector<std::string> markers;
};

PlantedCorpus planted_corpus(size_t background_tokens, size_t domain_tokens, uint64_t seed) {
    PlantedCorpus pc;
    std::mt19937_64 rng(seed);

    std::vector<std::string> bg_vocab;
    for (int i = 0; i < 500; ++i) {
        std::string w = "bg";
        w += static_cast<char>('a' + i / 26 % 26);
        w += static_cast<char>('a' + i % 26);
        w += static_cast<char>('a' + i / 676);
        bg_vocab.push_back(w);
    }
    std::vector<double> cumulative;
    double total = 0.0;
    for (size_t i = 0; i < bg_vocab.size(); ++i) {
        total += 1.0 / static_cast<double>(i + 1);
        cumulative.push_back(total);
    }

    for (int i = 0; i < 20; ++i)
        pc.markers.push_back("marker" + std::string(1, static_cast<char>('a' + i)));

    for (size_t i = 0; i < background_tokens; ++i) {
        if (i % 20 == 0) pc.background.sentence_bounds.emplace_back(i, 0);
        pc.background.tokens.push_back(bg_vocab[static_cast<size_t>(zipf_draw(cumulative, rng))]);
    }
    for (size_t i = 0; i < domain_tokens; ++i) {
        if (i % 20 == 0) pc.domain.sentence_bounds.emplace_back(i, 0);
        if (i % 2 == 0)
            pc.domain.tokens.push_back(pc.markers[rng() % pc.markers.size()]);
        else
            pc.domain.tokens.push_back(bg_vocab[static_cast<size_t>(zipf_draw(cumulative, rng))]);
    }
    for (auto* ts : {&pc.background, &pc.domain})
        for (size_t i = 0; i < ts->sentence_bounds.size(); ++i)
            ts->sentence_bounds[i].second = std::min(ts->sentence_bounds[i].first + 20,
                                                     ts->tokens.size());
    return pc;
}

}  // namespace

TEST_CASE("interleave places the label between every pair of words") {
    LabelSpec vvv{"VVV"};
    TokenStream in = stream_of({"individuals", "vitiligo", "feel"});
    CHECK(interleave_label(in, vvv).tokens ==
          std::vector<std::string>{"individuals", "VVV", "vitiligo", "VVV", "feel"});

    CHECK(interleave_label(stream_of({"pain"}), vvv).tokens == std::vector<std::string>{"pain"});
    CHECK(interleave_label(TokenStream{}, vvv).tokens.empty());
}

TEST_CASE("interleave length law and inversion") {
    LabelSpec spec;
    std::mt19937_64 rng(88);
    for (int trial = 0; trial < 50; ++trial) {
        TokenStream in;
        size_t n = rng() % 60;
        for (size_t i = 0; i < n; ++i) in.tokens.push_back("w" + std::to_string(rng() % 25));

        TokenStream out = interleave_label(in, spec);
        size_t expect = in.tokens.empty() ? 0 : 2 * in.tokens.size() - 1;
        CHECK(out.tokens.size() == expect);

        std::vector<std::string> recovered;
        for (const auto& t : out.tokens)
            if (t != spec.label) recovered.push_back(t);
        CHECK(recovered == in.tokens);
    }
}

TEST_CASE("interleave rejects a label that is already a domain token") {
    LabelSpec spec{"VVV"};
    CHECK_THROWS_WITH(interleave_label(stream_of({"a", "VVV", "b"}), spec),
                      Catch::Matchers::ContainsSubstring("collision"));
}

TEST_CASE("combined corpus is background then labeled domain") {
    TokenStream combined =
        build_combined_corpus(stream_of({"a", "VVV", "b"}), stream_of({"x", "y"}));
    CHECK(combined.tokens == std::vector<std::string>{"x", "y", "a", "VVV", "b"});

    TokenStream only_domain = build_combined_corpus(stream_of({"a", "VVV", "b"}), TokenStream{});
    CHECK(only_domain.tokens == std::vector<std::string>{"a", "VVV", "b"});

    size_t covered = 0;
    for (auto [b, e] : combined.sentence_bounds) {
        CHECK(b == covered);
        covered = e;
    }
    CHECK(covered == combined.tokens.size());
}

TEST_CASE("characteristic vocabulary excludes the label and honors k") {
    EmbeddingModel m = explicit_model({{"XDOMAINX", {1.0f, 0.0f}},
                                       {"close", {0.9f, 0.1f}},
                                       {"closer", {0.99f, 0.01f}},
                                       {"far", {0.0f, 1.0f}}});
    LabelSpec spec;

    auto top = characteristic_vocab(m, spec, 2);
    REQUIRE(top.size() == 2);
    CHECK(top[0].word == "closer");
    CHECK(top[1].word == "close");

    auto all = characteristic_vocab(m, spec, 100);
    CHECK(all.size() == 3);
    for (const auto& nb : all) CHECK(nb.word != spec.label);
}

TEST_CASE("a label dropped by min_count is reported with advice") {
    EmbeddingModel m = explicit_model({{"alpha", {1.0f, 0.0f}}, {"beta", {0.0f, 1.0f}}});
    CHECK_THROWS_WITH(characteristic_vocab(m, LabelSpec{}, 5),
                      Catch::Matchers::ContainsSubstring("min_count"));
}

TEST_CASE("expansion unions seed neighborhoods with provenance") {
    EmbeddingModel m = explicit_model({{"seed1", {1.0f, 0.0f, 0.0f}},
                                       {"seed2", {0.0f, 1.0f, 0.0f}},
                                       {"nearboth", {0.7f, 0.7f, 0.1f}},
                                       {"near1", {0.95f, 0.05f, 0.0f}},
                                       {"near2", {0.05f, 0.95f, 0.0f}},
                                       {"offaxis", {0.0f, 0.0f, 1.0f}}});

    ExpansionResult r = expand_terms(m, {"seed1", "seed2"}, 2);
    CHECK(r.warnings.empty());

    std::unordered_map<std::string, ExpandedTerm> by_word;
    for (const auto& t : r.terms) by_word[t.word] = t;

    REQUIRE(by_word.count("seed1"));
    REQUIRE(by_word.count("seed2"));
    REQUIRE(by_word.count("nearboth"));
    CHECK(by_word["nearboth"].provenance == std::vector<std::string>{"seed1", "seed2"});
    CHECK(by_word["near1"].provenance == std::vector<std::string>{"seed1"});
    CHECK(by_word["seed1"].provenance == std::vector<std::string>{"seed1"});
    CHECK(by_word["seed1"].cosine == 1.0);
    CHECK(!by_word.count("offaxis"));
    CHECK(r.terms.size() <= 2 + 2 * 2);
}

TEST_CASE("expansion is a superset of seeds and ignores seed order") {
    std::mt19937_64 rng(4242);
    EmbeddingModel m;
    {
        std::vector<std::pair<std::string, std::vector<float>>> rows;
        for (int i = 0; i < 60; ++i) {
            std::vector<float> v;
            for (int d = 0; d < 6; ++d)
                v.push_back(static_cast<float>((rng() >> 11) * (1.0 / 9007199254740992.0) - 0.5));
            rows.emplace_back("word" + std::to_string(i), v);
        }
        m = explicit_model(rows);
    }

    std::vector<std::string> seeds = {"word3", "word14", "word15", "word9", "word26"};
    ExpansionResult a = expand_terms(m, seeds, 5);

    for (const auto& s : seeds) {
        bool found = false;
        for (const auto& t : a.terms) found = found || t.word == s;
        CHECK(found);
    }

    std::vector<std::string> shuffled = {"word26", "word9", "word3", "word15", "word14"};
    ExpansionResult b = expand_terms(m, shuffled, 5);
    REQUIRE(a.terms.size() == b.terms.size());
    for (size_t i = 0; i < a.terms.size(); ++i) {
        CHECK(a.terms[i].word == b.terms[i].word);
        CHECK(a.terms[i].cosine == b.terms[i].cosine);
        CHECK(a.terms[i].provenance == b.terms[i].provenance);
    }

    ExpansionResult two_rounds = expand_terms(m, seeds, 5, 2);
    CHECK(two_rounds.terms.size() >= a.terms.size());
}

TEST_CASE("expansion skips unknown seeds with a warning and validates k") {
    EmbeddingModel m = explicit_model({{"alpha", {1.0f, 0.2f}}, {"beta", {0.2f, 1.0f}}});
    ExpansionResult r = expand_terms(m, {"alpha", "ghost"}, 5);
    REQUIRE(r.warnings.size() == 1);
    CHECK(r.warnings[0].find("ghost") != std::string::npos);
    REQUIRE(r.terms.size() == 2);

    CHECK_THROWS_AS(expand_terms(m, {"alpha"}, 0), std::invalid_argument);
    CHECK_THROWS_AS(expand_terms(m, {"alpha"}, 5, 0), std::invalid_argument);
}

TEST_CASE("identical seeds share a neighborhood") {
    EmbeddingModel m = explicit_model({{"twina", {1.0f, 0.0f}},
                                       {"twinb", {1.0f, 0.0f}},
                                       {"other", {0.0f, 1.0f}}});
    ExpansionResult r = expand_terms(m, {"twina", "twinb"}, 1);
    REQUIRE(r.terms.size() == 2);
    for (const auto& t : r.terms)
        CHECK(t.provenance == std::vector<std::string>{"twina", "twinb"});
}

TEST_CASE("frequent long words filter, rank, and tie-break") {
    TokenStream ts = stream_of({"cat", "health", "health", "doctor"});
    CHECK(frequent_long_words(ts, 2) == std::vector<std::string>{"health", "doctor"});

    TokenStream few = stream_of({"painful", "painful", "chronic", "fatigue", "act"});
    CHECK(frequent_long_words(few, 10) ==
          std::vector<std::string>{"painful", "chronic", "fatigue"});

    CHECK(frequent_long_words(stream_of({"zebra9", "apple9"}), 10) ==
          std::vector<std::string>{"apple9", "zebra9"});
}

TEST_CASE("frequent long words match a planted histogram") {
    std::vector<std::pair<std::string, int>> plan = {
        {"treatment", 90}, {"disease", 80}, {"patches", 80}, {"therapy", 55},
        {"chronic", 41},   {"symptom", 41}, {"fatigue", 30}, {"doctors", 22},
        {"pigment", 21},   {"receive", 20}, {"overall", 19}, {"cat", 400},
        {"dog", 300},      {"skin", 200}};
    TokenStream ts;
    std::unordered_map<std::string, int> expect_counts;
    for (auto& [w, c] : plan) {
        for (int i = 0; i < c; ++i) ts.tokens.push_back(w);
        if (w.size() >= 6 && c > 0) expect_counts[w] = c;
    }
    std::mt19937_64 rng(17);
    std::shuffle(ts.tokens.begin(), ts.tokens.end(), rng);

    std::vector<std::pair<std::string, int>> expect(expect_counts.begin(), expect_counts.end());
    std::sort(expect.begin(), expect.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    expect.resize(10);
    std::vector<std::string> expect_words;
    for (auto& [w, c] : expect) expect_words.push_back(w);

    CHECK(frequent_long_words(ts, 10) == expect_words);
}

TEST_CASE("planted markers dominate the words nearest the label") {
    PlantedCorpus pc = planted_corpus(100000, 5000, 20240817);
    LabelSpec spec;

    TokenStream labeled = interleave_label(pc.domain, spec);
    CHECK(labeled.tokens.size() == 2 * pc.domain.tokens.size() - 1);
    TokenStream combined = build_combined_corpus(labeled, pc.background);
    REQUIRE(combined.tokens.size() == pc.background.tokens.size() + labeled.tokens.size());

    TrainParams p;
    p.mode = TrainParams::Mode::cbow;
    p.dim = 50;
    p.window = 8;
    p.negatives = 15;
    p.sample = 1e-4;
    p.iters = 15;
    p.min_count = 5;
    p.rng_seed = 13;
    EmbeddingModel m = train(combined, p);

    REQUIRE(m.vocab.lookup(spec.label) >= 0);
    auto top = characteristic_vocab(m, spec, 40);
    REQUIRE(top.size() == 40);

    int recalled = 0;
    for (const auto& marker : pc.markers)
        for (const auto& nb : top)
            if (nb.word == marker) {
                ++recalled;
                break;
            }
    INFO("marker recall " << recalled << "/20");
    CHECK(recalled >= 16);

    std::vector<std::string> seed_words;
    for (const auto& nb : top) seed_words.push_back(nb.word);
    ExpansionResult expanded = expand_terms(m, seed_words, 5);
    CHECK(expanded.terms.size() > seed_words.size());
}
