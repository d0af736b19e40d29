#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "termforge/embedding.hpp"
#include "termforge/textnorm.hpp"

using namespace termforge;

namespace {

// Two disjoint clusters of words; sentences draw from a single cluster, so
// words only ever co-occur with their own cluster.
TokenStream cluster_corpus(int sentences_per_cluster, int sentence_len, uint64_t seed) {
    std::vector<std::string> a = {"alder", "aspen", "acacia", "almond", "apricot"};
    std::vector<std::string> b = {"basalt", "breccia", "bauxite", "borax", "barite"};
    std::mt19937_64 rng(seed);
    TokenStream ts;
    for (int s = 0; s < 2 * sentences_per_cluster; ++s) {
        const auto& pool = (s % 2 == 0) ? a : b;
        size_t begin = ts.tokens.size();
        for (int i = 0; i < sentence_len; ++i)
            ts.tokens.push_back(pool[rng() % pool.size()]);
        ts.sentence_bounds.emplace_back(begin, ts.tokens.size());
    }
    return ts;
}

TrainParams small_params(TrainParams::Mode mode) {
    TrainParams p;
    p.mode = mode;
    p.dim = 16;
    p.window = 4;
    p.negatives = 5;
    p.sample = 0.0;
    p.iters = 5;
    p.min_count = 5;
    p.rng_seed = 7;
    return p;
}

double mean_pairwise_cosine(const EmbeddingModel& m, const std::vector<std::string>& group1,
                            const std::vector<std::string>& group2) {
    double sum = 0.0;
    int n = 0;
    for (const auto& w1 : group1) {
        for (const auto& w2 : group2) {
            if (w1 == w2) continue;
            int i = m.vocab.lookup(w1), j = m.vocab.lookup(w2);
            REQUIRE(i >= 0);
            REQUIRE(j >= 0);
            sum += cosine(m.in_row(i), m.in_row(j), m.dim);
            ++n;
        }
    }
    return sum / n;
}

}  // namespace

TEST_CASE("training separates co-occurrence clusters") {
    TokenStream ts = cluster_corpus(1200, 12, 42);
    std::vector<std::string> a = {"alder", "aspen", "acacia", "almond", "apricot"};
    std::vector<std::string> b = {"basalt", "breccia", "bauxite", "borax", "barite"};

    for (auto mode : {TrainParams::Mode::cbow, TrainParams::Mode::skipgram}) {
        EmbeddingModel m = train(ts, small_params(mode));
        double within = (mean_pairwise_cosine(m, a, a) + mean_pairwise_cosine(m, b, b)) / 2.0;
        double across = mean_pairwise_cosine(m, a, b);
        INFO("mode " << (mode == TrainParams::Mode::cbow ? "cbow" : "skipgram")
                     << " within " << within << " across " << across);
        CHECK(within > across + 0.2);

        auto near = nearest(m, "alder", 4);
        for (const auto& nb : near) CHECK(nb.word[0] == 'a');
    }
}

TEST_CASE("mean epoch loss decreases over training") {
    TokenStream ts = cluster_corpus(400, 10, 5);
    for (auto mode : {TrainParams::Mode::cbow, TrainParams::Mode::skipgram}) {
        EmbeddingModel m = train(ts, small_params(mode));
        REQUIRE(m.mean_epoch_loss.size() == 5);
        CHECK(m.mean_epoch_loss.back() < m.mean_epoch_loss.front());
    }
}

TEST_CASE("single-worker training is bit-reproducible") {
    TokenStream ts = cluster_corpus(150, 10, 11);
    TrainParams p = small_params(TrainParams::Mode::cbow);
    p.iters = 3;
    p.dim = 8;

    EmbeddingModel m1 = train(ts, p);
    EmbeddingModel m2 = train(ts, p);
    CHECK(m1.w_in == m2.w_in);
    CHECK(m1.w_out == m2.w_out);
    CHECK(m1.mean_epoch_loss == m2.mean_epoch_loss);

    p.rng_seed = 8;
    EmbeddingModel m3 = train(ts, p);
    CHECK(m1.w_in != m3.w_in);
}

TEST_CASE("multi-worker training still learns the clusters") {
    TokenStream ts = cluster_corpus(600, 12, 21);
    TrainParams p = small_params(TrainParams::Mode::cbow);
    p.workers = 4;
    EmbeddingModel m = train(ts, p);

    std::vector<std::string> a = {"alder", "aspen", "acacia", "almond", "apricot"};
    std::vector<std::string> b = {"basalt", "breccia", "bauxite", "borax", "barite"};
    double within = (mean_pairwise_cosine(m, a, a) + mean_pairwise_cosine(m, b, b)) / 2.0;
    double across = mean_pairwise_cosine(m, a, b);
    CHECK(within > across + 0.2);
}

TEST_CASE("undersized corpora are rejected") {
    TokenStream empty;
    TrainParams p = small_params(TrainParams::Mode::cbow);
    CHECK_THROWS_WITH(train(empty, p), "corpus too small");

    TokenStream rare;
    rare.tokens = {"once", "twice", "thrice"};
    rare.sentence_bounds = {{0, 3}};
    CHECK_THROWS_WITH(train(rare, p), "corpus too small");

    TokenStream lone;
    lone.tokens = {"word"};
    lone.sentence_bounds = {{0, 1}};
    p.min_count = 1;
    CHECK_THROWS_WITH(train(lone, p), "corpus too small");
}

TEST_CASE("initial matrices before any epoch") {
    TokenStream ts = cluster_corpus(50, 10, 3);
    TrainParams p = small_params(TrainParams::Mode::cbow);
    p.iters = 0;
    EmbeddingModel m = train(ts, p);

    REQUIRE(m.w_in.size() == m.vocab.size() * static_cast<size_t>(p.dim));
    const float bound = 0.5f / static_cast<float>(p.dim);
    float lo = 0.0f, hi = 0.0f;
    for (float w : m.w_in) {
        CHECK(w >= -bound);
        CHECK(w < bound);
        lo = std::min(lo, w);
        hi = std::max(hi, w);
    }
    CHECK(hi - lo > bound);

    for (float w : m.w_out) CHECK(w == 0.0f);
    CHECK(m.mean_epoch_loss.empty());
}

TEST_CASE("model vocabulary respects min_count and frequency order") {
    TokenStream ts;
    auto add = [&](const std::string& w, int times) {
        size_t begin = ts.tokens.size();
        for (int i = 0; i < times; ++i) ts.tokens.push_back(w);
        ts.sentence_bounds.emplace_back(begin, ts.tokens.size());
    };
    add("common", 30);
    add("medium", 10);
    add("scarce", 5);
    add("dropped", 4);

    TrainParams p = small_params(TrainParams::Mode::cbow);
    p.iters = 1;
    EmbeddingModel m = train(ts, p);

    REQUIRE(m.vocab.size() == 3);
    CHECK(m.vocab.words == std::vector<std::string>{"common", "medium", "scarce"});
    CHECK(m.vocab.lookup("dropped") == -1);
    for (size_t i = 1; i < m.vocab.size(); ++i)
        CHECK(m.vocab.counts[i - 1] >= m.vocab.counts[i]);
}
