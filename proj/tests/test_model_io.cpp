#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "termforge/embedding.hpp"
#include "termforge/model_io.hpp"

using namespace termforge;

namespace {

std::string data_path(const std::string& name) {
    return std::string(TERMFORGE_TEST_DATA_DIR) + "/" + name;
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) {
        path = (std::filesystem::temp_directory_path() / name).string();
    }
    ~TempFile() { std::remove(path.c_str()); }
};

EmbeddingModel random_model(int v, int dim, uint64_t seed) {
    EmbeddingModel m;
    m.dim = dim;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < v; ++i) {
        std::string w = "tok" + std::to_string(i);
        m.vocab.index.emplace(w, i);
        m.vocab.words.push_back(w);
        int64_t c = 1 + static_cast<int64_t>(rng() % 500);
        m.vocab.counts.push_back(c);
        m.vocab.total_count += c;
    }
    auto u = [&] {
        return static_cast<float>((rng() >> 11) * (1.0 / 9007199254740992.0) * 4.0 - 2.0);
    };
    m.w_in.resize(static_cast<size_t>(v) * dim);
    m.w_out.resize(static_cast<size_t>(v) * dim);
    for (auto& x : m.w_in) x = u();
    for (auto& x : m.w_out) x = u();
    m.params.mode = TrainParams::Mode::skipgram;
    m.params.dim = dim;
    m.params.window = 3;
    m.params.negatives = 7;
    m.params.sample = 1e-3;
    m.params.iters = 4;
    m.params.min_count = 2;
    m.params.alpha0 = 0.0125;
    m.params.workers = 2;
    m.params.rng_seed = seed;
    m.mean_epoch_loss = {3.25, 2.5, 1.75, 1.0 / 3.0};
    return m;
}

void write_text(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    out << body;
}

}  // namespace

TEST_CASE("save then load reproduces the model bit for bit") {
    EmbeddingModel m = random_model(10, 8, 404);
    TempFile f("termforge_roundtrip.vec");
    save_model(m, f.path);
    EmbeddingModel r = load_model(f.path);

    CHECK(r.vocab.words == m.vocab.words);
    CHECK(r.vocab.counts == m.vocab.counts);
    CHECK(r.vocab.total_count == m.vocab.total_count);
    CHECK(r.dim == m.dim);
    CHECK(r.w_in == m.w_in);
    CHECK(r.w_out == m.w_out);
    CHECK(r.params.mode == m.params.mode);
    CHECK(r.params.window == m.params.window);
    CHECK(r.params.negatives == m.params.negatives);
    CHECK(r.params.sample == m.params.sample);
    CHECK(r.params.iters == m.params.iters);
    CHECK(r.params.min_count == m.params.min_count);
    CHECK(r.params.alpha0 == m.params.alpha0);
    CHECK(r.params.workers == m.params.workers);
    CHECK(r.params.rng_seed == m.params.rng_seed);
    CHECK(r.mean_epoch_loss == m.mean_epoch_loss);

    for (const auto& w : m.vocab.words)
        CHECK(r.vocab.lookup(w) == m.vocab.lookup(w));
}

TEST_CASE("a second save of a loaded model is byte-identical") {
    EmbeddingModel m = random_model(6, 5, 77);
    TempFile f1("termforge_save1.vec");
    TempFile f2("termforge_save2.vec");
    save_model(m, f1.path);
    save_model(load_model(f1.path), f2.path);

    std::ifstream a(f1.path, std::ios::binary), b(f2.path, std::ios::binary);
    std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
    std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
    CHECK(sa == sb);
}

TEST_CASE("plain text files from other embedding tools load") {
    EmbeddingModel m = load_model(data_path("reference_tool.vec"));
    REQUIRE(m.vocab.size() == 4);
    REQUIRE(m.dim == 3);
    CHECK(m.vocab.words == std::vector<std::string>{"</s>", "the", "cat", "sat"});
    CHECK(m.in_row(2)[0] == 1.0f);
    CHECK(m.in_row(2)[1] == 2.0f);
    CHECK(m.in_row(3)[0] == -0.5f);
    CHECK(m.in_row(0)[1] == -0.002f);

    for (int64_t c : m.vocab.counts) CHECK(c == 1);
    CHECK(m.vocab.total_count == 4);
    for (float w : m.w_out) CHECK(w == 0.0f);
    CHECK(m.mean_epoch_loss.empty());

    auto near = nearest(m, "cat", 1);
    REQUIRE(near.size() == 1);
}

TEST_CASE("truncated files report the offending line") {
    TempFile f("termforge_truncated.vec");
    write_text(f.path, "2 3\nfoo 0.1 0.2 0.3\n");
    CHECK_THROWS_WITH(load_model(f.path), Catch::Matchers::ContainsSubstring(":3:"));
}

TEST_CASE("malformed files are rejected with line numbers") {
    TempFile f("termforge_malformed.vec");

    write_text(f.path, "abc def\n");
    CHECK_THROWS_WITH(load_model(f.path), Catch::Matchers::ContainsSubstring("header"));

    write_text(f.path, "1 3 9\nfoo 0.1 0.2 0.3\n");
    CHECK_THROWS_WITH(load_model(f.path), Catch::Matchers::ContainsSubstring("header"));

    write_text(f.path, "1 3\nfoo 0.1 nonsense 0.3\n");
    CHECK_THROWS_WITH(load_model(f.path), Catch::Matchers::ContainsSubstring(":2:"));

    write_text(f.path, "1 3\nfoo 0.1 0.2 0.3 0.4\n");
    CHECK_THROWS_WITH(load_model(f.path), Catch::Matchers::ContainsSubstring("trailing"));

    write_text(f.path, "2 2\nfoo 0.1 0.2\nfoo 0.3 0.4\n");
    CHECK_THROWS_WITH(load_model(f.path), Catch::Matchers::ContainsSubstring("duplicate"));

    write_text(f.path, "1 2\nfoo 0.1 0.2\n#bogus\n");
    CHECK_THROWS_WITH(load_model(f.path), Catch::Matchers::ContainsSubstring("unrecognized"));

    CHECK_THROWS_WITH(load_model("/nonexistent/dir/model.vec"),
                      Catch::Matchers::ContainsSubstring("cannot open"));
}
