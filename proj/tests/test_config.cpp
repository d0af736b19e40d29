#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <string>

#include "termforge/config.hpp"

using namespace termforge;

namespace {

ConfigLoad parse_ok(const std::string& text) {
    return parse_config(text, "demo.cfg");
}

}  // namespace

TEST_CASE("empty config yields all defaults") {
    ConfigLoad loaded = parse_ok("");
    REQUIRE(loaded.warnings.empty());

    const PipelineConfig& cfg = loaded.config;
    CHECK(cfg.topic.empty());
    CHECK(cfg.workspace.empty());
    CHECK(cfg.background_corpus.empty());
    CHECK(cfg.label.label == "XDOMAINX");
    CHECK(cfg.k_seeds == 40);
    CHECK(cfg.expand_k == 5);
    CHECK(cfg.ratio == 2.0);
    CHECK(cfg.min_cooc == 2);

    CHECK(cfg.crawl.target_pages == 1000);
    CHECK(cfg.crawl.per_site_cap == 100);
    CHECK(cfg.crawl.shuffle_interval == 100);
    CHECK(cfg.crawl.politeness_delay_ms == 1000);
    CHECK(cfg.crawl.fetch_timeout_s == 10);
    CHECK(cfg.crawl.max_frontier == 100000);
    CHECK(cfg.crawl.fetch_workers == 4);
    CHECK(cfg.crawl.rng_seed == 1);

    CHECK(cfg.norm.lowercase);
    CHECK(cfg.norm.strip_non_alnum);
    CHECK(cfg.norm.spell_digits);
    CHECK_FALSE(cfg.norm.split_hyphens);

    CHECK(cfg.train.mode == TrainParams::Mode::cbow);
    CHECK(cfg.train.dim == 200);
    CHECK(cfg.train.window == 8);
    CHECK(cfg.train.negatives == 25);
    CHECK(cfg.train.sample == 1e-4);
    CHECK(cfg.train.iters == 15);
    CHECK(cfg.train.min_count == 5);
    CHECK(cfg.train.alpha0 == 0.0);
    CHECK(cfg.train.workers == 1);
    CHECK(cfg.train.rng_seed == 1);
}

TEST_CASE("size left unset keeps the 200-dimension default") {
    ConfigLoad loaded = parse_ok("[train]\nwindow=5\n");
    CHECK(loaded.config.train.dim == 200);
    CHECK(loaded.config.train.window == 5);
}

TEST_CASE("every known key round-trips") {
    std::string text =
        "[pipeline]\n"
        "topic=vitiligo\n"
        "workspace=work\n"
        "background_corpus=bg.txt\n"
        "label=XTOPICX\n"
        "k_seeds=25\n"
        "expand_k=10\n"
        "ratio=3.5\n"
        "min_cooc=4\n"
        "[crawl]\n"
        "seeds=seeds.txt\n"
        "patterns=patterns.txt\n"
        "target_pages=50\n"
        "per_site_cap=7\n"
        "shuffle_interval=9\n"
        "delay_ms=0\n"
        "timeout_s=3\n"
        "max_frontier=500\n"
        "workers=2\n"
        "seed=99\n"
        "user_agent=probe/1.0\n"
        "[normalize]\n"
        "lowercase=true\n"
        "strip_non_alnum=false\n"
        "spell_digits=no\n"
        "split_hyphens=yes\n"
        "stoplist=stop.txt\n"
        "[train]\n"
        "mode=skipgram\n"
        "size=30\n"
        "window=4\n"
        "negative=6\n"
        "sample=0.001\n"
        "iter=2\n"
        "min_count=1\n"
        "alpha=0.03\n"
        "workers=3\n"
        "seed=7\n";
    ConfigLoad loaded = parse_ok(text);
    REQUIRE(loaded.warnings.empty());

    const PipelineConfig& cfg = loaded.config;
    CHECK(cfg.topic == "vitiligo");
    CHECK(cfg.workspace == "work");
    CHECK(cfg.background_corpus == "bg.txt");
    CHECK(cfg.label.label == "XTOPICX");
    CHECK(cfg.k_seeds == 25);
    CHECK(cfg.expand_k == 10);
    CHECK(cfg.ratio == 3.5);
    CHECK(cfg.min_cooc == 4);

    CHECK(cfg.seeds_file == "seeds.txt");
    CHECK(cfg.patterns_file == "patterns.txt");
    CHECK(cfg.crawl.target_pages == 50);
    CHECK(cfg.crawl.per_site_cap == 7);
    CHECK(cfg.crawl.shuffle_interval == 9);
    CHECK(cfg.crawl.politeness_delay_ms == 0);
    CHECK(cfg.crawl.fetch_timeout_s == 3);
    CHECK(cfg.crawl.max_frontier == 500);
    CHECK(cfg.crawl.fetch_workers == 2);
    CHECK(cfg.crawl.rng_seed == 99);
    CHECK(cfg.crawl.user_agent == "probe/1.0");

    CHECK(cfg.norm.lowercase);
    CHECK_FALSE(cfg.norm.strip_non_alnum);
    CHECK_FALSE(cfg.norm.spell_digits);
    CHECK(cfg.norm.split_hyphens);
    CHECK(cfg.stoplist_file == "stop.txt");

    CHECK(cfg.train.mode == TrainParams::Mode::skipgram);
    CHECK(cfg.train.dim == 30);
    CHECK(cfg.train.window == 4);
    CHECK(cfg.train.negatives == 6);
    CHECK(cfg.train.sample == 0.001);
    CHECK(cfg.train.iters == 2);
    CHECK(cfg.train.min_count == 1);
    CHECK(cfg.train.alpha0 == 0.03);
    CHECK(cfg.train.workers == 3);
    CHECK(cfg.train.rng_seed == 7);
}

TEST_CASE("non-numeric negative reports key and line") {
    try {
        parse_ok("[train]\nnegative=abc\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        std::string msg = e.what();
        CHECK(msg.find("demo.cfg:2") != std::string::npos);
        CHECK(msg.find("'negative'") != std::string::npos);
    }
}

TEST_CASE("out-of-range values are rejected") {
    CHECK_THROWS_AS(parse_ok("[train]\nsize=0\n"), ConfigError);
    CHECK_THROWS_AS(parse_ok("[train]\nsize=-5\n"), ConfigError);
    CHECK_THROWS_AS(parse_ok("[train]\nnegative=-1\n"), ConfigError);
    CHECK_THROWS_AS(parse_ok("[train]\nsample=-0.1\n"), ConfigError);
    CHECK_THROWS_AS(parse_ok("[train]\nmode=glove\n"), ConfigError);
    CHECK_THROWS_AS(parse_ok("[pipeline]\nratio=0\n"), ConfigError);
    CHECK_THROWS_AS(parse_ok("[pipeline]\nlabel=\n"), ConfigError);
    CHECK_THROWS_AS(parse_ok("[crawl]\ntarget_pages=none\n"), ConfigError);
    CHECK_THROWS_AS(parse_ok("[crawl]\ndelay_ms=-1\n"), ConfigError);
    CHECK_THROWS_AS(parse_ok("[crawl]\nseed=-1\n"), ConfigError);
    CHECK_THROWS_AS(parse_ok("[normalize]\nlowercase=maybe\n"), ConfigError);
}

TEST_CASE("unknown keys and sections warn without failing") {
    ConfigLoad loaded = parse_ok(
        "[train]\n"
        "fancy=1\n"
        "[telemetry]\n"
        "endpoint=http://x\n"
        "[pipeline]\n"
        "topic=skin\n");
    REQUIRE(loaded.warnings.size() == 2);
    CHECK(loaded.warnings[0].find("'fancy'") != std::string::npos);
    CHECK(loaded.warnings[0].find("demo.cfg:2") != std::string::npos);
    CHECK(loaded.warnings[1].find("[telemetry]") != std::string::npos);
    CHECK(loaded.config.topic == "skin");
}

TEST_CASE("keys before any section warn and are ignored") {
    ConfigLoad loaded = parse_ok("topic=skin\n[pipeline]\ntopic=hair\n");
    REQUIRE(loaded.warnings.size() == 1);
    CHECK(loaded.warnings[0].find("outside any section") != std::string::npos);
    CHECK(loaded.config.topic == "hair");
}

TEST_CASE("comments, blank lines, and spacing are tolerated") {
    ConfigLoad loaded = parse_ok(
        "# leading comment\n"
        "\n"
        "[Train]\n"
        "; alternate comment\n"
        "  size = 300  \n"
        "\n");
    REQUIRE(loaded.warnings.empty());
    CHECK(loaded.config.train.dim == 300);
}

TEST_CASE("malformed lines are structural errors") {
    CHECK_THROWS_AS(parse_ok("[train]\nsize\n"), ConfigError);
    CHECK_THROWS_AS(parse_ok("[train]\n=5\n"), ConfigError);
    CHECK_THROWS_AS(parse_ok("[train\nsize=5\n"), ConfigError);
}

TEST_CASE("mode accepts the short skip-gram spelling") {
    CHECK(parse_ok("[train]\nmode=sg\n").config.train.mode ==
          TrainParams::Mode::skipgram);
    CHECK(parse_ok("[train]\nmode=CBOW\n").config.train.mode ==
          TrainParams::Mode::cbow);
}

TEST_CASE("load_config reads from disk and reports missing files") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "termforge_config_test";
    fs::create_directories(dir);
    fs::path file = dir / "pipe.cfg";
    write_file(file.string(), "[pipeline]\ntopic=vitiligo\n");

    ConfigLoad loaded = load_config(file.string());
    CHECK(loaded.config.topic == "vitiligo");

    CHECK_THROWS_WITH(load_config((dir / "absent.cfg").string()),
                      Catch::Matchers::ContainsSubstring("cannot open file"));
    fs::remove_all(dir);
}
