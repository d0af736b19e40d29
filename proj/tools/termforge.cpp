// termforge: crawl a topic corpus, train word embeddings over it, and
// distill the domain's characteristic vocabulary, multiword terms, and
// hypernym taxonomy. Subcommands map one-to-one onto pipeline stages;
// `pipeline` runs them all in order.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "CLI11.hpp"
#include "termforge/common.hpp"
#include "termforge/config.hpp"
#include "termforge/crawler.hpp"
#include "termforge/domainvocab.hpp"
#include "termforge/embedding.hpp"
#include "termforge/http_fetcher.hpp"
#include "termforge/model_io.hpp"
#include "termforge/phrases.hpp"
#include "termforge/porter.hpp"
#include "termforge/stopwords.hpp"
#include "termforge/taxonomy.hpp"
#include "termforge/textnorm.hpp"

namespace fs = std::filesystem;
using namespace termforge;

namespace {

// Exit codes: 0 success, 1 usage or configuration error, 2 data error
// (missing artifact, malformed file, word not in vocabulary).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Artifact locations inside the workspace, with per-file overrides for
// the subcommands that accept explicit paths.
struct Paths {
    fs::path ws;
    fs::path corpus_;
    fs::path tokens_;
    fs::path model_;
    fs::path termvocab_;

    fs::path corpus_dir() const { return corpus_.empty() ? ws / "corpus" : corpus_; }
    fs::path manifest() const { return corpus_dir() / "manifest.tsv"; }
    fs::path tokens() const { return tokens_.empty() ? ws / "tokens.txt" : tokens_; }
    fs::path model() const { return model_.empty() ? ws / "model.vec" : model_; }
    fs::path termvocab() const {
        return termvocab_.empty() ? ws / "termvocab.tsv" : termvocab_;
    }
    fs::path phrases() const { return ws / "phrases.tsv"; }
    fs::path candidates() const { return ws / "candidates.tsv"; }
    fs::path pairs() const { return ws / "pairs.tsv"; }
    fs::path taxonomy() const { return ws / "taxonomy.txt"; }
};

void require_artifact(const fs::path& p) {
    if (!fs::exists(p)) throw DataError("missing input artifact: " + p.string());
}

std::string fmt6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

int64_t parse_count(const std::string& s, const std::string& where) {
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(s.c_str(), &end, 10);
    if (s.empty() || errno != 0 || end != s.c_str() + s.size() || v < 0)
        throw DataError(where + ": invalid count '" + s + "'");
    return v;
}

NormOptions resolve_norm(const PipelineConfig& cfg) {
    NormOptions opts = cfg.norm;
    if (!cfg.stoplist_file.empty()) {
        require_artifact(cfg.stoplist_file);
        opts.stoplist = load_stoplist_text(read_file(cfg.stoplist_file));
    } else {
        opts.stoplist = default_stoplist();
    }
    return opts;
}

TokenStream load_token_file(const fs::path& path) {
    TokenStream ts;
    for (const std::string& line : split_lines(read_file(path.string()))) {
        size_t begin = ts.tokens.size();
        for (std::string& t : split_ws(line)) ts.tokens.push_back(std::move(t));
        if (ts.tokens.size() > begin)
            ts.sentence_bounds.emplace_back(begin, ts.tokens.size());
    }
    return ts;
}

// Re-tokenizes every corpus page, one TokenStream per page in manifest
// order. Pass options without a stoplist to keep stopwords as phrase
// boundaries; pass the full options to get training-ready token lines.
std::vector<TokenStream> load_corpus_docs(const fs::path& corpus_dir,
                                          const NormOptions& opts) {
    require_artifact(corpus_dir / "manifest.tsv");
    std::vector<ManifestRow> rows = load_corpus_manifest(corpus_dir.string());
    std::vector<TokenStream> docs;
    docs.reserve(rows.size());
    for (const ManifestRow& r : rows)
        docs.push_back(normalize(read_file((corpus_dir / r.file).string()), opts));
    return docs;
}

std::string join_surfaces(const std::map<std::string, int64_t>& surface_forms,
                          const std::string& fallback) {
    if (surface_forms.empty()) return fallback;
    std::vector<std::pair<std::string, int64_t>> ranked(surface_forms.begin(),
                                                        surface_forms.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    std::vector<std::string> names;
    names.reserve(ranked.size());
    for (auto& [s, n] : ranked) names.push_back(s);
    return join(names, "|");
}

struct TermVocabRow {
    int64_t rank = 0;
    std::string word;
    double cosine = 0.0;
    std::vector<std::string> provenance;
};

std::vector<TermVocabRow> read_termvocab(const fs::path& path) {
    std::vector<std::string> lines = split_lines(read_file(path.string()));
    std::vector<TermVocabRow> rows;
    for (size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        std::string where = path.string() + ":" + std::to_string(i + 1);
        std::vector<std::string> cols = split_tabs(lines[i]);
        if (cols.size() != 4) throw DataError(where + ": expected 4 columns");
        TermVocabRow row;
        row.rank = parse_count(cols[0], where);
        row.word = cols[1];
        row.cosine = std::strtod(cols[2].c_str(), nullptr);
        size_t start = 0;
        while (start <= cols[3].size() && !cols[3].empty()) {
            size_t comma = cols[3].find(',', start);
            std::string seed = cols[3].substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            if (!seed.empty()) row.provenance.push_back(seed);
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<TermCandidate> read_candidates(const fs::path& path) {
    std::vector<std::string> lines = split_lines(read_file(path.string()));
    std::vector<TermCandidate> out;
    for (size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        std::string where = path.string() + ":" + std::to_string(i + 1);
        std::vector<std::string> cols = split_tabs(lines[i]);
        if (cols.size() != 4) throw DataError(where + ": expected 4 columns");
        TermCandidate c;
        c.count = parse_count(cols[0], where);
        c.stems = split_ws(cols[1]);
        if (c.stems.empty()) throw DataError(where + ": empty term");
        // The cell keeps surfaces most-frequent-first; synthesize strictly
        // decreasing counts so downstream ranking preserves that order.
        std::vector<std::string> surfaces;
        size_t start = 0;
        while (start <= cols[2].size() && !cols[2].empty()) {
            size_t bar = cols[2].find('|', start);
            std::string s = cols[2].substr(
                start, bar == std::string::npos ? std::string::npos : bar - start);
            if (!s.empty()) surfaces.push_back(s);
            if (bar == std::string::npos) break;
            start = bar + 1;
        }
        for (size_t j = 0; j < surfaces.size(); ++j)
            c.surface_forms[surfaces[j]] = static_cast<int64_t>(surfaces.size() - j);
        out.push_back(std::move(c));
    }
    return out;
}

// ---------------------------------------------------------------------
// Stage bodies. Each throws on failure; the caller maps exception types
// to exit codes.

void stage_crawl(const PipelineConfig& cfg, const Paths& paths) {
    if (cfg.seeds_file.empty())
        throw std::invalid_argument("crawl requires --seeds or [crawl] seeds");
    if (cfg.patterns_file.empty())
        throw std::invalid_argument("crawl requires --patterns or [crawl] patterns");
    require_artifact(cfg.seeds_file);
    require_artifact(cfg.patterns_file);

    CrawlConfig crawl_cfg = cfg.crawl;
    crawl_cfg.seeds = load_seed_list(cfg.seeds_file);
    crawl_cfg.patterns = load_pattern_list(cfg.patterns_file);

    HttpFetcher fetcher(static_cast<int>(crawl_cfg.fetch_timeout_s),
                        crawl_cfg.user_agent);
    CrawlResult result = crawl(crawl_cfg, fetcher);
    write_corpus(paths.corpus_dir().string(), result.pages);
    std::cout << "retained " << result.pages.size() << " pages (fetched "
              << result.state.fetched_total << "), corpus at "
              << paths.corpus_dir().string() << "\n";
}

void stage_normalize(const PipelineConfig& cfg, const Paths& paths) {
    require_artifact(paths.manifest());
    NormOptions opts = resolve_norm(cfg);
    std::vector<ManifestRow> rows = load_corpus_manifest(paths.corpus_dir().string());

    std::string out;
    size_t n_sentences = 0;
    size_t n_tokens = 0;
    for (const ManifestRow& r : rows) {
        TokenStream ts =
            normalize(read_file((paths.corpus_dir() / r.file).string()), opts);
        for (auto [begin, end] : ts.sentence_bounds) {
            for (size_t i = begin; i < end; ++i) {
                if (i > begin) out += ' ';
                out += ts.tokens[i];
            }
            out += '\n';
            ++n_sentences;
            n_tokens += end - begin;
        }
    }
    write_file(paths.tokens().string(), out);
    std::cout << "wrote " << paths.tokens().string() << " (" << n_sentences
              << " sentences, " << n_tokens << " tokens)\n";
}

void stage_train(const PipelineConfig& cfg, const Paths& paths,
                 bool subsample_label) {
    require_artifact(paths.tokens());
    TokenStream domain = load_token_file(paths.tokens());

    TrainParams params = cfg.train;
    TokenStream corpus;
    if (!cfg.background_corpus.empty()) {
        require_artifact(cfg.background_corpus);
        TokenStream background =
            normalize(read_file(cfg.background_corpus), resolve_norm(cfg));
        TokenStream labeled = interleave_label(domain, cfg.label);
        corpus = build_combined_corpus(labeled, background);
        if (!subsample_label) params.subsample_exempt.insert(cfg.label.label);
    } else {
        corpus = std::move(domain);
    }

    if (corpus.tokens.size() < 2)
        throw DataError("corpus too small: found " +
                        std::to_string(corpus.tokens.size()) +
                        " tokens, need at least 2");
    if (build_vocab(corpus.tokens, params.min_count).size() == 0)
        throw DataError("corpus too small: no word reaches min_count=" +
                        std::to_string(params.min_count));

    EmbeddingModel model = train(corpus, params);
    save_model(model, paths.model().string());
    std::cout << "wrote " << paths.model().string() << " (|V|="
              << model.vocab.size() << ", dim=" << model.dim;
    if (!model.mean_epoch_loss.empty())
        std::cout << ", final mean loss " << fmt6(model.mean_epoch_loss.back());
    std::cout << ")\n";
}

void stage_nearest(const Paths& paths, const std::string& word, int k) {
    require_artifact(paths.model());
    EmbeddingModel model = load_model(paths.model().string());
    std::vector<Neighbor> neighbors;
    try {
        neighbors = nearest(model, word, k);
    } catch (const std::runtime_error& e) {
        throw DataError(e.what());
    }
    for (const Neighbor& nb : neighbors)
        std::cout << nb.word << "\t" << fmt6(nb.similarity) << "\n";
}

void stage_extract(const PipelineConfig& cfg, const Paths& paths, int rounds) {
    require_artifact(paths.model());
    EmbeddingModel model = load_model(paths.model().string());

    std::vector<Neighbor> characteristic;
    try {
        characteristic = characteristic_vocab(model, cfg.label, cfg.k_seeds);
    } catch (const std::runtime_error& e) {
        throw DataError(e.what());
    }
    std::vector<std::string> seeds;
    seeds.reserve(characteristic.size());
    for (const Neighbor& nb : characteristic) seeds.push_back(nb.word);

    ExpansionResult expansion = expand_terms(model, seeds, cfg.expand_k, rounds);
    for (const std::string& w : expansion.warnings)
        std::cerr << "warning: " << w << "\n";

    std::string out = "rank\tword\tcosine\tprovenance\n";
    int64_t rank = 0;
    for (const ExpandedTerm& t : expansion.terms) {
        out += std::to_string(++rank);
        out += '\t';
        out += t.word;
        out += '\t';
        out += fmt6(t.cosine);
        out += '\t';
        out += join(t.provenance, ",");
        out += '\n';
    }
    write_file(paths.termvocab().string(), out);
    std::cout << "wrote " << paths.termvocab().string() << " ("
              << expansion.terms.size() << " terms from " << seeds.size()
              << " seeds)\n";
}

void stage_phrases(const PipelineConfig& cfg, const Paths& paths, int max_len) {
    require_artifact(paths.manifest());
    require_artifact(paths.termvocab());

    NormOptions opts = resolve_norm(cfg);
    std::unordered_set<std::string> stoplist = opts.stoplist;
    NormOptions keep_stopwords = opts;
    keep_stopwords.stoplist.clear();
    std::vector<TokenStream> docs = load_corpus_docs(paths.corpus_dir(), keep_stopwords);
    std::vector<TermVocabRow> vocab_rows = read_termvocab(paths.termvocab());

    PhraseTable table = extract_phrases(docs, stoplist, max_len);

    std::unordered_set<std::string> single_stems;
    for (const TermVocabRow& row : vocab_rows)
        single_stems.insert(porter_stem(row.word));
    PhraseTable filtered = filter_phrases_by_candidates(table, single_stems);
    SurfaceIndex surfaces = build_surface_index(docs, stoplist, filtered);

    std::vector<TermCandidate> candidates;
    std::map<std::vector<std::string>, std::string> origin_of;
    std::set<std::string> seen;
    for (const TermVocabRow& row : vocab_rows) {
        std::string stem = porter_stem(row.word);
        if (!seen.insert(stem).second) continue;
        TermCandidate c;
        c.stems = {stem};
        auto it = surfaces.find(c.stems);
        if (it != surfaces.end()) {
            c.surface_forms = it->second;
            for (auto& [s, n] : it->second) c.count += n;
        }
        bool is_seed = std::find(row.provenance.begin(), row.provenance.end(),
                                 row.word) != row.provenance.end();
        origin_of[c.stems] = is_seed ? "label-trick" : "expansion";
        candidates.push_back(std::move(c));
    }
    for (const auto& [stems, entry] : filtered.entries) {
        TermCandidate c;
        c.stems = stems;
        c.count = entry.count;
        c.surface_forms = entry.surface_forms;
        origin_of[stems] = "phrase";
        candidates.push_back(std::move(c));
    }

    std::vector<TermCandidate> witnessed = cooccurrence_filter(candidates, docs);

    auto by_count_then_stems = [](const TermCandidate& a, const TermCandidate& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.stems < b.stems;
    };
    std::sort(witnessed.begin(), witnessed.end(), by_count_then_stems);

    std::vector<std::pair<std::vector<std::string>, PhraseEntry>> all_phrases(
        table.entries.begin(), table.entries.end());
    std::sort(all_phrases.begin(), all_phrases.end(),
              [](const auto& a, const auto& b) {
                  if (a.second.count != b.second.count)
                      return a.second.count > b.second.count;
                  return a.first < b.first;
              });
    std::string phrases_out = "count\tphrase\tsurfaces\n";
    for (const auto& [stems, entry] : all_phrases) {
        phrases_out += std::to_string(entry.count);
        phrases_out += '\t';
        phrases_out += join(stems, " ");
        phrases_out += '\t';
        phrases_out += join_surfaces(entry.surface_forms, join(stems, " "));
        phrases_out += '\n';
    }
    write_file(paths.phrases().string(), phrases_out);

    std::string cand_out = "count\tterm\tsurfaces\torigin\n";
    for (const TermCandidate& c : witnessed) {
        cand_out += std::to_string(c.count);
        cand_out += '\t';
        cand_out += join(c.stems, " ");
        cand_out += '\t';
        cand_out += join_surfaces(c.surface_forms, join(c.stems, " "));
        cand_out += '\t';
        cand_out += origin_of[c.stems];
        cand_out += '\n';
    }
    write_file(paths.candidates().string(), cand_out);

    std::cout << "wrote " << paths.phrases().string() << " ("
              << all_phrases.size() << " phrases) and "
              << paths.candidates().string() << " (" << witnessed.size()
              << " candidates from " << candidates.size() << ")\n";
}

void stage_taxonomy(const PipelineConfig& cfg, const Paths& paths) {
    if (cfg.topic.empty())
        throw std::invalid_argument("taxonomy requires --topic or [pipeline] topic");
    require_artifact(paths.candidates());
    require_artifact(paths.manifest());

    NormOptions keep_stopwords = resolve_norm(cfg);
    keep_stopwords.stoplist.clear();
    std::vector<TokenStream> docs = load_corpus_docs(paths.corpus_dir(), keep_stopwords);
    std::vector<TermCandidate> candidates = read_candidates(paths.candidates());

    std::vector<HypernymPair> pairs = pairs_by_inclusion(candidates);
    std::vector<HypernymPair> freq =
        pairs_by_frequency(candidates, docs, cfg.ratio, cfg.min_cooc);
    pairs.insert(pairs.end(), freq.begin(), freq.end());
    std::sort(pairs.begin(), pairs.end(), [](const HypernymPair& a,
                                             const HypernymPair& b) {
        bool ai = a.source == HypernymPair::Source::inclusion;
        bool bi = b.source == HypernymPair::Source::inclusion;
        if (ai != bi) return ai;
        if (a.evidence != b.evidence) return a.evidence > b.evidence;
        if (a.hyper != b.hyper) return a.hyper < b.hyper;
        return a.hypo < b.hypo;
    });

    std::string pairs_out = "hyper\thypo\tsource\tevidence\n";
    for (const HypernymPair& p : pairs) {
        pairs_out += join(p.hyper, " ");
        pairs_out += '\t';
        pairs_out += join(p.hypo, " ");
        pairs_out += '\t';
        pairs_out += p.source == HypernymPair::Source::inclusion ? "inclusion"
                                                                 : "frequency";
        pairs_out += '\t';
        pairs_out += std::to_string(p.evidence);
        pairs_out += '\n';
    }
    write_file(paths.pairs().string(), pairs_out);

    Taxonomy tax = build_taxonomy(pairs, cfg.topic, candidates);
    std::vector<std::string> lines = render_paths(tax);
    write_file(paths.taxonomy().string(), join(lines, "\n") + "\n");
    std::cout << "wrote " << paths.pairs().string() << " (" << pairs.size()
              << " pairs) and " << paths.taxonomy().string() << " ("
              << lines.size() << " paths)\n";
}

// ---------------------------------------------------------------------
// Pipeline driver: make-style freshness, oldest output vs newest input.

bool outputs_fresh(const std::vector<fs::path>& outputs,
                   const std::vector<fs::path>& inputs) {
    fs::file_time_type oldest = fs::file_time_type::max();
    for (const fs::path& out : outputs) {
        if (!fs::exists(out)) return false;
        oldest = std::min(oldest, fs::last_write_time(out));
    }
    for (const fs::path& in : inputs)
        if (fs::exists(in) && fs::last_write_time(in) > oldest) return false;
    return true;
}

void run_pipeline(const PipelineConfig& cfg, const Paths& paths, bool force,
                  bool subsample_label, int rounds, int max_len) {
    if (cfg.topic.empty())
        throw std::invalid_argument("pipeline requires --topic or [pipeline] topic");

    struct Stage {
        std::string name;
        std::vector<fs::path> inputs;
        std::vector<fs::path> outputs;
        std::function<void()> run;
    };
    std::vector<Stage> stages;
    stages.push_back({"crawl",
                      {fs::path(cfg.seeds_file), fs::path(cfg.patterns_file)},
                      {paths.manifest()},
                      [&] { stage_crawl(cfg, paths); }});
    stages.push_back({"normalize",
                      {paths.manifest()},
                      {paths.tokens()},
                      [&] { stage_normalize(cfg, paths); }});
    std::vector<fs::path> train_inputs = {paths.tokens()};
    if (!cfg.background_corpus.empty())
        train_inputs.push_back(fs::path(cfg.background_corpus));
    stages.push_back({"train", train_inputs, {paths.model()}, [&] {
                          stage_train(cfg, paths, subsample_label);
                      }});
    stages.push_back({"extract",
                      {paths.model()},
                      {paths.termvocab()},
                      [&] { stage_extract(cfg, paths, rounds); }});
    stages.push_back({"phrases",
                      {paths.manifest(), paths.termvocab()},
                      {paths.phrases(), paths.candidates()},
                      [&] { stage_phrases(cfg, paths, max_len); }});
    stages.push_back({"taxonomy",
                      {paths.candidates(), paths.manifest()},
                      {paths.pairs(), paths.taxonomy()},
                      [&] { stage_taxonomy(cfg, paths); }});

    for (const Stage& stage : stages) {
        if (!force && outputs_fresh(stage.outputs, stage.inputs)) {
            std::cout << "skipping " << stage.name << " (outputs up to date)\n";
            continue;
        }
        std::cout << "running " << stage.name << "\n";
        stage.run();
    }
}

int guarded(const std::function<void()>& body) {
    try {
        body();
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"topic crawler, embedding trainer, and term taxonomy builder"};
    app.require_subcommand(1);

    // Shared options, bound per subcommand.
    struct Common {
        std::string config_path;
        std::string workspace;
    };
    std::map<std::string, Common> common;
    auto add_common = [&](CLI::App* cmd) {
        Common& c = common[cmd->get_name()];
        cmd->add_option("--config", c.config_path, "INI configuration file");
        cmd->add_option("--workspace", c.workspace,
                        "artifact directory (default: $TERMFORGE_WORKSPACE or .)");
        return cmd;
    };

    // Resolves config file, workspace, and environment into one place;
    // flag overrides are applied afterwards by each subcommand.
    auto base_config = [&](CLI::App* cmd) {
        const Common& c = common[cmd->get_name()];
        PipelineConfig cfg;
        if (!c.config_path.empty()) {
            ConfigLoad loaded = load_config(c.config_path);
            for (const std::string& w : loaded.warnings)
                std::cerr << "warning: " << w << "\n";
            cfg = std::move(loaded.config);
        }
        if (cmd->count("--workspace")) cfg.workspace = c.workspace;
        if (cfg.workspace.empty()) {
            const char* env = std::getenv("TERMFORGE_WORKSPACE");
            cfg.workspace = env && *env ? env : ".";
        }
        return cfg;
    };

    int rc = 0;

    // crawl ------------------------------------------------------------
    auto* crawl_cmd = add_common(
        app.add_subcommand("crawl", "fetch topic pages into a corpus directory"));
    struct {
        std::string seeds, patterns, out, user_agent = "termforge/0.1";
        int64_t target_pages = 1000, per_site_cap = 100, shuffle_interval = 100;
        int64_t delay_ms = 1000, timeout_s = 10, max_frontier = 100000;
        int workers = 4;
        uint64_t seed = 1;
    } crawl_opt;
    crawl_cmd->add_option("--seeds", crawl_opt.seeds, "seed URL list, one per line");
    crawl_cmd->add_option("--patterns", crawl_opt.patterns,
                          "retention patterns, one per line");
    crawl_cmd->add_option("--out", crawl_opt.out, "corpus directory (default: <workspace>/corpus)");
    crawl_cmd->add_option("--target-pages", crawl_opt.target_pages, "stop after retaining this many pages")->capture_default_str();
    crawl_cmd->add_option("--per-site-cap", crawl_opt.per_site_cap, "max fetches per host")->capture_default_str();
    crawl_cmd->add_option("--shuffle-interval", crawl_opt.shuffle_interval, "shuffle frontier every N fetches")->capture_default_str();
    crawl_cmd->add_option("--delay-ms", crawl_opt.delay_ms, "per-host politeness delay")->capture_default_str();
    crawl_cmd->add_option("--timeout-s", crawl_opt.timeout_s, "fetch timeout")->capture_default_str();
    crawl_cmd->add_option("--max-frontier", crawl_opt.max_frontier, "frontier size limit")->capture_default_str();
    crawl_cmd->add_option("--workers", crawl_opt.workers, "parallel fetch workers")->capture_default_str();
    crawl_cmd->add_option("--seed", crawl_opt.seed, "frontier shuffle seed")->capture_default_str();
    crawl_cmd->add_option("--user-agent", crawl_opt.user_agent, "User-Agent header")->capture_default_str();
    crawl_cmd->callback([&] {
        rc = guarded([&] {
            PipelineConfig cfg = base_config(crawl_cmd);
            if (crawl_cmd->count("--seeds")) cfg.seeds_file = crawl_opt.seeds;
            if (crawl_cmd->count("--patterns")) cfg.patterns_file = crawl_opt.patterns;
            if (crawl_cmd->count("--target-pages")) cfg.crawl.target_pages = crawl_opt.target_pages;
            if (crawl_cmd->count("--per-site-cap")) cfg.crawl.per_site_cap = crawl_opt.per_site_cap;
            if (crawl_cmd->count("--shuffle-interval")) cfg.crawl.shuffle_interval = crawl_opt.shuffle_interval;
            if (crawl_cmd->count("--delay-ms")) cfg.crawl.politeness_delay_ms = crawl_opt.delay_ms;
            if (crawl_cmd->count("--timeout-s")) cfg.crawl.fetch_timeout_s = crawl_opt.timeout_s;
            if (crawl_cmd->count("--max-frontier")) cfg.crawl.max_frontier = static_cast<size_t>(crawl_opt.max_frontier);
            if (crawl_cmd->count("--workers")) cfg.crawl.fetch_workers = crawl_opt.workers;
            if (crawl_cmd->count("--seed")) cfg.crawl.rng_seed = crawl_opt.seed;
            if (crawl_cmd->count("--user-agent")) cfg.crawl.user_agent = crawl_opt.user_agent;
            Paths paths;
            paths.ws = cfg.workspace;
            if (!crawl_opt.out.empty()) paths.corpus_ = crawl_opt.out;
            fs::create_directories(paths.ws);
            stage_crawl(cfg, paths);
        });
    });

    // normalize ---------------------------------------------------------
    auto* norm_cmd = add_common(app.add_subcommand(
        "normalize", "tokenize the corpus into one stopped sentence per line"));
    struct {
        std::string corpus, out, stoplist;
    } norm_opt;
    norm_cmd->add_option("--corpus", norm_opt.corpus, "corpus directory (default: <workspace>/corpus)");
    norm_cmd->add_option("--out", norm_opt.out, "token file (default: <workspace>/tokens.txt)");
    norm_cmd->add_option("--stoplist", norm_opt.stoplist, "stoplist file (default: built-in)");
    norm_cmd->callback([&] {
        rc = guarded([&] {
            PipelineConfig cfg = base_config(norm_cmd);
            if (norm_cmd->count("--stoplist")) cfg.stoplist_file = norm_opt.stoplist;
            Paths paths;
            paths.ws = cfg.workspace;
            if (!norm_opt.corpus.empty()) paths.corpus_ = norm_opt.corpus;
            if (!norm_opt.out.empty()) paths.tokens_ = norm_opt.out;
            fs::create_directories(paths.ws);
            stage_normalize(cfg, paths);
        });
    });

    // train --------------------------------------------------------------
    auto* train_cmd = add_common(
        app.add_subcommand("train", "train word embeddings over the token file"));
    struct {
        std::string tokens, out, background, mode = "cbow", label = "XDOMAINX";
        int size = 200, window = 8, negative = 25, iter = 15, min_count = 5,
            workers = 1;
        double sample = 1e-4, alpha = 0.0;
        uint64_t seed = 1;
        bool subsample_label = false;
    } train_opt;
    train_cmd->add_option("--tokens", train_opt.tokens, "token file (default: <workspace>/tokens.txt)");
    train_cmd->add_option("--out", train_opt.out, "model file (default: <workspace>/model.vec)");
    train_cmd->add_option("--background", train_opt.background, "background corpus to append after label insertion");
    train_cmd->add_option("--label", train_opt.label, "corpus label token")->capture_default_str();
    train_cmd->add_option("--mode", train_opt.mode, "cbow or skipgram")->capture_default_str();
    train_cmd->add_option("--size", train_opt.size, "vector dimensionality")->capture_default_str();
    train_cmd->add_option("--window", train_opt.window, "context window")->capture_default_str();
    train_cmd->add_option("--negative", train_opt.negative, "negative samples per prediction")->capture_default_str();
    train_cmd->add_option("--sample", train_opt.sample, "frequent-word subsampling threshold")->capture_default_str();
    train_cmd->add_option("--iter", train_opt.iter, "training epochs")->capture_default_str();
    train_cmd->add_option("--min-count", train_opt.min_count, "drop words rarer than this")->capture_default_str();
    train_cmd->add_option("--alpha", train_opt.alpha, "initial learning rate (0 = mode default)")->capture_default_str();
    train_cmd->add_option("--workers", train_opt.workers, "training threads")->capture_default_str();
    train_cmd->add_option("--seed", train_opt.seed, "RNG seed")->capture_default_str();
    train_cmd->add_flag("--subsample-label", train_opt.subsample_label,
                        "let the label token be subsampled like any other word");
    train_cmd->callback([&] {
        rc = guarded([&] {
            PipelineConfig cfg = base_config(train_cmd);
            if (train_cmd->count("--background")) cfg.background_corpus = train_opt.background;
            if (train_cmd->count("--label")) cfg.label.label = train_opt.label;
            if (train_cmd->count("--mode")) {
                std::string m = to_lower(train_opt.mode);
                if (m == "cbow") cfg.train.mode = TrainParams::Mode::cbow;
                else if (m == "skipgram" || m == "sg") cfg.train.mode = TrainParams::Mode::skipgram;
                else throw std::invalid_argument("invalid --mode: " + train_opt.mode);
            }
            if (train_cmd->count("--size")) cfg.train.dim = train_opt.size;
            if (train_cmd->count("--window")) cfg.train.window = train_opt.window;
            if (train_cmd->count("--negative")) cfg.train.negatives = train_opt.negative;
            if (train_cmd->count("--sample")) cfg.train.sample = train_opt.sample;
            if (train_cmd->count("--iter")) cfg.train.iters = train_opt.iter;
            if (train_cmd->count("--min-count")) cfg.train.min_count = train_opt.min_count;
            if (train_cmd->count("--alpha")) cfg.train.alpha0 = train_opt.alpha;
            if (train_cmd->count("--workers")) cfg.train.workers = train_opt.workers;
            if (train_cmd->count("--seed")) cfg.train.rng_seed = train_opt.seed;
            Paths paths;
            paths.ws = cfg.workspace;
            if (!train_opt.tokens.empty()) paths.tokens_ = train_opt.tokens;
            if (!train_opt.out.empty()) paths.model_ = train_opt.out;
            fs::create_directories(paths.ws);
            stage_train(cfg, paths, train_opt.subsample_label);
        });
    });

    // nearest -------------------------------------------------------------
    auto* nearest_cmd = add_common(
        app.add_subcommand("nearest", "list the nearest neighbors of a word"));
    struct {
        std::string model, word;
        int k = 10;
    } nearest_opt;
    nearest_cmd->add_option("--model", nearest_opt.model, "model file (default: <workspace>/model.vec)");
    nearest_cmd->add_option("--word", nearest_opt.word, "query word")->required();
    nearest_cmd->add_option("--k", nearest_opt.k, "neighbors to list")->capture_default_str();
    nearest_cmd->callback([&] {
        rc = guarded([&] {
            PipelineConfig cfg = base_config(nearest_cmd);
            Paths paths;
            paths.ws = cfg.workspace;
            if (!nearest_opt.model.empty()) paths.model_ = nearest_opt.model;
            stage_nearest(paths, nearest_opt.word, nearest_opt.k);
        });
    });

    // extract ---------------------------------------------------------------
    auto* extract_cmd = add_common(app.add_subcommand(
        "extract", "rank the domain's characteristic vocabulary from the model"));
    struct {
        std::string model, out, label = "XDOMAINX";
        int k_seeds = 40, expand_k = 5, rounds = 1;
    } extract_opt;
    extract_cmd->add_option("--model", extract_opt.model, "model file (default: <workspace>/model.vec)");
    extract_cmd->add_option("--out", extract_opt.out, "term file (default: <workspace>/termvocab.tsv)");
    extract_cmd->add_option("--label", extract_opt.label, "corpus label token")->capture_default_str();
    extract_cmd->add_option("--k-seeds", extract_opt.k_seeds, "words nearest the label kept as seeds")->capture_default_str();
    extract_cmd->add_option("--expand-k", extract_opt.expand_k, "neighbors pulled in per seed")->capture_default_str();
    extract_cmd->add_option("--rounds", extract_opt.rounds, "expansion rounds")->capture_default_str();
    extract_cmd->callback([&] {
        rc = guarded([&] {
            PipelineConfig cfg = base_config(extract_cmd);
            if (extract_cmd->count("--label")) cfg.label.label = extract_opt.label;
            if (extract_cmd->count("--k-seeds")) cfg.k_seeds = extract_opt.k_seeds;
            if (extract_cmd->count("--expand-k")) cfg.expand_k = extract_opt.expand_k;
            Paths paths;
            paths.ws = cfg.workspace;
            if (!extract_opt.model.empty()) paths.model_ = extract_opt.model;
            if (!extract_opt.out.empty()) paths.termvocab_ = extract_opt.out;
            fs::create_directories(paths.ws);
            stage_extract(cfg, paths, extract_opt.rounds);
        });
    });

    // phrases -----------------------------------------------------------------
    auto* phrases_cmd = add_common(app.add_subcommand(
        "phrases", "mine multiword phrases and filter term candidates"));
    struct {
        std::string stoplist;
        int max_len = 4;
    } phrases_opt;
    phrases_cmd->add_option("--stoplist", phrases_opt.stoplist, "stoplist file (default: built-in)");
    phrases_cmd->add_option("--max-len", phrases_opt.max_len, "longest phrase kept")->capture_default_str();
    phrases_cmd->callback([&] {
        rc = guarded([&] {
            PipelineConfig cfg = base_config(phrases_cmd);
            if (phrases_cmd->count("--stoplist")) cfg.stoplist_file = phrases_opt.stoplist;
            Paths paths;
            paths.ws = cfg.workspace;
            fs::create_directories(paths.ws);
            stage_phrases(cfg, paths, phrases_opt.max_len);
        });
    });

    // taxonomy -------------------------------------------------------------
    auto* taxonomy_cmd = add_common(app.add_subcommand(
        "taxonomy", "derive hypernym pairs and render the topic taxonomy"));
    struct {
        std::string topic;
        double ratio = 2.0;
        int min_cooc = 2;
    } taxonomy_opt;
    taxonomy_cmd->add_option("--topic", taxonomy_opt.topic, "root term of the taxonomy");
    taxonomy_cmd->add_option("--ratio", taxonomy_opt.ratio, "frequency ratio for hypernym direction")->capture_default_str();
    taxonomy_cmd->add_option("--min-cooc", taxonomy_opt.min_cooc, "sentence co-occurrences required per pair")->capture_default_str();
    taxonomy_cmd->callback([&] {
        rc = guarded([&] {
            PipelineConfig cfg = base_config(taxonomy_cmd);
            if (taxonomy_cmd->count("--topic")) cfg.topic = taxonomy_opt.topic;
            if (taxonomy_cmd->count("--ratio")) cfg.ratio = taxonomy_opt.ratio;
            if (taxonomy_cmd->count("--min-cooc")) cfg.min_cooc = taxonomy_opt.min_cooc;
            Paths paths;
            paths.ws = cfg.workspace;
            fs::create_directories(paths.ws);
            stage_taxonomy(cfg, paths);
        });
    });

    // pipeline ------------------------------------------------------------
    auto* pipeline_cmd = add_common(app.add_subcommand(
        "pipeline", "run crawl, normalize, train, extract, phrases, taxonomy"));
    struct {
        std::string topic;
        bool force = false;
        bool subsample_label = false;
        int rounds = 1;
        int max_len = 4;
    } pipeline_opt;
    pipeline_cmd->add_option("--topic", pipeline_opt.topic, "root term of the taxonomy");
    pipeline_cmd->add_flag("--force", pipeline_opt.force, "rerun stages even when outputs are fresh");
    pipeline_cmd->add_flag("--subsample-label", pipeline_opt.subsample_label,
                           "let the label token be subsampled like any other word");
    pipeline_cmd->add_option("--rounds", pipeline_opt.rounds, "expansion rounds")->capture_default_str();
    pipeline_cmd->add_option("--max-len", pipeline_opt.max_len, "longest phrase kept")->capture_default_str();
    pipeline_cmd->callback([&] {
        rc = guarded([&] {
            PipelineConfig cfg = base_config(pipeline_cmd);
            if (pipeline_cmd->count("--topic")) cfg.topic = pipeline_opt.topic;
            Paths paths;
            paths.ws = cfg.workspace;
            fs::create_directories(paths.ws);
            run_pipeline(cfg, paths, pipeline_opt.force, pipeline_opt.subsample_label,
                         pipeline_opt.rounds, pipeline_opt.max_len);
        });
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    return rc;
}
