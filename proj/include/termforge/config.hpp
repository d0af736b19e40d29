#pragma once

#include <cerrno>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "termforge/common.hpp"
#include "termforge/crawler.hpp"
#include "termforge/domainvocab.hpp"
#include "termforge/embedding.hpp"
#include "termforge/textnorm.hpp"

namespace termforge {

// Whole-pipeline settings joined from the per-stage structs. File-valued
// keys (seed list, patterns, stoplist, background corpus) stay as paths
// here; the stages read them when they run.
struct PipelineConfig {
    std::string topic;
    std::string workspace;
    std::string background_corpus;
    std::string seeds_file;
    std::string patterns_file;
    std::string stoplist_file;
    CrawlConfig crawl;
    NormOptions norm;
    TrainParams train;
    LabelSpec label;
    int k_seeds = 40;
    int expand_k = 5;
    double ratio = 2.0;
    int min_cooc = 2;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigLoad {
    PipelineConfig config;
    std::vector<std::string> warnings;
};

namespace detail {

[[noreturn]] inline void config_fail(const std::string& path, size_t lineno,
                                     const std::string& key) {
    throw ConfigError(path + ":" + std::to_string(lineno) +
                      ": invalid value for key '" + key + "'");
}

inline int64_t config_int(const std::string& value, const std::string& path,
                          size_t lineno, const std::string& key) {
    if (value.empty()) config_fail(path, lineno, key);
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(value.c_str(), &end, 10);
    if (errno != 0 || end != value.c_str() + value.size())
        config_fail(path, lineno, key);
    return v;
}

inline uint64_t config_uint64(const std::string& value, const std::string& path,
                              size_t lineno, const std::string& key) {
    if (value.empty() || value[0] == '-') config_fail(path, lineno, key);
    errno = 0;
    char* end = nullptr;
    unsigned long long v = std::strtoull(value.c_str(), &end, 10);
    if (errno != 0 || end != value.c_str() + value.size())
        config_fail(path, lineno, key);
    return v;
}

inline double config_real(const std::string& value, const std::string& path,
                          size_t lineno, const std::string& key) {
    if (value.empty()) config_fail(path, lineno, key);
    errno = 0;
    char* end = nullptr;
    double v = std::strtod(value.c_str(), &end);
    if (errno != 0 || end != value.c_str() + value.size())
        config_fail(path, lineno, key);
    return v;
}

inline bool config_bool(const std::string& value, const std::string& path,
                        size_t lineno, const std::string& key) {
    std::string v = to_lower(value);
    if (v == "true" || v == "yes" || v == "on" || v == "1") return true;
    if (v == "false" || v == "no" || v == "off" || v == "0") return false;
    config_fail(path, lineno, key);
}

}  // namespace detail

// Parses INI-style text: [section] headers, key=value lines, # or ;
// comments. Unknown sections and keys are reported as warnings; a value
// that fails to parse, or falls outside its legal range, throws
// ConfigError naming the key and line.
inline ConfigLoad parse_config(const std::string& text, const std::string& path) {
    using detail::config_bool;
    using detail::config_fail;
    using detail::config_int;
    using detail::config_real;
    using detail::config_uint64;

    ConfigLoad out;
    PipelineConfig& cfg = out.config;
    auto warn = [&](size_t lineno, const std::string& msg) {
        out.warnings.push_back(path + ":" + std::to_string(lineno) + ": " + msg);
    };
    auto malformed = [&](size_t lineno) {
        throw ConfigError(path + ":" + std::to_string(lineno) +
                          ": expected key=value");
    };

    std::vector<std::string> lines = split_lines(text);
    std::string section;
    bool known_section = false;
    for (size_t i = 0; i < lines.size(); ++i) {
        size_t lineno = i + 1;
        std::string line = trim(lines[i]);
        if (line.empty() || line[0] == '#' || line[0] == ';') continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(path + ":" + std::to_string(lineno) +
                                  ": unterminated section header");
            section = to_lower(trim(line.substr(1, line.size() - 2)));
            known_section = section == "pipeline" || section == "crawl" ||
                            section == "normalize" || section == "train";
            if (!known_section) warn(lineno, "unknown section [" + section + "]");
            continue;
        }

        size_t eq = line.find('=');
        if (eq == std::string::npos) malformed(lineno);
        std::string key = to_lower(trim(line.substr(0, eq)));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) malformed(lineno);
        if (section.empty()) {
            warn(lineno, "key '" + key + "' outside any section");
            continue;
        }
        if (!known_section) continue;

        if (section == "pipeline") {
            if (key == "topic") {
                cfg.topic = value;
            } else if (key == "workspace") {
                cfg.workspace = value;
            } else if (key == "background_corpus") {
                cfg.background_corpus = value;
            } else if (key == "label") {
                if (value.empty()) config_fail(path, lineno, key);
                cfg.label.label = value;
            } else if (key == "k_seeds") {
                int64_t v = config_int(value, path, lineno, key);
                if (v < 1) config_fail(path, lineno, key);
                cfg.k_seeds = static_cast<int>(v);
            } else if (key == "expand_k") {
                int64_t v = config_int(value, path, lineno, key);
                if (v < 1) config_fail(path, lineno, key);
                cfg.expand_k = static_cast<int>(v);
            } else if (key == "ratio") {
                double v = config_real(value, path, lineno, key);
                if (!(v > 0.0)) config_fail(path, lineno, key);
                cfg.ratio = v;
            } else if (key == "min_cooc") {
                int64_t v = config_int(value, path, lineno, key);
                if (v < 1) config_fail(path, lineno, key);
                cfg.min_cooc = static_cast<int>(v);
            } else {
                warn(lineno, "unknown key '" + key + "' in section [pipeline]");
            }
        } else if (section == "crawl") {
            if (key == "seeds") {
                cfg.seeds_file = value;
            } else if (key == "patterns") {
                cfg.patterns_file = value;
            } else if (key == "user_agent") {
                if (value.empty()) config_fail(path, lineno, key);
                cfg.crawl.user_agent = value;
            } else if (key == "target_pages") {
                int64_t v = config_int(value, path, lineno, key);
                if (v < 1) config_fail(path, lineno, key);
                cfg.crawl.target_pages = v;
            } else if (key == "per_site_cap") {
                int64_t v = config_int(value, path, lineno, key);
                if (v < 1) config_fail(path, lineno, key);
                cfg.crawl.per_site_cap = v;
            } else if (key == "shuffle_interval") {
                int64_t v = config_int(value, path, lineno, key);
                if (v < 1) config_fail(path, lineno, key);
                cfg.crawl.shuffle_interval = v;
            } else if (key == "delay_ms") {
                int64_t v = config_int(value, path, lineno, key);
                if (v < 0) config_fail(path, lineno, key);
                cfg.crawl.politeness_delay_ms = v;
            } else if (key == "timeout_s") {
                int64_t v = config_int(value, path, lineno, key);
                if (v < 1) config_fail(path, lineno, key);
                cfg.crawl.fetch_timeout_s = v;
            } else if (key == "max_frontier") {
                int64_t v = config_int(value, path, lineno, key);
                if (v < 1) config_fail(path, lineno, key);
                cfg.crawl.max_frontier = static_cast<size_t>(v);
            } else if (key == "workers") {
                int64_t v = config_int(value, path, lineno, key);
                if (v < 1) config_fail(path, lineno, key);
                cfg.crawl.fetch_workers = static_cast<int>(v);
            } else if (key == "seed") {
                cfg.crawl.rng_seed = config_uint64(value, path, lineno, key);
            } else {
                warn(lineno, "unknown key '" + key + "' in section [crawl]");
            }
        } else if (section == "normalize") {
            if (key == "lowercase") {
                cfg.norm.lowercase = config_bool(value, path, lineno, key);
            } else if (key == "strip_non_alnum") {
                cfg.norm.strip_non_alnum = config_bool(value, path, lineno, key);
            } else if (key == "spell_digits") {
                cfg.norm.spell_digits = config_bool(value, path, lineno, key);
            } else if (key == "split_hyphens") {
                cfg.norm.split_hyphens = config_bool(value, path, lineno, key);
            } else if (key == "stoplist") {
                cfg.stoplist_file = value;
            } else {
                warn(lineno, "unknown key '" + key + "' in section [normalize]");
            }
        } else if (section == "train") {
            if (key == "mode") {
                std::string v = to_lower(value);
                if (v == "cbow")
                    cfg.train.mode = TrainParams::Mode::cbow;
                else if (v == "skipgram" || v == "sg")
                    cfg.train.mode = TrainParams::Mode::skipgram;
                else
                    config_fail(path, lineno, key);
            } else if (key == "size") {
                int64_t v = config_int(value, path, lineno, key);
                if (v < 1) config_fail(path, lineno, key);
                cfg.train.dim = static_cast<int>(v);
            } else if (key == "window") {
                int64_t v = config_int(value, path, lineno, key);
                if (v < 1) config_fail(path, lineno, key);
                cfg.train.window = static_cast<int>(v);
            } else if (key == "negative") {
                int64_t v = config_int(value, path, lineno, key);
                if (v < 0) config_fail(path, lineno, key);
                cfg.train.negatives = static_cast<int>(v);
            } else if (key == "sample") {
                double v = config_real(value, path, lineno, key);
                if (!(v >= 0.0)) config_fail(path, lineno, key);
                cfg.train.sample = v;
            } else if (key == "iter") {
                int64_t v = config_int(value, path, lineno, key);
                if (v < 1) config_fail(path, lineno, key);
                cfg.train.iters = static_cast<int>(v);
            } else if (key == "min_count") {
                int64_t v = config_int(value, path, lineno, key);
                if (v < 1) config_fail(path, lineno, key);
                cfg.train.min_count = static_cast<int>(v);
            } else if (key == "alpha") {
                double v = config_real(value, path, lineno, key);
                if (!(v >= 0.0)) config_fail(path, lineno, key);
                cfg.train.alpha0 = v;
            } else if (key == "workers") {
                int64_t v = config_int(value, path, lineno, key);
                if (v < 1) config_fail(path, lineno, key);
                cfg.train.workers = static_cast<int>(v);
            } else if (key == "seed") {
                cfg.train.rng_seed = config_uint64(value, path, lineno, key);
            } else {
                warn(lineno, "unknown key '" + key + "' in section [train]");
            }
        }
    }
    return out;
}

inline ConfigLoad load_config(const std::string& path) {
    return parse_config(read_file(path), path);
}

}  // namespace termforge
