#ifndef TERMFORGE_CRAWLER_HPP
#define TERMFORGE_CRAWLER_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <deque>
#include <filesystem>
#include <future>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "termforge/common.hpp"
#include "termforge/fetch.hpp"
#include "termforge/html.hpp"
#include "termforge/lexicon.hpp"
#include "termforge/robots.hpp"
#include "termforge/sentences.hpp"
#include "termforge/url.hpp"

namespace termforge {

struct CrawlConfig {
    std::vector<std::string> seeds;
    std::vector<std::string> patterns;
    int64_t target_pages = 1000;
    int64_t per_site_cap = 100;
    int64_t shuffle_interval = 100;
    int64_t politeness_delay_ms = 1000;
    int64_t fetch_timeout_s = 10;
    size_t max_frontier = 100000;
    int fetch_workers = 4;
    uint64_t rng_seed = 1;
    std::string user_agent = "termforge/0.1";
    // Empty means the built-in common-word list.
    std::unordered_set<std::string> english_lexicon;
};

struct CrawlState {
    std::deque<std::string> to_crawl;
    std::unordered_set<std::string> visited;
    std::map<std::string, int64_t> host_counts;
    int64_t retained = 0;
    int64_t fetched_total = 0;
};

struct RetainedPage {
    std::string url;
    std::vector<std::string> sentences;
    std::string fetch_time;
};

struct CrawlResult {
    std::vector<RetainedPage> pages;
    CrawlState state;
};

inline std::string iso8601_utc(std::chrono::system_clock::time_point tp) {
    std::time_t t = std::chrono::system_clock::to_time_t(tp);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ", tm.tm_year + 1900,
                  tm.tm_mon + 1, tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec);
    return buf;
}

inline std::vector<std::string> load_seed_list(const std::string& path) {
    std::vector<std::string> seeds;
    for (const std::string& line : split_lines(read_file(path))) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        seeds.push_back(std::move(t));
    }
    return seeds;
}

inline std::vector<std::string> load_pattern_list(const std::string& path) {
    std::vector<std::string> patterns;
    for (const std::string& line : split_lines(read_file(path))) {
        std::string t = trim(line);
        if (t.empty()) continue;
        patterns.push_back(std::move(t));
    }
    return patterns;
}

// Breadth-wise fetch loop: pop the frontier head, skip visited URLs and
// capped hosts, fetch, keep sentences with an English run, and follow links
// only from pages that pass the pattern gate. The frontier is reshuffled
// after every shuffle_interval fetch attempts. Fetches run on up to
// fetch_workers threads, at most one in flight per host; results are
// applied in dispatch order, so the crawl is deterministic whenever the
// server is.
inline CrawlResult crawl(const CrawlConfig& cfg, Fetcher& fetcher) {
    if (cfg.seeds.empty()) throw std::invalid_argument("crawl: no seeds");
    if (cfg.patterns.empty()) throw std::invalid_argument("crawl: no patterns");
    if (cfg.target_pages < 1 || cfg.per_site_cap < 1 || cfg.shuffle_interval < 1)
        throw std::invalid_argument("crawl: limits must be positive");

    CrawlResult res;
    CrawlState& st = res.state;
    const auto& lexicon = cfg.english_lexicon.empty() ? default_lexicon() : cfg.english_lexicon;
    std::mt19937_64 rng(cfg.rng_seed);
    const auto delay = std::chrono::milliseconds(cfg.politeness_delay_ms);

    std::unordered_set<std::string> in_frontier;
    auto enqueue = [&](const std::string& canon) {
        if (st.visited.count(canon) || in_frontier.count(canon)) return;
        if (st.to_crawl.size() >= cfg.max_frontier) return;
        st.to_crawl.push_back(canon);
        in_frontier.insert(canon);
    };
    for (const std::string& s : cfg.seeds) {
        auto canon = canonicalize_url(s);
        if (canon) enqueue(*canon);
    }

    std::map<std::string, RobotsRules> robots_by_origin;
    auto robots_for = [&](const Url& u) -> const RobotsRules& {
        std::string origin = u.scheme + "://" + u.host + ":" + std::to_string(u.effective_port());
        auto it = robots_by_origin.find(origin);
        if (it != robots_by_origin.end()) return it->second;
        Url robots_url = u;
        robots_url.path = "/robots.txt";
        robots_url.query.clear();
        FetchResult r = fetcher.get(robots_url);
        RobotsRules rules;
        if (r.status == 200) rules = parse_robots(r.body, cfg.user_agent);
        return robots_by_origin.emplace(origin, std::move(rules)).first->second;
    };

    struct Job {
        std::string url;
        Url parsed;
        std::future<FetchResult> result;
    };
    std::map<std::string, std::chrono::steady_clock::time_point> next_slot;
    const size_t workers = static_cast<size_t>(std::max(1, cfg.fetch_workers));

    while (st.retained < cfg.target_pages && !st.to_crawl.empty()) {
        std::vector<Job> batch;
        std::vector<std::string> deferred;
        std::set<std::string> batch_hosts;
        while (batch.size() < workers && !st.to_crawl.empty()) {
            std::string url = st.to_crawl.front();
            st.to_crawl.pop_front();
            in_frontier.erase(url);
            if (st.visited.count(url)) continue;
            auto parsed = parse_url(url);
            if (!parsed) {
                st.visited.insert(url);
                continue;
            }
            if (st.host_counts[parsed->host] >= cfg.per_site_cap) {
                st.visited.insert(url);
                continue;
            }
            if (batch_hosts.count(parsed->host)) {
                deferred.push_back(std::move(url));
                continue;
            }
            if (!robots_for(*parsed).allows(parsed->path)) {
                st.visited.insert(url);
                continue;
            }
            st.visited.insert(url);
            st.host_counts[parsed->host] += 1;
            batch_hosts.insert(parsed->host);
            batch.push_back({std::move(url), std::move(*parsed), {}});
        }
        for (auto it = deferred.rbegin(); it != deferred.rend(); ++it) {
            st.to_crawl.push_front(*it);
            in_frontier.insert(*it);
        }
        if (batch.empty()) continue;

        for (Job& job : batch) {
            auto now = std::chrono::steady_clock::now();
            auto slot = next_slot.count(job.parsed.host)
                            ? std::max(now, next_slot[job.parsed.host])
                            : now;
            next_slot[job.parsed.host] = slot + delay;
            job.result = std::async(std::launch::async, [&fetcher, parsed = job.parsed, slot] {
                std::this_thread::sleep_until(slot);
                return fetcher.get(parsed);
            });
        }

        for (Job& job : batch) {
            FetchResult r = job.result.get();
            st.fetched_total += 1;
            if (st.retained < cfg.target_pages && r.ok_html()) {
                ExtractResult page = extract_text_and_links(r.body, job.url);
                std::vector<std::string> kept;
                for (std::string& sen : sentencize(page.text))
                    if (retain_sentence(sen, lexicon)) kept.push_back(std::move(sen));
                if (!kept.empty() && page_passes(join(kept, "\n"), cfg.patterns)) {
                    res.pages.push_back(
                        {job.url, std::move(kept), iso8601_utc(std::chrono::system_clock::now())});
                    st.retained += 1;
                    for (const std::string& link : page.links) enqueue(link);
                }
            }
            if (st.fetched_total % cfg.shuffle_interval == 0)
                std::shuffle(st.to_crawl.begin(), st.to_crawl.end(), rng);
        }
    }
    return res;
}

// One file per page named by a hash of its content, one sentence per line,
// plus a manifest.tsv sidecar in retention order.
inline void write_corpus(const std::string& dir, const std::vector<RetainedPage>& pages) {
    std::filesystem::create_directories(dir);
    std::string manifest = "url\tfile\tsentence_count\tfetch_time\n";
    for (const RetainedPage& p : pages) {
        std::string content = join(p.sentences, "\n") + "\n";
        std::string file = fnv1a64_hex(content) + ".txt";
        write_file(dir + "/" + file, content);
        manifest += p.url + "\t" + file + "\t" + std::to_string(p.sentences.size()) + "\t" +
                    p.fetch_time + "\n";
    }
    write_file(dir + "/manifest.tsv", manifest);
}

struct ManifestRow {
    std::string url;
    std::string file;
    int64_t sentence_count = 0;
    std::string fetch_time;
};

inline std::vector<ManifestRow> load_corpus_manifest(const std::string& dir) {
    std::vector<ManifestRow> rows;
    std::string path = dir + "/manifest.tsv";
    std::vector<std::string> lines = split_lines(read_file(path));
    for (size_t i = 1; i < lines.size(); ++i) {
        if (trim(lines[i]).empty()) continue;
        std::vector<std::string> cols;
        size_t start = 0;
        while (true) {
            size_t tab = lines[i].find('\t', start);
            cols.push_back(lines[i].substr(start, tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        if (cols.size() != 4)
            throw std::runtime_error(path + ":" + std::to_string(i + 1) + ": expected 4 columns");
        rows.push_back({cols[0], cols[1], std::strtoll(cols[2].c_str(), nullptr, 10), cols[3]});
    }
    return rows;
}

}  // namespace termforge

#endif
