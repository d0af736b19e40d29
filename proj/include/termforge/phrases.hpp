#ifndef TERMFORGE_PHRASES_HPP
#define TERMFORGE_PHRASES_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "termforge/common.hpp"
#include "termforge/porter.hpp"
#include "termforge/textnorm.hpp"

namespace termforge {

struct PhraseEntry {
    int64_t count = 0;
    // Attested unstemmed spellings with how often each was seen.
    std::map<std::string, int64_t> surface_forms;
};

// Multiword phrase candidates keyed by their stemmed token sequence.
struct PhraseTable {
    std::map<std::vector<std::string>, PhraseEntry> entries;
};

struct TermCandidate {
    std::vector<std::string> stems;
    int64_t count = 0;
    std::map<std::string, int64_t> surface_forms;
    // Index of a sentence proving co-occurrence, set by cooccurrence_filter.
    int64_t witness = -1;
};

// Stemmed sequence (single words included) -> attested surfaces with counts.
using SurfaceIndex = std::map<std::vector<std::string>, std::map<std::string, int64_t>>;

struct TokenRun {
    size_t begin = 0;
    size_t end = 0;
};

// Maximal runs of non-stopword tokens within [lo, hi). The runs plus the
// stopword gaps between them partition the range.
inline std::vector<TokenRun> nonstop_runs(const std::vector<std::string>& tokens, size_t lo,
                                          size_t hi,
                                          const std::unordered_set<std::string>& stoplist) {
    std::vector<TokenRun> runs;
    size_t i = lo;
    while (i < hi) {
        while (i < hi && stoplist.count(tokens[i])) ++i;
        size_t b = i;
        while (i < hi && !stoplist.count(tokens[i])) ++i;
        if (i > b) runs.push_back({b, i});
    }
    return runs;
}

namespace detail {

// Calls fn(tokens, lo, hi, sentence_index) for every sentence across the
// document list; the index runs globally so it can serve as a witness id.
template <typename Fn>
inline void for_each_sentence(const std::vector<TokenStream>& docs, Fn fn) {
    size_t index = 0;
    for (const auto& doc : docs) {
        if (doc.sentence_bounds.empty()) {
            if (!doc.tokens.empty()) fn(doc.tokens, size_t{0}, doc.tokens.size(), index++);
            continue;
        }
        for (auto [b, e] : doc.sentence_bounds) fn(doc.tokens, b, e, index++);
    }
}

inline std::vector<std::string> stem_range(const std::vector<std::string>& tokens, size_t b,
                                           size_t e) {
    std::vector<std::string> out;
    out.reserve(e - b);
    for (size_t i = b; i < e; ++i) out.push_back(porter_stem(tokens[i]));
    return out;
}

inline std::string surface_range(const std::vector<std::string>& tokens, size_t b, size_t e) {
    std::string out;
    for (size_t i = b; i < e; ++i) {
        if (i > b) out += ' ';
        out += tokens[i];
    }
    return out;
}

// A run longer than max_len yields its sliding windows of exactly max_len;
// shorter runs yield themselves.
template <typename Fn>
inline void for_each_segment(const TokenRun& run, size_t max_len, Fn fn) {
    size_t len = run.end - run.begin;
    if (len <= max_len) {
        fn(run.begin, run.end);
        return;
    }
    for (size_t s = run.begin; s + max_len <= run.end; ++s) fn(s, s + max_len);
}

}  // namespace detail

// Phrase candidates are the stopword-bounded token runs of each sentence,
// recorded under their stemmed form. Single-token runs are not phrases and
// are skipped.
inline PhraseTable extract_phrases(const std::vector<TokenStream>& docs,
                                   const std::unordered_set<std::string>& stoplist,
                                   size_t max_len = 4) {
    PhraseTable table;
    detail::for_each_sentence(docs, [&](const std::vector<std::string>& tokens, size_t lo,
                                        size_t hi, size_t) {
        for (const TokenRun& run : nonstop_runs(tokens, lo, hi, stoplist)) {
            detail::for_each_segment(run, max_len, [&](size_t b, size_t e) {
                if (e - b < 2) return;
                PhraseEntry& entry = table.entries[detail::stem_range(tokens, b, e)];
                entry.count += 1;
                entry.surface_forms[detail::surface_range(tokens, b, e)] += 1;
            });
        }
    });
    return table;
}

// Keeps phrases sharing at least one stem with the single-word candidates.
inline PhraseTable filter_phrases_by_candidates(
    const PhraseTable& table, const std::unordered_set<std::string>& single_stems) {
    PhraseTable out;
    for (const auto& [stems, entry] : table.entries) {
        for (const auto& s : stems) {
            if (single_stems.count(s)) {
                out.entries.emplace(stems, entry);
                break;
            }
        }
    }
    return out;
}

// Attested spellings for every single non-stopword token plus every phrase
// already in the table, so stemmed terms can be rendered unstemmed later.
inline SurfaceIndex build_surface_index(const std::vector<TokenStream>& docs,
                                        const std::unordered_set<std::string>& stoplist,
                                        const PhraseTable& table) {
    SurfaceIndex index;
    detail::for_each_sentence(docs, [&](const std::vector<std::string>& tokens, size_t lo,
                                        size_t hi, size_t) {
        for (size_t i = lo; i < hi; ++i) {
            if (stoplist.count(tokens[i])) continue;
            index[{porter_stem(tokens[i])}][tokens[i]] += 1;
        }
    });
    for (const auto& [stems, entry] : table.entries) {
        auto& surfaces = index[stems];
        for (const auto& [surface, n] : entry.surface_forms) surfaces[surface] += n;
    }
    return index;
}

namespace detail {

struct CandidateMatch {
    size_t candidate;
    size_t begin;
    size_t end;
};

inline std::vector<CandidateMatch> match_candidates(
    const std::vector<std::string>& stemmed, const std::map<std::vector<std::string>, size_t>& by_stems,
    const std::set<size_t>& lengths) {
    std::vector<CandidateMatch> matches;
    std::vector<std::string> probe;
    for (size_t pos = 0; pos < stemmed.size(); ++pos) {
        for (size_t len : lengths) {
            if (pos + len > stemmed.size()) break;
            probe.assign(stemmed.begin() + static_cast<ptrdiff_t>(pos),
                         stemmed.begin() + static_cast<ptrdiff_t>(pos + len));
            auto it = by_stems.find(probe);
            if (it != by_stems.end()) matches.push_back({it->second, pos, pos + len});
        }
    }
    return matches;
}

}  // namespace detail

// Retains candidates that appear in some sentence alongside a different
// candidate on a non-overlapping span, and records that sentence as the
// witness. A phrase never witnesses its own subphrase within the same span.
inline std::vector<TermCandidate> cooccurrence_filter(const std::vector<TermCandidate>& candidates,
                                                      const std::vector<TokenStream>& docs) {
    std::map<std::vector<std::string>, size_t> by_stems;
    std::set<size_t> lengths;
    for (size_t i = 0; i < candidates.size(); ++i) {
        by_stems.emplace(candidates[i].stems, i);
        lengths.insert(candidates[i].stems.size());
    }

    std::vector<int64_t> witness(candidates.size(), -1);
    detail::for_each_sentence(docs, [&](const std::vector<std::string>& tokens, size_t lo,
                                        size_t hi, size_t sentence) {
        std::vector<std::string> stemmed = detail::stem_range(tokens, lo, hi);
        auto matches = detail::match_candidates(stemmed, by_stems, lengths);
        for (size_t a = 0; a < matches.size(); ++a) {
            if (witness[matches[a].candidate] >= 0) continue;
            for (size_t b = 0; b < matches.size(); ++b) {
                if (matches[b].candidate == matches[a].candidate) continue;
                bool disjoint = matches[a].end <= matches[b].begin ||
                                matches[b].end <= matches[a].begin;
                if (disjoint) {
                    witness[matches[a].candidate] = static_cast<int64_t>(sentence);
                    break;
                }
            }
        }
    });

    std::vector<TermCandidate> out;
    for (size_t i = 0; i < candidates.size(); ++i) {
        if (witness[i] < 0) continue;
        out.push_back(candidates[i]);
        out.back().witness = witness[i];
    }
    return out;
}

}  // namespace termforge

#endif
