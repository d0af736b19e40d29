#ifndef TERMFORGE_TAXONOMY_HPP
#define TERMFORGE_TAXONOMY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "termforge/common.hpp"
#include "termforge/phrases.hpp"

namespace termforge {

struct HypernymPair {
    enum class Source { inclusion, frequency };

    std::vector<std::string> hyper;
    std::vector<std::string> hypo;
    Source source = Source::frequency;
    // Inclusion pairs: length of the shared subterm span. Frequency pairs:
    // number of co-occurring sentences.
    int64_t evidence = 0;
};

struct Taxonomy {
    // The unstemmed crawl topic, parent of every top-level term.
    std::string root;
    // Child term key -> parent term key; "" stands for the root. Keys are
    // space-joined stem sequences.
    std::map<std::string, std::string> parent;
    // Term key -> attested surface spellings, most frequent first. A term
    // with no attested spelling maps to its own key (stem fallback).
    std::map<std::string, std::vector<std::string>> term_index;
};

namespace detail {

inline std::string term_key(const std::vector<std::string>& stems) { return join(stems, " "); }

}  // namespace detail

// "Dog and poodle": among candidates co-occurring in at least min_cooc
// sentences, the one at least ratio times more frequent is the hypernym.
// Frequencies are corpus-wide stemmed-match counts.
inline std::vector<HypernymPair> pairs_by_frequency(const std::vector<TermCandidate>& candidates,
                                                    const std::vector<TokenStream>& docs,
                                                    double ratio = 2.0, int64_t min_cooc = 2) {
    std::map<std::vector<std::string>, size_t> by_stems;
    std::set<size_t> lengths;
    for (size_t i = 0; i < candidates.size(); ++i) {
        by_stems.emplace(candidates[i].stems, i);
        lengths.insert(candidates[i].stems.size());
    }

    std::vector<int64_t> freq(candidates.size(), 0);
    std::map<std::pair<size_t, size_t>, int64_t> cooc;
    detail::for_each_sentence(docs, [&](const std::vector<std::string>& tokens, size_t lo,
                                        size_t hi, size_t) {
        std::vector<std::string> stemmed = detail::stem_range(tokens, lo, hi);
        auto matches = detail::match_candidates(stemmed, by_stems, lengths);
        std::set<std::pair<size_t, size_t>> seen;
        for (const auto& ma : matches) ++freq[ma.candidate];
        for (size_t a = 0; a < matches.size(); ++a) {
            for (size_t b = a + 1; b < matches.size(); ++b) {
                if (matches[a].candidate == matches[b].candidate) continue;
                bool disjoint = matches[a].end <= matches[b].begin ||
                                matches[b].end <= matches[a].begin;
                if (!disjoint) continue;
                size_t x = std::min(matches[a].candidate, matches[b].candidate);
                size_t y = std::max(matches[a].candidate, matches[b].candidate);
                seen.insert({x, y});
            }
        }
        for (const auto& pair : seen) ++cooc[pair];
    });

    std::vector<HypernymPair> out;
    for (const auto& [pair, sentences] : cooc) {
        if (sentences < min_cooc) continue;
        auto [i, j] = pair;
        size_t hyper, hypo;
        if (static_cast<double>(freq[i]) >= ratio * static_cast<double>(freq[j]))
            hyper = i, hypo = j;
        else if (static_cast<double>(freq[j]) >= ratio * static_cast<double>(freq[i]))
            hyper = j, hypo = i;
        else
            continue;
        out.push_back({candidates[hyper].stems, candidates[hypo].stems,
                       HypernymPair::Source::frequency, sentences});
    }
    return out;
}

// String inclusion: a candidate whose stems form a strict contiguous
// subsequence of another candidate's stems is that candidate's hypernym.
inline std::vector<HypernymPair> pairs_by_inclusion(const std::vector<TermCandidate>& candidates) {
    std::vector<HypernymPair> out;
    for (size_t a = 0; a < candidates.size(); ++a) {
        const auto& sub = candidates[a].stems;
        for (size_t b = 0; b < candidates.size(); ++b) {
            if (a == b) continue;
            const auto& sup = candidates[b].stems;
            if (sub.size() >= sup.size()) continue;
            bool included = false;
            for (size_t off = 0; off + sub.size() <= sup.size() && !included; ++off)
                included = std::equal(sub.begin(), sub.end(),
                                      sup.begin() + static_cast<ptrdiff_t>(off));
            if (included)
                out.push_back({sub, sup, HypernymPair::Source::inclusion,
                               static_cast<int64_t>(sub.size())});
        }
    }
    return out;
}

// All attested spellings for a stemmed term, most frequent first. An
// unattested term falls back to its own joined stems; `attested` tells the
// caller to warn.
struct UnstemResult {
    std::vector<std::string> variants;
    bool attested = false;
};

inline UnstemResult unstem(const std::vector<std::string>& stems, const SurfaceIndex& index) {
    UnstemResult r;
    auto it = index.find(stems);
    if (it == index.end() || it->second.empty()) {
        r.variants.push_back(detail::term_key(stems));
        return r;
    }
    std::vector<std::pair<std::string, int64_t>> ranked(it->second.begin(), it->second.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    for (auto& [surface, n] : ranked) r.variants.push_back(surface);
    r.attested = true;
    return r;
}

// Greedy single-parent assembly: pairs are applied in a total order
// (inclusion before frequency, stronger evidence first, then lexicographic),
// each child keeps the first parent that does not close a cycle, and
// leftover candidates hang directly off the root.
inline Taxonomy build_taxonomy(std::vector<HypernymPair> pairs, const std::string& root_term,
                               const std::vector<TermCandidate>& candidates) {
    Taxonomy tax;
    tax.root = root_term;

    std::sort(pairs.begin(), pairs.end(), [](const HypernymPair& a, const HypernymPair& b) {
        if (a.source != b.source) return a.source == HypernymPair::Source::inclusion;
        if (a.evidence != b.evidence) return a.evidence > b.evidence;
        if (a.hyper != b.hyper) return a.hyper < b.hyper;
        return a.hypo < b.hypo;
    });

    for (const auto& c : candidates) tax.parent.emplace(detail::term_key(c.stems), "");

    auto reaches = [&](const std::string& from, const std::string& target) {
        std::string cur = from;
        while (!cur.empty()) {
            if (cur == target) return true;
            auto it = tax.parent.find(cur);
            if (it == tax.parent.end()) break;
            cur = it->second;
        }
        return false;
    };

    std::set<std::string> assigned;
    for (const auto& p : pairs) {
        std::string hyper = detail::term_key(p.hyper);
        std::string hypo = detail::term_key(p.hypo);
        if (hyper == hypo) continue;
        if (!tax.parent.count(hyper) || !tax.parent.count(hypo)) continue;
        if (assigned.count(hypo)) continue;
        if (reaches(hyper, hypo)) continue;
        tax.parent[hypo] = hyper;
        assigned.insert(hypo);
    }

    for (const auto& c : candidates) {
        std::string key = detail::term_key(c.stems);
        if (tax.term_index.count(key)) continue;
        std::vector<std::pair<std::string, int64_t>> ranked(c.surface_forms.begin(),
                                                            c.surface_forms.end());
        std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second) return a.second > b.second;
            return a.first < b.first;
        });
        auto& variants = tax.term_index[key];
        for (auto& [surface, n] : ranked) variants.push_back(surface);
        if (variants.empty()) variants.push_back(key);
    }
    return tax;
}

// One root-first ">"-joined line per leaf, most frequent spelling of every
// term, sorted.
inline std::vector<std::string> render_paths(const Taxonomy& tax) {
    std::set<std::string> has_child;
    for (const auto& [child, parent] : tax.parent)
        if (!parent.empty()) has_child.insert(parent);

    std::vector<std::string> lines;
    for (const auto& [key, parent] : tax.parent) {
        if (has_child.count(key)) continue;
        std::vector<std::string> chain;
        std::string cur = key;
        while (!cur.empty()) {
            auto it = tax.term_index.find(cur);
            chain.push_back(it != tax.term_index.end() && !it->second.empty() ? it->second.front()
                                                                              : cur);
            cur = tax.parent.at(cur);
        }
        chain.push_back(tax.root);
        std::reverse(chain.begin(), chain.end());
        lines.push_back(join(chain, ">"));
    }
    if (lines.empty()) lines.push_back(tax.root);
    std::sort(lines.begin(), lines.end());
    return lines;
}

}  // namespace termforge

#endif
