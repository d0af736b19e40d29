#ifndef TERMFORGE_VOCAB_HPP
#define TERMFORGE_VOCAB_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "termforge/textnorm.hpp"

namespace termforge {

struct Vocabulary {
    std::vector<std::string> words;       // index -> word
    std::vector<int64_t> counts;          // index -> corpus frequency
    std::unordered_map<std::string, int> index;
    int64_t total_count = 0;

    size_t size() const { return words.size(); }

    int lookup(const std::string& w) const {
        auto it = index.find(w);
        return it == index.end() ? -1 : it->second;
    }
};

// Words at or above min_count, indexed by descending count with
// lexicographic tie-break.
inline Vocabulary build_vocab(const std::vector<std::string>& tokens, int min_count) {
    std::unordered_map<std::string, int64_t> freq;
    for (const auto& t : tokens) ++freq[t];

    std::vector<std::pair<std::string, int64_t>> kept;
    for (auto& [word, count] : freq)
        if (count >= min_count) kept.emplace_back(word, count);
    std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });

    Vocabulary v;
    v.words.reserve(kept.size());
    v.counts.reserve(kept.size());
    for (auto& [word, count] : kept) {
        v.index.emplace(word, static_cast<int>(v.words.size()));
        v.words.push_back(word);
        v.counts.push_back(count);
        v.total_count += count;
    }
    return v;
}

inline Vocabulary build_vocab(const TokenStream& tokens, int min_count) {
    return build_vocab(tokens.tokens, min_count);
}

// Probability of keeping an occurrence of a word under frequent-word
// subsampling; monotonically nonincreasing in count.
inline double keep_probability(int64_t count, int64_t total, double sample) {
    if (sample <= 0.0) return 1.0;
    double f = static_cast<double>(count) / static_cast<double>(total);
    if (f <= sample) return 1.0;
    return std::min(1.0, (std::sqrt(f / sample) + 1.0) * sample / f);
}

}  // namespace termforge

#endif
