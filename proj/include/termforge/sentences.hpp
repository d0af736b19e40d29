#ifndef TERMFORGE_SENTENCES_HPP
#define TERMFORGE_SENTENCES_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "termforge/common.hpp"

namespace termforge {

// Rough sentence splitting: a run of . ! ? followed by whitespace ends a
// sentence, as does a blank line. Single newlines are soft breaks.
inline std::vector<std::string> sentencize(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        std::string t = trim(cur);
        if (!t.empty()) out.push_back(std::move(t));
        cur.clear();
    };
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        char c = text[i];
        if (c == '.' || c == '!' || c == '?') {
            size_t j = i;
            while (j < n && (text[j] == '.' || text[j] == '!' || text[j] == '?')) ++j;
            cur.append(text.substr(i, j - i));
            if (j >= n || std::isspace(static_cast<unsigned char>(text[j]))) {
                flush();
            }
            i = j;
            continue;
        }
        if (c == '\n') {
            size_t j = i;
            int newlines = 0;
            while (j < n && std::isspace(static_cast<unsigned char>(text[j]))) {
                if (text[j] == '\n') ++newlines;
                ++j;
            }
            if (newlines >= 2) flush();
            else if (!cur.empty()) cur += ' ';
            i = j;
            continue;
        }
        cur += c;
        ++i;
    }
    flush();
    return out;
}

// True when the sentence contains at least min_run consecutive tokens that
// are lexicon words after stripping surrounding punctuation.
inline bool retain_sentence(std::string_view sentence,
                            const std::unordered_set<std::string>& lexicon,
                            int min_run = 3) {
    int run = 0;
    for (const std::string& raw : split_ws(sentence)) {
        size_t b = 0, e = raw.size();
        while (b < e && !std::isalnum(static_cast<unsigned char>(raw[b]))) ++b;
        while (e > b && !std::isalnum(static_cast<unsigned char>(raw[e - 1]))) --e;
        std::string word = to_lower(std::string_view(raw).substr(b, e - b));
        if (!word.empty() && lexicon.count(word)) {
            if (++run >= min_run) return true;
        } else {
            run = 0;
        }
    }
    return false;
}

// Case-sensitive substring gate over the whole page text.
inline bool page_passes(std::string_view text, const std::vector<std::string>& patterns) {
    for (const std::string& p : patterns) {
        if (!p.empty() && text.find(p) != std::string_view::npos) return true;
    }
    return false;
}

}  // namespace termforge

#endif
