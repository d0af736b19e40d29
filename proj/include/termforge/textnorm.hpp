#ifndef TERMFORGE_TEXTNORM_HPP
#define TERMFORGE_TEXTNORM_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "termforge/common.hpp"

namespace termforge {

struct NormOptions {
    bool lowercase = true;
    bool strip_non_alnum = true;
    bool spell_digits = true;
    // Hyphens are deleted by the strip rule, fusing "chronic-fatigue" into
    // one token; set split_hyphens to break such words apart instead.
    bool split_hyphens = false;
    std::unordered_set<std::string> stoplist;
    // Tokens listed here (e.g. an inserted corpus label) bypass every rule.
    std::unordered_set<std::string> reserved;
};

struct TokenStream {
    std::vector<std::string> tokens;
    // Half-open [begin, end) ranges into tokens, one per input sentence.
    std::vector<std::pair<size_t, size_t>> sentence_bounds;
};

namespace detail {

inline const char* kDigitWords[10] = {"zero", "one", "two",   "three", "four",
                                      "five", "six", "seven", "eight", "nine"};

inline void emit_token(const std::string& tok, const NormOptions& opts,
                       std::vector<std::string>& out) {
    if (tok.empty()) return;
    if (!opts.spell_digits) {
        if (!opts.stoplist.count(tok)) out.push_back(tok);
        return;
    }
    size_t i = 0;
    while (i < tok.size()) {
        bool digit = std::isdigit(static_cast<unsigned char>(tok[i])) != 0;
        size_t j = i;
        while (j < tok.size() &&
               (std::isdigit(static_cast<unsigned char>(tok[j])) != 0) == digit)
            ++j;
        if (digit) {
            for (size_t k = i; k < j; ++k) {
                std::string word = kDigitWords[tok[k] - '0'];
                if (!opts.stoplist.count(word)) out.push_back(std::move(word));
            }
        } else {
            std::string word = tok.substr(i, j - i);
            if (!opts.stoplist.count(word)) out.push_back(std::move(word));
        }
        i = j;
    }
}

inline void normalize_sentence(std::string_view sentence, const NormOptions& opts,
                               std::vector<std::string>& out) {
    for (const std::string& raw : split_ws(sentence)) {
        if (opts.reserved.count(raw)) {
            out.push_back(raw);
            continue;
        }
        std::string pieces = raw;
        if (opts.split_hyphens)
            for (char& c : pieces)
                if (c == '-') c = ' ';
        for (const std::string& piece : split_ws(pieces)) {
            std::string tok;
            tok.reserve(piece.size());
            for (unsigned char c : piece) {
                if (opts.lowercase) c = static_cast<unsigned char>(std::tolower(c));
                bool keep = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
                            (!opts.lowercase && c >= 'A' && c <= 'Z');
                if (keep) tok.push_back(static_cast<char>(c));
                else if (!opts.strip_non_alnum) tok.push_back(static_cast<char>(c));
            }
            emit_token(tok, opts, out);
        }
    }
}

}  // namespace detail

// One input line = one sentence. Per token: lowercase, strip to [a-z0-9],
// spell digit runs out as words, drop stoplist entries.
inline TokenStream normalize(std::string_view text, const NormOptions& opts = {}) {
    TokenStream ts;
    for (const std::string& line : split_lines(text)) {
        size_t begin = ts.tokens.size();
        detail::normalize_sentence(line, opts, ts.tokens);
        if (ts.tokens.size() > begin)
            ts.sentence_bounds.emplace_back(begin, ts.tokens.size());
    }
    return ts;
}

inline std::unordered_set<std::string> load_stoplist_text(std::string_view text) {
    std::unordered_set<std::string> out;
    NormOptions bare;
    for (const std::string& line : split_lines(text)) {
        std::vector<std::string> toks;
        detail::normalize_sentence(line, bare, toks);
        for (auto& t : toks) out.insert(std::move(t));
    }
    return out;
}

}  // namespace termforge

#endif
