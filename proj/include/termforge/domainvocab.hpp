#ifndef TERMFORGE_DOMAINVOCAB_HPP
#define TERMFORGE_DOMAINVOCAB_HPP

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "termforge/embedding.hpp"
#include "termforge/textnorm.hpp"

namespace termforge {

// The artificial token interleaved through the domain text. It must stay
// uppercase (normalization treats it as reserved) so it can never collide
// with a normalized corpus word.
struct LabelSpec {
    std::string label = "XDOMAINX";
};

inline bool contains_token(const TokenStream& ts, const std::string& token) {
    return std::find(ts.tokens.begin(), ts.tokens.end(), token) != ts.tokens.end();
}

// Produces t1, L, t2, L, ..., L, tn: one label between each pair of
// neighboring domain tokens, so every domain word trains inside a window
// full of labels.
inline TokenStream interleave_label(const TokenStream& domain, const LabelSpec& spec) {
    if (contains_token(domain, spec.label))
        throw std::runtime_error("label collision: \"" + spec.label +
                                 "\" already occurs in the domain corpus");
    TokenStream out;
    if (domain.tokens.empty()) return out;
    out.tokens.reserve(domain.tokens.size() * 2 - 1);
    for (size_t i = 0; i < domain.tokens.size(); ++i) {
        if (i) out.tokens.push_back(spec.label);
        out.tokens.push_back(domain.tokens[i]);
    }
    out.sentence_bounds.emplace_back(0, out.tokens.size());
    return out;
}

// Background first, then the labeled domain text, as one training stream.
inline TokenStream build_combined_corpus(const TokenStream& labeled_domain,
                                         const TokenStream& background) {
    TokenStream out;
    out.tokens.reserve(background.tokens.size() + labeled_domain.tokens.size());

    auto append = [&](const TokenStream& part) {
        size_t base = out.tokens.size();
        out.tokens.insert(out.tokens.end(), part.tokens.begin(), part.tokens.end());
        if (part.sentence_bounds.empty()) {
            if (!part.tokens.empty())
                out.sentence_bounds.emplace_back(base, base + part.tokens.size());
        } else {
            for (auto [b, e] : part.sentence_bounds)
                out.sentence_bounds.emplace_back(base + b, base + e);
        }
    };
    append(background);
    append(labeled_domain);
    return out;
}

// The k words closest to the label are the domain's characteristic
// vocabulary seeds. The label itself is never returned.
inline std::vector<Neighbor> characteristic_vocab(const EmbeddingModel& m,
                                                  const LabelSpec& spec, int k = 40) {
    if (m.vocab.lookup(spec.label) < 0)
        throw std::runtime_error("label \"" + spec.label +
                                 "\" is not in the model vocabulary; it fell below "
                                 "min_count, retrain with a smaller min_count");
    return nearest(m, spec.label, k);
}

struct ExpandedTerm {
    std::string word;
    // Similarity to the closest term that pulled the word in; 1.0 for the
    // seeds themselves.
    double cosine = 1.0;
    // The original seeds accountable for the word, sorted.
    std::vector<std::string> provenance;
};

struct ExpansionResult {
    std::vector<ExpandedTerm> terms;
    std::vector<std::string> warnings;
};

// One spreading-activation pass: each seed contributes its per_term_k
// nearest neighbors, duplicates merged. Additional rounds treat the newly
// added words as the next frontier; provenance always points back to the
// original seeds.
inline ExpansionResult expand_terms(const EmbeddingModel& m,
                                    const std::vector<std::string>& seeds,
                                    int per_term_k, int rounds = 1) {
    if (per_term_k < 1) throw std::invalid_argument("per_term_k must be at least 1");
    if (rounds < 1) throw std::invalid_argument("rounds must be at least 1");

    ExpansionResult out;
    struct Entry {
        double cosine = 1.0;
        std::set<std::string> provenance;
    };
    std::map<std::string, Entry> table;

    std::vector<std::string> frontier;
    for (const auto& s : seeds) {
        if (m.vocab.lookup(s) < 0) {
            out.warnings.push_back("seed not in vocabulary, skipped: " + s);
            continue;
        }
        auto [it, inserted] = table.try_emplace(s);
        it->second.provenance.insert(s);
        if (inserted) frontier.push_back(s);
    }

    for (int round = 0; round < rounds && !frontier.empty(); ++round) {
        // Roots are snapshotted before the round so that merges made while
        // the round runs cannot leak into it, keeping the result independent
        // of seed order.
        std::vector<std::set<std::string>> roots;
        roots.reserve(frontier.size());
        for (const auto& f : frontier) roots.push_back(table[f].provenance);

        std::vector<std::string> next;
        for (size_t fi = 0; fi < frontier.size(); ++fi) {
            for (const auto& nb : nearest(m, frontier[fi], per_term_k)) {
                auto [it, inserted] = table.try_emplace(nb.word);
                if (inserted) {
                    it->second.cosine = nb.similarity;
                    next.push_back(nb.word);
                } else {
                    it->second.cosine = std::max(it->second.cosine, nb.similarity);
                }
                it->second.provenance.insert(roots[fi].begin(), roots[fi].end());
            }
        }
        frontier = std::move(next);
    }

    for (auto& [word, e] : table) {
        ExpandedTerm t;
        t.word = word;
        t.cosine = e.cosine;
        t.provenance.assign(e.provenance.begin(), e.provenance.end());
        out.terms.push_back(std::move(t));
    }
    std::sort(out.terms.begin(), out.terms.end(), [](const ExpandedTerm& a, const ExpandedTerm& b) {
        if (a.cosine != b.cosine) return a.cosine > b.cosine;
        return a.word < b.word;
    });
    return out;
}

// Top n corpus words of length >= min_len, by frequency, ties alphabetical.
inline std::vector<std::string> frequent_long_words(const TokenStream& ts, int n = 10,
                                                    size_t min_len = 6) {
    std::unordered_map<std::string, int64_t> counts;
    for (const auto& t : ts.tokens)
        if (t.size() >= min_len) ++counts[t];

    std::vector<std::pair<std::string, int64_t>> ranked(counts.begin(), counts.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (n < 0) n = 0;
    if (ranked.size() > static_cast<size_t>(n)) ranked.resize(static_cast<size_t>(n));

    std::vector<std::string> out;
    out.reserve(ranked.size());
    for (auto& [w, c] : ranked) out.push_back(std::move(w));
    return out;
}

}  // namespace termforge

#endif
