// Minimal library tour: normalize synthetic text, train a small embedding,
// query nearest neighbors, then mine phrases and render a toy taxonomy.

#include <iostream>
#include <string>
#include <vector>

#include "termforge/embedding.hpp"
#include "termforge/phrases.hpp"
#include "termforge/stopwords.hpp"
#include "termforge/taxonomy.hpp"
#include "termforge/textnorm.hpp"

using namespace termforge;

int main() {
    std::string text;
    for (int i = 0; i < 300; ++i) {
        text += "Vitiligo causes a white patch on the skin.\n";
        text += "Narrowband uvb therapy can treat the white patch.\n";
        text += "The red rash itches at night.\n";
        text += "A cool lotion calms the red rash.\n";
    }

    NormOptions opts;
    opts.stoplist = default_stoplist();
    TokenStream tokens = normalize(text, opts);

    TrainParams params;
    params.dim = 16;
    params.window = 4;
    params.negatives = 5;
    params.iters = 4;
    params.min_count = 2;
    params.rng_seed = 7;
    EmbeddingModel model = train(tokens, params);

    std::cout << "nearest to \"patch\":\n";
    for (const Neighbor& nb : nearest(model, "patch", 3))
        std::cout << "  " << nb.word << "  " << nb.similarity << "\n";

    NormOptions keep_stopwords = opts;
    keep_stopwords.stoplist.clear();
    std::vector<TokenStream> docs = {normalize(text, keep_stopwords)};
    PhraseTable table = extract_phrases(docs, opts.stoplist);

    std::cout << "phrases:\n";
    std::vector<TermCandidate> candidates;
    for (const auto& [stems, entry] : table.entries) {
        std::cout << "  " << join(stems, " ") << "  x" << entry.count << "\n";
        candidates.push_back({stems, entry.count, entry.surface_forms});
    }

    std::vector<HypernymPair> pairs = pairs_by_inclusion(candidates);
    Taxonomy tax = build_taxonomy(pairs, "vitiligo", candidates);
    std::cout << "taxonomy:\n";
    for (const std::string& path : render_paths(tax))
        std::cout << "  " << path << "\n";
    return 0;
}
