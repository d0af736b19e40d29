#ifndef TERMFORGE_EMBEDDING_HPP
#define TERMFORGE_EMBEDDING_HPP

#include <atomic>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "termforge/sampler.hpp"
#include "termforge/sigmoid.hpp"
#include "termforge/textnorm.hpp"
#include "termforge/vocab.hpp"

namespace termforge {

struct TrainParams {
    enum class Mode { cbow, skipgram };

    Mode mode = Mode::cbow;
    int dim = 200;
    int window = 8;
    int negatives = 25;
    double sample = 1e-4;
    int iters = 15;
    int min_count = 5;
    double alpha0 = 0.0;  // 0 selects the mode default
    int workers = 1;
    uint64_t rng_seed = 1;
    bool exact_sigmoid = false;
    // Words whose occurrences are never discarded by subsampling.
    std::unordered_set<std::string> subsample_exempt;

    double effective_alpha0() const {
        if (alpha0 > 0.0) return alpha0;
        return mode == Mode::cbow ? 0.05 : 0.025;
    }
};

struct EmbeddingModel {
    Vocabulary vocab;
    int dim = 0;
    std::vector<float> w_in;   // |V| x dim, input vectors
    std::vector<float> w_out;  // |V| x dim, output vectors
    TrainParams params;
    std::vector<double> mean_epoch_loss;

    float* in_row(int i) { return w_in.data() + static_cast<size_t>(i) * dim; }
    const float* in_row(int i) const { return w_in.data() + static_cast<size_t>(i) * dim; }
    float* out_row(int i) { return w_out.data() + static_cast<size_t>(i) * dim; }
    const float* out_row(int i) const { return w_out.data() + static_cast<size_t>(i) * dim; }
};

namespace detail {

// 53-bit uniform deviate in [0, 1); keeps the RNG stream portable across
// standard libraries, unlike std::uniform_real_distribution.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
}

inline double safe_log(double p) { return std::log(p < 1e-12 ? 1e-12 : p); }

}  // namespace detail

// One negative-sampling update for the pair (center from W_in, context from
// W_out) plus negatives. Returns the loss before the update. Arithmetic is
// double over the float storage so gradients verify against finite
// differences.
inline double sgns_step(int center, int context, const std::vector<int>& negatives,
                        EmbeddingModel& m, double alpha, const Sigmoid& sigmoid) {
    const int dim = m.dim;
    float* v = m.in_row(center);
    std::vector<double> grad_v(static_cast<size_t>(dim), 0.0);
    double loss = 0.0;

    auto one_output = [&](int target, double label) {
        float* u = m.out_row(target);
        double dot = 0.0;
        for (int d = 0; d < dim; ++d) dot += static_cast<double>(u[d]) * v[d];
        double s = sigmoid(dot);
        loss -= label > 0.5 ? detail::safe_log(s) : detail::safe_log(1.0 - s);
        double g = (label - s) * alpha;
        for (int d = 0; d < dim; ++d) {
            grad_v[static_cast<size_t>(d)] += g * u[d];
            u[d] = static_cast<float>(u[d] + g * v[d]);
        }
    };

    one_output(context, 1.0);
    for (int n : negatives) one_output(n, 0.0);
    for (int d = 0; d < dim; ++d)
        v[d] = static_cast<float>(v[d] + grad_v[static_cast<size_t>(d)]);
    return loss;
}

// CBOW update: the hidden vector is the mean of the context input rows, the
// center word is the positive output. The hidden gradient is split evenly
// (divided by the context size) so the update is the true loss gradient.
inline double cbow_step(const std::vector<int>& context_window, int center,
                        const std::vector<int>& negatives, EmbeddingModel& m,
                        double alpha, const Sigmoid& sigmoid) {
    if (context_window.empty()) throw std::invalid_argument("cbow_step: empty context");
    const int dim = m.dim;
    const double inv_n = 1.0 / static_cast<double>(context_window.size());

    std::vector<double> h(static_cast<size_t>(dim), 0.0);
    for (int c : context_window) {
        const float* x = m.in_row(c);
        for (int d = 0; d < dim; ++d) h[static_cast<size_t>(d)] += x[d];
    }
    for (int d = 0; d < dim; ++d) h[static_cast<size_t>(d)] *= inv_n;

    std::vector<double> grad_h(static_cast<size_t>(dim), 0.0);
    double loss = 0.0;

    auto one_output = [&](int target, double label) {
        float* u = m.out_row(target);
        double dot = 0.0;
        for (int d = 0; d < dim; ++d) dot += static_cast<double>(u[d]) * h[static_cast<size_t>(d)];
        double s = sigmoid(dot);
        loss -= label > 0.5 ? detail::safe_log(s) : detail::safe_log(1.0 - s);
        double g = (label - s) * alpha;
        for (int d = 0; d < dim; ++d) {
            grad_h[static_cast<size_t>(d)] += g * u[d];
            u[d] = static_cast<float>(u[d] + g * h[static_cast<size_t>(d)]);
        }
    };

    one_output(center, 1.0);
    for (int n : negatives) one_output(n, 0.0);
    for (int c : context_window) {
        float* x = m.in_row(c);
        for (int d = 0; d < dim; ++d)
            x[d] = static_cast<float>(x[d] + grad_h[static_cast<size_t>(d)] * inv_n);
    }
    return loss;
}

namespace detail {

struct TrainCorpus {
    std::vector<std::vector<int>> sentences;  // vocab indices, pre-subsampling
    int64_t scanned_total = 0;
};

inline TrainCorpus index_corpus(const TokenStream& tokens, const Vocabulary& vocab) {
    constexpr size_t kMaxSentence = 1000;
    TrainCorpus out;
    auto bounds = tokens.sentence_bounds;
    if (bounds.empty() && !tokens.tokens.empty())
        bounds.emplace_back(0, tokens.tokens.size());
    for (auto [begin, end] : bounds) {
        std::vector<int> sen;
        for (size_t i = begin; i < end; ++i) {
            int w = vocab.lookup(tokens.tokens[i]);
            if (w < 0) continue;
            sen.push_back(w);
            ++out.scanned_total;
            if (sen.size() == kMaxSentence) {
                out.sentences.push_back(std::move(sen));
                sen = {};
            }
        }
        if (!sen.empty()) out.sentences.push_back(std::move(sen));
    }
    return out;
}

}  // namespace detail

inline EmbeddingModel train(const TokenStream& tokens, const TrainParams& params) {
    EmbeddingModel m;
    m.vocab = build_vocab(tokens, params.min_count);
    m.dim = params.dim;
    m.params = params;

    detail::TrainCorpus corpus = detail::index_corpus(tokens, m.vocab);
    if (m.vocab.size() == 0 || corpus.scanned_total < 2)
        throw std::runtime_error("corpus too small");

    const int v = static_cast<int>(m.vocab.size());
    const int dim = params.dim;
    m.w_in.resize(static_cast<size_t>(v) * dim);
    m.w_out.assign(static_cast<size_t>(v) * dim, 0.0f);
    {
        std::mt19937_64 rng(params.rng_seed);
        for (auto& w : m.w_in)
            w = static_cast<float>((detail::uniform01(rng) - 0.5) / dim);
    }

    std::vector<double> keep(static_cast<size_t>(v), 1.0);
    for (int i = 0; i < v; ++i) {
        if (params.subsample_exempt.count(m.vocab.words[static_cast<size_t>(i)])) continue;
        keep[static_cast<size_t>(i)] =
            keep_probability(m.vocab.counts[static_cast<size_t>(i)], m.vocab.total_count,
                             params.sample);
    }

    NegativeSampler sampler(m.vocab);
    Sigmoid sigmoid(params.exact_sigmoid);
    const double alpha0 = params.effective_alpha0();
    const double total_steps =
        static_cast<double>(params.iters) * static_cast<double>(corpus.scanned_total) + 1.0;

    std::atomic<int64_t> scanned{0};
    std::mutex loss_mutex;
    const int workers = params.workers < 1 ? 1 : params.workers;

    auto run_worker = [&](int epoch, int worker, double& loss_sum, int64_t& loss_steps) {
        std::mt19937_64 rng(params.rng_seed +
                            0x9E3779B97F4A7C15ull * static_cast<uint64_t>(epoch * workers + worker + 1));
        double alpha = alpha0 *
                       std::max(1e-4, 1.0 - static_cast<double>(scanned.load(std::memory_order_relaxed)) /
                                                total_steps);
        int64_t local_since_update = 0;
        std::vector<int> sen, window_buf, negatives;

        for (size_t si = static_cast<size_t>(worker); si < corpus.sentences.size();
             si += static_cast<size_t>(workers)) {
            const std::vector<int>& raw = corpus.sentences[si];
            sen.clear();
            for (int w : raw) {
                ++local_since_update;
                if (local_since_update >= 10000) {
                    scanned.fetch_add(local_since_update, std::memory_order_relaxed);
                    local_since_update = 0;
                    alpha = alpha0 *
                            std::max(1e-4,
                                     1.0 - static_cast<double>(scanned.load(std::memory_order_relaxed)) /
                                               total_steps);
                }
                double kp = keep[static_cast<size_t>(w)];
                if (kp < 1.0 && detail::uniform01(rng) >= kp) continue;
                sen.push_back(w);
            }
            const int len = static_cast<int>(sen.size());
            for (int pos = 0; pos < len; ++pos) {
                int center = sen[static_cast<size_t>(pos)];
                int b = 1 + static_cast<int>(rng() % static_cast<uint64_t>(params.window));
                int lo = pos - b < 0 ? 0 : pos - b;
                int hi = pos + b >= len ? len - 1 : pos + b;

                if (params.mode == TrainParams::Mode::cbow) {
                    window_buf.clear();
                    for (int c = lo; c <= hi; ++c)
                        if (c != pos) window_buf.push_back(sen[static_cast<size_t>(c)]);
                    if (window_buf.empty()) continue;
                    negatives.clear();
                    for (int k = 0; k < params.negatives; ++k) {
                        int t = sampler.sample(detail::uniform01(rng));
                        if (t != center) negatives.push_back(t);
                    }
                    loss_sum += cbow_step(window_buf, center, negatives, m, alpha, sigmoid);
                    ++loss_steps;
                } else {
                    for (int c = lo; c <= hi; ++c) {
                        if (c == pos) continue;
                        int context = sen[static_cast<size_t>(c)];
                        negatives.clear();
                        for (int k = 0; k < params.negatives; ++k) {
                            int t = sampler.sample(detail::uniform01(rng));
                            if (t != context) negatives.push_back(t);
                        }
                        loss_sum += sgns_step(center, context, negatives, m, alpha, sigmoid);
                        ++loss_steps;
                    }
                }
            }
        }
        scanned.fetch_add(local_since_update, std::memory_order_relaxed);
    };

    m.mean_epoch_loss.reserve(static_cast<size_t>(params.iters));
    for (int epoch = 0; epoch < params.iters; ++epoch) {
        double epoch_loss = 0.0;
        int64_t epoch_steps = 0;
        if (workers == 1) {
            run_worker(epoch, 0, epoch_loss, epoch_steps);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    double loss = 0.0;
                    int64_t steps = 0;
                    run_worker(epoch, w, loss, steps);
                    std::lock_guard<std::mutex> lock(loss_mutex);
                    epoch_loss += loss;
                    epoch_steps += steps;
                });
            }
            for (auto& t : pool) t.join();
        }
        m.mean_epoch_loss.push_back(epoch_steps ? epoch_loss / static_cast<double>(epoch_steps)
                                                : 0.0);
    }
    return m;
}

inline double cosine(const float* u, const float* v, int dim) {
    double dot = 0.0, nu = 0.0, nv = 0.0;
    for (int d = 0; d < dim; ++d) {
        dot += static_cast<double>(u[d]) * v[d];
        nu += static_cast<double>(u[d]) * u[d];
        nv += static_cast<double>(v[d]) * v[d];
    }
    if (nu == 0.0 || nv == 0.0) throw std::domain_error("cosine of zero-norm vector");
    return dot / (std::sqrt(nu) * std::sqrt(nv));
}

inline double cosine(const std::vector<float>& u, const std::vector<float>& v) {
    if (u.size() != v.size()) throw std::invalid_argument("cosine: dimension mismatch");
    return cosine(u.data(), v.data(), static_cast<int>(u.size()));
}

struct Neighbor {
    std::string word;
    double similarity;
    int index;
};

inline std::vector<Neighbor> nearest_to_vector(
    const EmbeddingModel& m, const float* query, int k,
    const std::unordered_set<std::string>& exclude = {}, int exclude_index = -1) {
    std::vector<Neighbor> heap;
    for (int i = 0; i < static_cast<int>(m.vocab.size()); ++i) {
        if (i == exclude_index) continue;
        if (!exclude.empty() && exclude.count(m.vocab.words[static_cast<size_t>(i)])) continue;
        const float* row = m.in_row(i);
        double nv = 0.0;
        for (int d = 0; d < m.dim; ++d) nv += static_cast<double>(row[d]) * row[d];
        if (nv == 0.0) continue;
        heap.push_back({m.vocab.words[static_cast<size_t>(i)], cosine(query, row, m.dim), i});
    }
    auto better = [](const Neighbor& a, const Neighbor& b) {
        if (a.similarity != b.similarity) return a.similarity > b.similarity;
        return a.index < b.index;
    };
    if (static_cast<int>(heap.size()) > k) {
        std::partial_sort(heap.begin(), heap.begin() + k, heap.end(), better);
        heap.resize(static_cast<size_t>(k));
    } else {
        std::sort(heap.begin(), heap.end(), better);
    }
    return heap;
}

inline std::vector<Neighbor> nearest(const EmbeddingModel& m, const std::string& query,
                                     int k, const std::unordered_set<std::string>& exclude = {}) {
    int qi = m.vocab.lookup(query);
    if (qi < 0) throw std::runtime_error("not in vocabulary: " + query);
    return nearest_to_vector(m, m.in_row(qi), k, exclude, qi);
}

}  // namespace termforge

#endif
