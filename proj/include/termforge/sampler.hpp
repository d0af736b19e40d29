#ifndef TERMFORGE_SAMPLER_HPP
#define TERMFORGE_SAMPLER_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "termforge/vocab.hpp"

namespace termforge {

// Draws negative examples proportional to count^power via binary search
// over the cumulative mass.
class NegativeSampler {
public:
    NegativeSampler() = default;

    explicit NegativeSampler(const Vocabulary& vocab, double power = 0.75) {
        cumulative_.reserve(vocab.size());
        double total = 0.0;
        for (int64_t c : vocab.counts) total += std::pow(static_cast<double>(c), power);
        double running = 0.0;
        for (int64_t c : vocab.counts) {
            running += std::pow(static_cast<double>(c), power) / total;
            cumulative_.push_back(running);
        }
        if (!cumulative_.empty()) cumulative_.back() = 1.0;
    }

    // u must lie in [0, 1).
    int sample(double u) const {
        auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
        if (it == cumulative_.end()) --it;
        return static_cast<int>(it - cumulative_.begin());
    }

    const std::vector<double>& cumulative() const { return cumulative_; }

private:
    std::vector<double> cumulative_;
};

}  // namespace termforge

#endif
