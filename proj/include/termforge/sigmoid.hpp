#ifndef TERMFORGE_SIGMOID_HPP
#define TERMFORGE_SIGMOID_HPP

#include <array>
#include <cmath>

namespace termforge {

// Logistic function with the training-time table approximation: 1000 bins
// over [-6, 6], arguments clamped to the saturated values outside. The
// exact mode exists for gradient verification, where table quantization
// would swamp finite-difference comparisons.
class Sigmoid {
public:
    static constexpr double kMaxExp = 6.0;
    static constexpr int kTableSize = 1000;

    explicit Sigmoid(bool exact = false) : exact_(exact) {}

    double operator()(double x) const {
        if (exact_) return 1.0 / (1.0 + std::exp(-x));
        if (x >= kMaxExp) return 1.0;
        if (x <= -kMaxExp) return 0.0;
        return table()[bin(x)];
    }

    bool exact() const { return exact_; }

private:
    bool exact_;

    static int bin(double x) {
        int i = static_cast<int>((x + kMaxExp) * (kTableSize / kMaxExp / 2.0));
        if (i < 0) i = 0;
        if (i >= kTableSize) i = kTableSize - 1;
        return i;
    }

    static const std::array<double, kTableSize>& table() {
        static const std::array<double, kTableSize> t = [] {
            std::array<double, kTableSize> out{};
            for (int i = 0; i < kTableSize; ++i) {
                double e = std::exp((i / static_cast<double>(kTableSize) * 2.0 - 1.0) * kMaxExp);
                out[i] = e / (e + 1.0);
            }
            return out;
        }();
        return t;
    }
};

}  // namespace termforge

#endif
