#include "sfnet/weighted_sampler.hpp"

#include <bit>
#include <stdexcept>

namespace sfnet {

namespace {
constexpr std::size_t kRebuildInterval = 1U << 16;
}

WeightedSampler::WeightedSampler(std::span<const double> weights)
    : tree_(weights.size() + 1, 0.0), weight_(weights.begin(), weights.end()) {
    rebuild();
}

void WeightedSampler::rebuild() {
    const std::size_t n = weight_.size();
    tree_.assign(n + 1, 0.0);
    total_ = 0.0;
    updates_since_rebuild_ = 0;
    for (std::size_t i = 0; i < n; ++i) {
        tree_[i + 1] += weight_[i];
        total_ += weight_[i];
        const std::size_t parent = (i + 1) + ((i + 1) & (~(i + 1) + 1));
        if (parent <= n) tree_[parent] += tree_[i + 1];
    }
}

void WeightedSampler::resize(std::size_t n) {
    if (n <= weight_.size()) return;
    weight_.resize(n, 0.0);
    rebuild();
}

void WeightedSampler::set(std::size_t i, double w) {
    if (w < 0.0) throw std::invalid_argument("WeightedSampler: negative weight");
    const double delta = w - weight_[i];
    if (delta == 0.0) return;
    weight_[i] = w;
    total_ += delta;
    for (std::size_t j = i + 1; j < tree_.size(); j += j & (~j + 1)) tree_[j] += delta;
    // Bound accumulated rounding in the partial sums.
    if (++updates_since_rebuild_ >= kRebuildInterval + weight_.size()) rebuild();
}

std::size_t WeightedSampler::locate(double target) const {
    const std::size_t n = weight_.size();
    std::size_t pos = 0;
    for (std::size_t step = std::bit_floor(n); step != 0; step >>= 1) {
        const std::size_t next = pos + step;
        if (next <= n && tree_[next] <= target) {
            pos = next;
            target -= tree_[next];
        }
    }
    return pos < n ? pos : n - 1;
}

std::size_t WeightedSampler::sample(RngStream& rng) const {
    if (!(total_ > 0.0)) throw std::logic_error("WeightedSampler: total weight is zero");
    for (;;) {
        const std::size_t i = locate(rng.uniform() * total_);
        if (weight_[i] > 0.0) return i;
    }
}

}  // namespace sfnet
