#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sfnet/rng.hpp"

namespace sfnet {

/// Fenwick tree over nonnegative weights: O(log n) point update and
/// O(log n) draw of an index with probability weight / total.
class WeightedSampler {
public:
    WeightedSampler() = default;
    explicit WeightedSampler(std::size_t n) : tree_(n + 1, 0.0), weight_(n, 0.0) {}
    explicit WeightedSampler(std::span<const double> weights);

    [[nodiscard]] std::size_t size() const noexcept { return weight_.size(); }
    [[nodiscard]] double weight(std::size_t i) const { return weight_[i]; }
    [[nodiscard]] double total() const noexcept { return total_; }

    /// Grows capacity to n slots; new slots have weight 0.
    void resize(std::size_t n);

    void set(std::size_t i, double w);
    void add(std::size_t i, double delta) { set(i, weight_[i] + delta); }

    /// Index drawn proportionally to weight. Requires total() > 0. Never
    /// returns a zero-weight slot even if floating-point drift makes the
    /// prefix sums slightly inconsistent.
    std::size_t sample(RngStream& rng) const;

    /// Recomputes every partial sum from the stored weights.
    void rebuild();

private:
    std::size_t locate(double target) const;

    std::vector<double> tree_;
    std::vector<double> weight_;
    double total_ = 0.0;
    std::size_t updates_since_rebuild_ = 0;
};

}  // namespace sfnet
