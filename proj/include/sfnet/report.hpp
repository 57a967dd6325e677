#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sfnet/sweep.hpp"

namespace sfnet {

enum class Input { p, m, eta };
enum class Output { gamma, avg_k, tau, avg_c, giant_frac };

inline constexpr std::array kInputs{Input::p, Input::m, Input::eta};
inline constexpr std::array kOutputs{Output::gamma, Output::avg_k, Output::tau, Output::avg_c, Output::giant_frac};

std::string_view to_string(Input in) noexcept;
std::string_view to_string(Output out) noexcept;

enum class Direction {
    up,     ///< output increases with the input
    down,   ///< output decreases with the input
    flat,   ///< no significant change
    mixed,  ///< increases under one attack kind, decreases under another
    not_available,
};

/// "↑", "↓", "∘", "↕" or "n/a".
std::string_view symbol(Direction d) noexcept;

struct DirectionCell {
    Direction direction = Direction::not_available;
    std::string detail;  ///< means and p-values behind the verdict
};

struct DirectionMatrix {
    std::array<std::array<DirectionCell, kInputs.size()>, kOutputs.size()> cells;

    DirectionCell& at(Output out, Input in) { return cells[static_cast<std::size_t>(out)][static_cast<std::size_t>(in)]; }
    [[nodiscard]] const DirectionCell& at(Output out, Input in) const {
        return cells[static_cast<std::size_t>(out)][static_cast<std::size_t>(in)];
    }
};

/// Direction of every (input, output) pair.
///
/// A base cell is chosen as the most frequent value of every input among
/// successful rows (ties: median value; for the attack kind ties go to
/// general, central, peripheral, none in that order). For p and m, rows
/// matching the base on all other inputs are grouped by the varied input and
/// the two extreme groups holding >= 2 valid samples are compared with
/// Welch's t test at level `alpha`. For eta the same comparison is made
/// separately for every attack kind present (n0, m, p at base); the verdict
/// is ↕ when kinds disagree in sign, otherwise the common significant sign,
/// otherwise ∘.
DirectionMatrix direction_report(std::span<const ResultRow> rows, double alpha = 0.05);

std::string format_direction_report(const DirectionMatrix& matrix);

struct RangeEntry {
    Output output = Output::gamma;
    double lower = 0.0;  ///< reference open interval
    double upper = 0.0;
    double observed_min = 0.0;
    double observed_max = 0.0;
    std::size_t samples = 0;
    bool within = false;  ///< observed span lies inside (lower, upper); informational
};

/// Observed min/max of every output over successful rows, flagged against
/// the reference ranges 2.4 < gamma < 2.9, 0.1 < <k> < 9, 2.5 < tau < 7,
/// 0 < <C> < 0.1, 0 < S_g/N < 1.
std::vector<RangeEntry> range_check(std::span<const ResultRow> rows);

std::string format_range_report(std::span<const RangeEntry> entries);

}  // namespace sfnet
