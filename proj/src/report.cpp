#include "sfnet/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

#include "sfnet/stats.hpp"

namespace sfnet {

std::string_view to_string(Input in) noexcept {
    switch (in) {
        case Input::p: return "p";
        case Input::m: return "m";
        case Input::eta: break;
    }
    return "eta";
}

std::string_view to_string(Output out) noexcept {
    switch (out) {
        case Output::gamma: return "gamma";
        case Output::avg_k: return "avg_k";
        case Output::tau: return "tau";
        case Output::avg_c: return "avg_c";
        case Output::giant_frac: break;
    }
    return "giant_frac";
}

std::string_view symbol(Direction d) noexcept {
    switch (d) {
        case Direction::up: return "↑";
        case Direction::down: return "↓";
        case Direction::flat: return "∘";
        case Direction::mixed: return "↕";
        case Direction::not_available: break;
    }
    return "n/a";
}

namespace {

std::optional<double> value_of(const ResultRow& r, Output out) {
    switch (out) {
        case Output::gamma: return r.gamma;
        case Output::avg_k: return r.avg_k;
        case Output::tau: return r.tau;
        case Output::avg_c: return r.avg_c;
        case Output::giant_frac: return r.giant_frac;
    }
    return std::nullopt;
}

double input_of(const ResultRow& r, Input in) {
    switch (in) {
        case Input::p: return r.p;
        case Input::m: return static_cast<double>(r.m);
        case Input::eta: return r.eta;
    }
    return 0.0;
}

// Most frequent value; ties resolved to the lower median of the tied values.
template <class T>
T modal(const std::map<T, std::size_t>& freq) {
    std::size_t best = 0;
    for (const auto& [v, c] : freq) best = std::max(best, c);
    std::vector<T> tied;
    for (const auto& [v, c] : freq) {
        if (c == best) tied.push_back(v);
    }
    return tied[(tied.size() - 1) / 2];
}

struct Base {
    std::size_t n0 = 0;
    std::size_t m = 0;
    double p = 0.0;
    AttackKind attack = AttackKind::none;
    double eta = 0.0;
};

Base choose_base(std::span<const ResultRow> rows) {
    std::map<std::size_t, std::size_t> n0;
    std::map<std::size_t, std::size_t> m;
    std::map<double, std::size_t> p;
    std::map<double, std::size_t> eta;
    std::map<AttackKind, std::size_t> kind;
    for (const auto& r : rows) {
        if (!r.ok) continue;
        ++n0[r.n0];
        ++m[r.m];
        ++p[r.p];
        ++eta[r.eta];
        ++kind[r.attack];
    }
    Base b;
    if (n0.empty()) return b;
    b.n0 = modal(n0);
    b.m = modal(m);
    b.p = modal(p);
    b.eta = modal(eta);
    std::size_t best = 0;
    for (AttackKind k : {AttackKind::general, AttackKind::central, AttackKind::peripheral, AttackKind::none}) {
        const auto it = kind.find(k);
        if (it != kind.end() && it->second > best) {
            best = it->second;
            b.attack = k;
        }
    }
    return b;
}

struct Comparison {
    Direction direction = Direction::not_available;
    std::string detail;
};

// Compares the extreme input values that carry >= 2 valid samples.
Comparison compare_extremes(const std::map<double, std::vector<double>>& groups, double alpha) {
    std::vector<std::pair<double, const std::vector<double>*>> usable;
    for (const auto& [x, ys] : groups) {
        if (ys.size() >= 2) usable.emplace_back(x, &ys);
    }
    Comparison c;
    if (usable.size() < 2) {
        c.detail = "insufficient coverage";
        return c;
    }
    const auto& [x_lo, lo] = usable.front();
    const auto& [x_hi, hi] = usable.back();
    const stats::TTest t = stats::welch_t_test(*hi, *lo);
    if (t.p_value < alpha) {
        c.direction = t.mean_difference > 0.0 ? Direction::up : Direction::down;
    } else {
        c.direction = Direction::flat;
    }
    c.detail = fmt::format("{:g}:{:.4g} (n={}) vs {:g}:{:.4g} (n={}), p={:.3g}", x_lo, stats::mean(*lo), lo->size(),
                           x_hi, stats::mean(*hi), hi->size(), t.p_value);
    return c;
}

bool matches(const ResultRow& r, const Base& b, Input varied, bool match_attack) {
    if (!r.ok || r.n0 != b.n0) return false;
    if (varied != Input::m && r.m != b.m) return false;
    if (varied != Input::p && r.p != b.p) return false;
    if (varied != Input::eta && r.eta != b.eta) return false;
    if (match_attack && r.attack != b.attack) return false;
    return true;
}

}  // namespace

DirectionMatrix direction_report(std::span<const ResultRow> rows, double alpha) {
    DirectionMatrix matrix;
    const Base base = choose_base(rows);

    for (Output out : kOutputs) {
        for (Input in : {Input::p, Input::m}) {
            std::map<double, std::vector<double>> groups;
            for (const auto& r : rows) {
                if (!matches(r, base, in, true)) continue;
                if (auto v = value_of(r, out)) groups[input_of(r, in)].push_back(*v);
            }
            const Comparison c = compare_extremes(groups, alpha);
            matrix.at(out, in) = {c.direction, c.detail};
        }

        std::map<AttackKind, std::map<double, std::vector<double>>> by_kind;
        for (const auto& r : rows) {
            if (r.attack == AttackKind::none || !matches(r, base, Input::eta, false)) continue;
            if (auto v = value_of(r, out)) by_kind[r.attack][r.eta].push_back(*v);
        }
        bool any = false;
        bool up = false;
        bool down = false;
        std::string detail;
        for (const auto& [kind, groups] : by_kind) {
            const Comparison c = compare_extremes(groups, alpha);
            detail += fmt::format("{}{}: {} {}", detail.empty() ? "" : "; ", to_string(kind), symbol(c.direction),
                                  c.detail);
            if (c.direction == Direction::not_available) continue;
            any = true;
            up = up || c.direction == Direction::up;
            down = down || c.direction == Direction::down;
        }
        Direction d = Direction::not_available;
        if (up && down) d = Direction::mixed;
        else if (up) d = Direction::up;
        else if (down) d = Direction::down;
        else if (any) d = Direction::flat;
        matrix.at(out, Input::eta) = {d, detail.empty() ? "insufficient coverage" : detail};
    }
    return matrix;
}

std::string format_direction_report(const DirectionMatrix& matrix) {
    std::string text = fmt::format("{:<12}{:<6}{:<6}{:<6}\n", "", "p", "m", "eta");
    for (Output out : kOutputs) {
        text += fmt::format("{:<12}", to_string(out));
        for (Input in : kInputs) {
            // Arrow glyphs are 3 bytes wide in UTF-8; pad by hand.
            const auto sym = symbol(matrix.at(out, in).direction);
            text += std::string(sym) + std::string(sym.size() == 3 ? 5 : 6 - sym.size(), ' ');
        }
        text += '\n';
    }
    text += "\ndetails:\n";
    for (Output out : kOutputs) {
        for (Input in : kInputs) {
            text += fmt::format("  {} vs {}: {}\n", to_string(out), to_string(in), matrix.at(out, in).detail);
        }
    }
    return text;
}

std::vector<RangeEntry> range_check(std::span<const ResultRow> rows) {
    struct Bounds {
        Output out;
        double lo;
        double hi;
    };
    constexpr std::array bounds{Bounds{Output::gamma, 2.4, 2.9}, Bounds{Output::avg_k, 0.1, 9.0},
                                Bounds{Output::tau, 2.5, 7.0}, Bounds{Output::avg_c, 0.0, 0.1},
                                Bounds{Output::giant_frac, 0.0, 1.0}};
    std::vector<RangeEntry> out;
    for (const auto& b : bounds) {
        RangeEntry e;
        e.output = b.out;
        e.lower = b.lo;
        e.upper = b.hi;
        e.observed_min = INFINITY;
        e.observed_max = -INFINITY;
        for (const auto& r : rows) {
            if (!r.ok) continue;
            if (auto v = value_of(r, b.out)) {
                e.observed_min = std::min(e.observed_min, *v);
                e.observed_max = std::max(e.observed_max, *v);
                ++e.samples;
            }
        }
        e.within = e.samples > 0 && e.observed_min > b.lo && e.observed_max < b.hi;
        out.push_back(e);
    }
    return out;
}

std::string format_range_report(std::span<const RangeEntry> entries) {
    std::string text = fmt::format("{:<12}{:>10}{:>12}{:>12}{:>10}  {}\n", "quantity", "lower", "min", "max", "upper",
                                   "flag");
    for (const auto& e : entries) {
        if (e.samples == 0) {
            text += fmt::format("{:<12}{:>10g}{:>12}{:>12}{:>10g}  no data\n", to_string(e.output), e.lower, "-", "-",
                                e.upper);
            continue;
        }
        text += fmt::format("{:<12}{:>10g}{:>12.5g}{:>12.5g}{:>10g}  {}\n", to_string(e.output), e.lower,
                            e.observed_min, e.observed_max, e.upper, e.within ? "inside" : "outside (informational)");
    }
    return text;
}

}  // namespace sfnet
