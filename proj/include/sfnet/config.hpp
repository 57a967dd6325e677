#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sfnet/attack.hpp"
#include "sfnet/generator.hpp"

namespace sfnet {

struct ExportFlags {
    bool edges = false;
    bool nodes = false;
    bool hist = false;
    bool clusters = false;
};

/// Parses a comma-separated subset of `edges,nodes,hist,clusters`.
ExportFlags parse_export_flags(std::string_view list);

/// One grow-attack-measure experiment, possibly replicated. Replica r uses
/// seed derive_seed(seed, 0, r).
struct RunConfig {
    GenerationParams gen;
    AttackSpec attack;
    std::uint64_t seed = 1;
    std::size_t replicas = 1;
    std::filesystem::path out = "out";
    ExportFlags exports;
    GrowOptions grow;
    RemovalOrder removal = RemovalOrder::sequential;

    void validate() const;
};

/// Cartesian grid over the five model inputs. Cell c, replica r uses seed
/// derive_seed(seed, c, r); cells are numbered in row-major order with n0
/// varying slowest and eta fastest.
struct SweepGrid {
    std::vector<std::size_t> n0{30000};
    std::vector<std::size_t> m{3};
    std::vector<double> p{0.5};
    std::vector<AttackKind> attack{AttackKind::none};
    std::vector<double> eta{0.0};
    std::size_t replicas = 20;
    std::uint64_t seed = 1;
    GrowOptions grow;
    RemovalOrder removal = RemovalOrder::sequential;

    struct Cell {
        std::size_t index = 0;
        GenerationParams gen;
        AttackSpec attack;
    };

    [[nodiscard]] std::vector<Cell> cells() const;
    [[nodiscard]] std::size_t run_count() const { return cell_count() * replicas; }
    [[nodiscard]] std::size_t cell_count() const {
        return n0.size() * m.size() * p.size() * attack.size() * eta.size();
    }
    /// Structural checks only; invalid parameter combinations in individual
    /// cells surface as failed rows when the sweep runs.
    void validate() const;
};

/// Flat `key = value` text; `#` starts a comment; list values are comma
/// separated. Recognized keys: n0, m, p, attack, eta, seed, replicas, out,
/// export, mode_selection (per_node|per_link), removal (sequential|batch).
using ConfigMap = std::map<std::string, std::string>;

ConfigMap parse_config_text(std::string_view text);
ConfigMap load_config_file(const std::filesystem::path& path);

/// Applies recognized keys; throws ParameterError on unknown keys, list
/// values where a scalar is required, or malformed numbers.
void apply_config(const ConfigMap& config, RunConfig& cfg);
void apply_config(const ConfigMap& config, SweepGrid& grid);

/// Parses a comma-separated list, e.g. "0, 0.5, 1".
std::vector<double> parse_real_list(std::string_view text);
std::vector<std::size_t> parse_count_list(std::string_view text);
std::vector<AttackKind> parse_attack_list(std::string_view text);

/// Star-shaped grids used for the input/output direction report: a base
/// cell (n0=30000, m=3, p=0.5, general attack, eta=0.7) with p and m varied
/// one at a time, plus an eta scan 0.1..0.7 for every attack kind.
std::vector<SweepGrid> direction_grids(std::size_t replicas = 20, std::uint64_t seed = 1);

}  // namespace sfnet
