#include "sfnet/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "sfnet/errors.hpp"

namespace sfnet {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(std::string_view text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        std::string item = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
        if (item.empty()) throw ParameterError("empty item in list '" + std::string(text) + "'");
        out.push_back(std::move(item));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

double parse_real(const std::string& s) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw ParameterError("not a number: '" + s + "'");
    return value;
}

std::uint64_t parse_u64(const std::string& s) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParameterError("not a nonnegative integer: '" + s + "'");
    }
    return value;
}

std::string scalar(const std::string& key, const std::string& value) {
    if (value.find(',') != std::string::npos) throw ParameterError("key '" + key + "' takes a single value");
    return trim(value);
}

ModeSelection parse_mode_selection(const std::string& s) {
    if (s == "per_node") return ModeSelection::per_node;
    if (s == "per_link") return ModeSelection::per_link;
    throw ParameterError("mode_selection must be per_node or per_link (got '" + s + "')");
}

RemovalOrder parse_removal(const std::string& s) {
    if (s == "sequential") return RemovalOrder::sequential;
    if (s == "batch") return RemovalOrder::batch;
    throw ParameterError("removal must be sequential or batch (got '" + s + "')");
}

}  // namespace

ExportFlags parse_export_flags(std::string_view list) {
    ExportFlags flags;
    if (trim(list).empty()) return flags;
    for (const auto& item : split_list(list)) {
        if (item == "edges") flags.edges = true;
        else if (item == "nodes") flags.nodes = true;
        else if (item == "hist") flags.hist = true;
        else if (item == "clusters") flags.clusters = true;
        else throw ParameterError("unknown export '" + item + "' (expected edges, nodes, hist, clusters)");
    }
    return flags;
}

void RunConfig::validate() const {
    gen.validate();
    attack.validate();
    if (replicas < 1) throw ParameterError("replicas must be >= 1");
    if (attack.removal_count(gen.n0) >= gen.n0) {
        throw ParameterError("attack removes every node; eta * n0 must round below n0");
    }
}

std::vector<SweepGrid::Cell> SweepGrid::cells() const {
    std::vector<Cell> out;
    out.reserve(cell_count());
    for (auto n : n0)
        for (auto links : m)
            for (auto prob : p)
                for (auto kind : attack)
                    for (auto strength : eta) {
                        Cell cell;
                        cell.index = out.size();
                        cell.gen = GenerationParams{n, links, prob};
                        cell.attack = AttackSpec{kind, strength};
                        out.push_back(cell);
                    }
    return out;
}

void SweepGrid::validate() const {
    if (cell_count() == 0) throw ParameterError("sweep grid has an empty axis");
    if (replicas < 1) throw ParameterError("replicas must be >= 1");
}

std::vector<double> parse_real_list(std::string_view text) {
    std::vector<double> out;
    for (const auto& item : split_list(text)) out.push_back(parse_real(item));
    return out;
}

std::vector<std::size_t> parse_count_list(std::string_view text) {
    std::vector<std::size_t> out;
    for (const auto& item : split_list(text)) out.push_back(static_cast<std::size_t>(parse_u64(item)));
    return out;
}

std::vector<AttackKind> parse_attack_list(std::string_view text) {
    std::vector<AttackKind> out;
    for (const auto& item : split_list(text)) {
        const auto kind = parse_attack_kind(item);
        if (!kind) throw ParameterError("unknown attack '" + item + "' (expected central, peripheral, general, none)");
        out.push_back(*kind);
    }
    return out;
}

ConfigMap parse_config_text(std::string_view text) {
    ConfigMap out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw ParameterError("config line " + std::to_string(lineno) + ": expected 'key = value'");
        }
        out[trim(std::string_view(body).substr(0, eq))] = trim(std::string_view(body).substr(eq + 1));
    }
    return out;
}

ConfigMap load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str());
}

void apply_config(const ConfigMap& config, RunConfig& cfg) {
    for (const auto& [key, value] : config) {
        if (key == "n0") cfg.gen.n0 = parse_u64(scalar(key, value));
        else if (key == "m") cfg.gen.m = parse_u64(scalar(key, value));
        else if (key == "p") cfg.gen.p = parse_real(scalar(key, value));
        else if (key == "attack") cfg.attack.kind = parse_attack_list(scalar(key, value)).front();
        else if (key == "eta") cfg.attack.eta = parse_real(scalar(key, value));
        else if (key == "seed") cfg.seed = parse_u64(scalar(key, value));
        else if (key == "replicas") cfg.replicas = parse_u64(scalar(key, value));
        else if (key == "out") cfg.out = scalar(key, value);
        else if (key == "export") cfg.exports = parse_export_flags(value);
        else if (key == "mode_selection") cfg.grow.mode_selection = parse_mode_selection(scalar(key, value));
        else if (key == "removal") cfg.removal = parse_removal(scalar(key, value));
        else throw ParameterError("unknown config key '" + key + "'");
    }
}

void apply_config(const ConfigMap& config, SweepGrid& grid) {
    for (const auto& [key, value] : config) {
        if (key == "n0") grid.n0 = parse_count_list(value);
        else if (key == "m") grid.m = parse_count_list(value);
        else if (key == "p") grid.p = parse_real_list(value);
        else if (key == "attack") grid.attack = parse_attack_list(value);
        else if (key == "eta") grid.eta = parse_real_list(value);
        else if (key == "seed") grid.seed = parse_u64(scalar(key, value));
        else if (key == "replicas") grid.replicas = parse_u64(scalar(key, value));
        else if (key == "mode_selection") grid.grow.mode_selection = parse_mode_selection(scalar(key, value));
        else if (key == "removal") grid.removal = parse_removal(scalar(key, value));
        else if (key == "out" || key == "export") continue;  // consumed by the CLI
        else throw ParameterError("unknown config key '" + key + "'");
    }
}

std::vector<SweepGrid> direction_grids(std::size_t replicas, std::uint64_t seed) {
    SweepGrid base;
    base.n0 = {30000};
    base.m = {3};
    base.p = {0.5};
    base.attack = {AttackKind::general};
    base.eta = {0.7};
    base.replicas = replicas;

    SweepGrid vary_p = base;
    vary_p.p = {0.0, 1.0};
    vary_p.seed = seed;

    SweepGrid vary_m = base;
    vary_m.m = {2, 5};
    vary_m.seed = seed + 1;

    SweepGrid vary_eta = base;
    vary_eta.attack = {AttackKind::central, AttackKind::general, AttackKind::peripheral};
    vary_eta.eta = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7};
    vary_eta.seed = seed + 2;

    return {vary_p, vary_m, vary_eta};
}

}  // namespace sfnet
