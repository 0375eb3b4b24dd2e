#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <istream>
#include <limits>
#include <optional>
#include <set>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "graphidx/generators.hpp"
#include "graphidx/indices.hpp"
#include "graphidx/numeric.hpp"
#include "graphidx/parallel.hpp"

namespace graphidx {

/// Per-replication seed: SplitMix64 avalanche folded over the serialized
/// tuple (master, label bytes, label length, n, replication).
inline Seed derive_seed(Seed master, const std::string& model_label, std::uint64_t n, std::uint64_t replication) {
    std::uint64_t h = mix64(master.master ^ 0x6a09e667f3bcc908ULL);
    for (unsigned char c : model_label) h = mix64(h ^ c);
    h = mix64(h ^ model_label.size());
    h = mix64(h ^ n);
    h = mix64(h ^ replication);
    return Seed{h};
}

/// Aggregate of one (model, n, index, alpha) cell.
struct SummaryRow {
    std::string model;
    std::size_t n = 0;
    double p_star = std::numeric_limits<double>::quiet_NaN();
    IndexKind index = IndexKind::Degree;
    double alpha = 1.0;
    std::size_t replications = 0;
    double mean = 0.0;
    /// Unbiased sample standard deviation over sqrt(replications); 0 for a single replication.
    double std_error = 0.0;
    std::uint64_t seed = 0;
};

inline std::string model_short_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::ErdosRenyi: return "er";
        case ModelKind::WattsStrogatz: return "ws";
        case ModelKind::BarabasiAlbert: return "ba";
        case ModelKind::RandomRegular: return "rr";
        case ModelKind::TwoPhaseCliqueNull: return "two-phase";
    }
    return "?";
}

/// Row labels for estimate_indices.
struct CellInfo {
    std::string model_label;  ///< empty: the model's short name
    double p_star = std::numeric_limits<double>::quiet_NaN();
};

/// Samples `replications` graphs from `spec` with derived seeds and
/// summarizes every requested index over the same samples. Results do not
/// depend on `workers`.
inline std::vector<SummaryRow> estimate_indices(const ModelSpec& spec, const std::vector<IndexSpec>& indices,
                                                std::size_t replications, Seed master, const CellInfo& info = {},
                                                unsigned workers = 1) {
    if (replications < 1) throw InvalidArgument("replications must be >= 1");
    if (indices.empty()) throw InvalidArgument("no indices requested");
    spec.validate();
    const std::string seed_label = spec.label();
    const std::size_t width = indices.size();
    std::vector<double> samples(replications * width);
    parallel_for(replications, workers, [&](std::size_t r) {
        try {
            const Graph g = generate(spec, derive_seed(master, seed_label, spec.n, r));
            const auto values = compute_indices(g, indices);
            std::copy(values.begin(), values.end(), samples.begin() + static_cast<std::ptrdiff_t>(r * width));
        } catch (const GenerationFailedError& e) {
            throw GenerationFailedError(seed_label + " replication " + std::to_string(r) + ": " + e.what());
        }
    });

    std::vector<SummaryRow> rows;
    std::vector<double> column(replications), sq(replications);
    for (std::size_t c = 0; c < width; ++c) {
        for (std::size_t r = 0; r < replications; ++r) column[r] = samples[r * width + c];
        const double mean = pairwise_sum(column) / static_cast<double>(replications);
        double std_error = 0.0;
        if (replications > 1) {
            for (std::size_t r = 0; r < replications; ++r) sq[r] = (column[r] - mean) * (column[r] - mean);
            const double var = pairwise_sum(sq) / static_cast<double>(replications - 1);
            std_error = std::sqrt(var / static_cast<double>(replications));
        }
        SummaryRow row;
        row.model = info.model_label.empty() ? model_short_name(spec.kind()) : info.model_label;
        row.n = spec.n;
        row.p_star = info.p_star;
        row.index = indices[c].kind;
        row.alpha = indices[c].alpha.value();
        row.replications = replications;
        row.mean = mean;
        row.std_error = std_error;
        row.seed = master.master;
        rows.push_back(std::move(row));
    }
    return rows;
}

inline SummaryRow estimate_index(const ModelSpec& spec, const IndexSpec& index, std::size_t replications, Seed master,
                                 unsigned workers = 1) {
    return estimate_indices(spec, {index}, replications, master, {}, workers).front();
}

/// Grid of (model variant, p_star, n) cells, each summarized for every
/// requested (index kind, alpha).
struct ExperimentConfig {
    std::vector<std::string> models;  ///< er, ws, ba, rr, two-phase
    std::vector<std::size_t> node_grid;
    std::vector<double> p_stars;
    std::vector<IndexKind> indices;
    std::vector<double> alphas;
    std::size_t replications = 200;
    Seed master_seed;
    std::vector<double> ws_betas;

    void validate() const {
        if (models.empty()) throw InvalidArgument("config: 'models' is empty");
        for (const auto& m : models) {
            if (m != "er" && m != "ws" && m != "ba" && m != "rr" && m != "two-phase") {
                throw InvalidArgument("config: unknown model '" + m + "' in 'models'");
            }
            if (m == "ws" && ws_betas.empty()) throw InvalidArgument("config: model 'ws' requires 'ws_betas'");
        }
        if (node_grid.empty()) throw InvalidArgument("config: 'node_grid' is empty");
        for (std::size_t i = 0; i < node_grid.size(); ++i) {
            if (node_grid[i] < 3) throw InvalidArgument("config: 'node_grid' entries must be >= 3");
            if (i > 0 && node_grid[i] <= node_grid[i - 1]) {
                throw InvalidArgument("config: 'node_grid' must be strictly ascending");
            }
        }
        if (p_stars.empty()) throw InvalidArgument("config: 'p_star' is empty");
        for (double p : p_stars) {
            if (!(p > 0.0 && p < 1.0)) throw InvalidArgument("config: 'p_star' values must lie in (0, 1)");
        }
        if (indices.empty()) throw InvalidArgument("config: 'indices' is empty");
        if (alphas.empty()) throw InvalidArgument("config: 'alphas' is empty");
        for (double a : alphas) Alpha{a};
        for (double b : ws_betas) {
            if (!(b >= 0.0 && b <= 1.0)) throw InvalidArgument("config: 'ws_betas' values must lie in [0, 1]");
        }
        if (replications < 1) throw InvalidArgument("config: 'replications' must be >= 1");
    }

    /// Index list in row order: DI before CI, alphas in config order.
    std::vector<IndexSpec> index_specs() const {
        std::vector<IndexSpec> out;
        for (IndexKind kind : {IndexKind::Degree, IndexKind::Clustering}) {
            if (std::find(indices.begin(), indices.end(), kind) == indices.end()) continue;
            for (double a : alphas) out.push_back({kind, Alpha{a}});
        }
        return out;
    }
};

namespace detail {
inline std::string format_real(double v, int digits = 17) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}
}  // namespace detail

struct ModelVariant {
    std::string label;
    std::string model;
    double beta = 0.0;
};

/// Models in config order; ws expands to one variant per rewiring
/// probability, labelled `ws-b<beta>`.
inline std::vector<ModelVariant> expand_variants(const ExperimentConfig& config) {
    std::vector<ModelVariant> out;
    for (const auto& m : config.models) {
        if (m == "ws") {
            for (double b : config.ws_betas) out.push_back({"ws-b" + detail::format_real(b, 6), m, b});
        } else {
            out.push_back({m, m, 0.0});
        }
    }
    return out;
}

/// Density-matched spec for one cell; std::nullopt when Barabasi-Albert
/// cannot reach p_star (negative discriminant).
inline std::optional<ModelSpec> resolve_cell(const ModelVariant& variant, std::size_t n, double p_star) {
    try {
        if (variant.model == "er") return ModelSpec{n, ErdosRenyiParams{p_star}};
        if (variant.model == "two-phase") return ModelSpec{n, TwoPhaseParams{p_star}};
        if (variant.model == "ws") return ModelSpec{n, WattsStrogatzParams{ws_k_for_density(n, p_star), variant.beta}};
        if (variant.model == "rr") return ModelSpec{n, RandomRegularParams{rr_d_for_density(n, p_star)}};
        if (variant.model == "ba") {
            const auto x = static_cast<double>(n);
            if (4.0 * x * x - 8.0 * p_star * x * (x - 1.0) < 0.0) return std::nullopt;
            return ModelSpec{n, BarabasiAlbertParams{ba_m_for_density(n, p_star)}};
        }
    } catch (const Error& e) {
        throw InvalidArgument("cell " + variant.label + " n=" + std::to_string(n) + " p_star=" +
                              detail::format_real(p_star) + ": " + e.what());
    }
    throw InvalidArgument("unknown model '" + variant.model + "'");
}

/// Receives one-line progress notices.
using ProgressSink = std::function<void(const std::string&)>;

/// Runs every cell of the grid. Row order: variants in config order, p_star
/// in config order, n ascending, then index_specs() order.
inline std::vector<SummaryRow> run_experiment(const ExperimentConfig& config, unsigned workers = 1,
                                              const ProgressSink& progress = {}) {
    config.validate();
    const auto specs = config.index_specs();
    std::vector<SummaryRow> rows;
    for (const auto& variant : expand_variants(config)) {
        for (double p_star : config.p_stars) {
            for (std::size_t n : config.node_grid) {
                const auto spec = resolve_cell(variant, n, p_star);
                if (!spec) {
                    if (progress) {
                        progress("skip " + variant.label + " n=" + std::to_string(n) + " p_star=" +
                                 detail::format_real(p_star) + ": density unreachable (negative discriminant)");
                    }
                    continue;
                }
                auto cell = estimate_indices(*spec, specs, config.replications, config.master_seed,
                                             {variant.label, p_star}, workers);
                if (progress) progress("done " + spec->label() + " [" + variant.label + "]");
                rows.insert(rows.end(), cell.begin(), cell.end());
            }
        }
    }
    return rows;
}

inline constexpr const char* kCsvHeader = "model,n,p_star,index,alpha,replications,mean,stderr,seed";

inline void write_csv(const std::vector<SummaryRow>& rows, std::ostream& out) {
    if (rows.empty()) throw InvalidArgument("write_csv: no rows");
    out << kCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.model << ',' << r.n << ',' << detail::format_real(r.p_star) << ',' << to_string(r.index) << ','
            << detail::format_real(r.alpha) << ',' << r.replications << ',' << detail::format_real(r.mean) << ','
            << detail::format_real(r.std_error) << ',' << r.seed << '\n';
    }
    if (!out) throw Error("write_csv: write failed");
}

inline std::vector<SummaryRow> read_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line) || line != kCsvHeader) throw ParseError(1, "missing or unexpected CSV header");
    std::vector<SummaryRow> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) f.push_back(field);
        if (f.size() != 9) throw ParseError(line_no, "expected 9 fields, got " + std::to_string(f.size()));
        try {
            SummaryRow r;
            r.model = f[0];
            r.n = std::stoull(f[1]);
            r.p_star = std::strtod(f[2].c_str(), nullptr);
            r.index = parse_index_kind(f[3]);
            r.alpha = std::stod(f[4]);
            r.replications = std::stoull(f[5]);
            r.mean = std::stod(f[6]);
            r.std_error = std::stod(f[7]);
            r.seed = std::stoull(f[8]);
            rows.push_back(std::move(r));
        } catch (const std::exception& e) {
            throw ParseError(line_no, std::string("bad field: ") + e.what());
        }
    }
    return rows;
}

// Config file: `key = value` lines, lists comma-separated, `#` comments.

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

template <class T, class Parse>
std::vector<T> parse_list(const std::string& key, const std::string& value, std::size_t line, Parse parse) {
    std::vector<T> out;
    for (const auto& item : split_list(value)) {
        try {
            std::size_t used = 0;
            T v = parse(item, used);
            if (used != item.size()) throw std::invalid_argument("trailing characters");
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError(line, "bad value '" + item + "' for key '" + key + "'");
        }
    }
    return out;
}

}  // namespace detail

inline ExperimentConfig parse_experiment_config(std::istream& in) {
    ExperimentConfig config;
    std::set<std::string> seen;
    std::string line;
    std::size_t line_no = 0;
    auto to_double = [](const std::string& s, std::size_t& used) { return std::stod(s, &used); };
    auto to_size = [](const std::string& s, std::size_t& used) {
        if (!s.empty() && s[0] == '-') throw std::invalid_argument("negative");
        return static_cast<std::size_t>(std::stoull(s, &used));
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(line_no, "expected 'key = value'");
        const std::string key = detail::trim(line.substr(0, eq));
        const std::string value = detail::trim(line.substr(eq + 1));
        if (!seen.insert(key).second) throw ParseError(line_no, "duplicate key '" + key + "'");
        if (key == "models") {
            config.models = detail::split_list(value);
        } else if (key == "node_grid") {
            config.node_grid = detail::parse_list<std::size_t>(key, value, line_no, to_size);
        } else if (key == "p_star") {
            config.p_stars = detail::parse_list<double>(key, value, line_no, to_double);
        } else if (key == "indices") {
            for (const auto& item : detail::split_list(value)) {
                try {
                    config.indices.push_back(parse_index_kind(item));
                } catch (const Error&) {
                    throw ParseError(line_no, "bad value '" + item + "' for key 'indices'");
                }
            }
        } else if (key == "alphas") {
            config.alphas = detail::parse_list<double>(key, value, line_no, to_double);
        } else if (key == "replications") {
            auto v = detail::parse_list<std::size_t>(key, value, line_no, to_size);
            if (v.size() != 1) throw ParseError(line_no, "key 'replications' takes one value");
            config.replications = v[0];
        } else if (key == "seed") {
            auto v = detail::parse_list<std::size_t>(key, value, line_no, to_size);
            if (v.size() != 1) throw ParseError(line_no, "key 'seed' takes one value");
            config.master_seed = Seed{static_cast<std::uint64_t>(v[0])};
        } else if (key == "ws_betas") {
            config.ws_betas = detail::parse_list<double>(key, value, line_no, to_double);
        } else {
            throw ParseError(line_no, "unknown key '" + key + "'");
        }
    }
    for (const char* required : {"models", "node_grid", "p_star", "indices", "alphas", "replications", "seed"}) {
        if (!seen.count(required)) throw InvalidArgument(std::string("config: missing required key '") + required + "'");
    }
    config.validate();
    return config;
}

}  // namespace graphidx
