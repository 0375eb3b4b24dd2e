// graphidx command-line front end: generate, stats, oracle, params, experiment.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphidx.hpp"

namespace {

using namespace graphidx;

std::string real(double v) { return detail::format_real(v); }

template <class T>
T require(const std::optional<T>& value, const char* flag, const std::string& context) {
    if (!value) throw InvalidArgument(context + " requires --" + std::string(flag));
    return *value;
}

struct GenerateArgs {
    std::string model;
    std::optional<std::size_t> n, k, m, d;
    std::optional<double> p, beta;
    std::vector<std::size_t> sizes;
    std::uint64_t seed = 0;
    std::string out;
};

Graph build_graph(const GenerateArgs& a) {
    const std::string ctx = "model '" + a.model + "'";
    const Seed seed{a.seed};
    if (a.model == "er") return erdos_renyi(require(a.n, "n", ctx), require(a.p, "p", ctx), seed);
    if (a.model == "ws") {
        return watts_strogatz(require(a.n, "n", ctx), require(a.k, "k", ctx), require(a.beta, "beta", ctx), seed);
    }
    if (a.model == "ba") return barabasi_albert(require(a.n, "n", ctx), require(a.m, "m", ctx), seed);
    if (a.model == "rr") return random_regular(require(a.n, "n", ctx), require(a.d, "d", ctx), seed);
    if (a.model == "two-phase") return two_phase_clique_null(require(a.n, "n", ctx), require(a.p, "p", ctx), seed);
    if (a.model == "polygons") {
        if (a.sizes.empty()) throw InvalidArgument(ctx + " requires --sizes");
        return disjoint_polygons(a.sizes);
    }
    if (a.model == "clique-triangles") return clique_plus_triangles(require(a.n, "n", ctx));
    if (a.model == "clique-null") return clique_union_null(require(a.m, "m", ctx));
    throw InvalidArgument("--model: unknown model '" + a.model + "'");
}

int run_generate(const GenerateArgs& a) {
    const Graph g = build_graph(a);
    std::string summary = "n=" + std::to_string(g.node_count()) + " m=" + std::to_string(g.edge_count());
    if (g.node_count() >= 2) summary += " density=" + real(edge_density(g));
    if (a.out.empty()) {
        write_edge_list(std::cout, g);
        std::cerr << summary << '\n';
    } else {
        save_edge_list(a.out, g);
        std::cout << summary << '\n';
    }
    return 0;
}

int run_stats(const std::string& path, const std::vector<double>& alphas) {
    const Graph g = load_edge_list(path);
    std::cout << "n: " << g.node_count() << '\n' << "m: " << g.edge_count() << '\n';
    if (g.node_count() < 2) throw InvalidArgument("stats requires at least 2 nodes");
    std::cout << "density: " << real(edge_density(g)) << '\n';
    for (double a : alphas) std::cout << "DI_" << real(a) << ": " << real(degree_index(g, Alpha{a})) << '\n';
    for (double a : alphas) std::cout << "CI_" << real(a) << ": " << real(clustering_index(g, Alpha{a})) << '\n';
    const auto c = local_clustering_all(g);
    const auto [lo, hi] = std::minmax_element(c.begin(), c.end());
    std::cout << "clustering_min: " << real(*lo) << '\n'
              << "clustering_max: " << real(*hi) << '\n'
              << "clustering_mean: " << real(pairwise_sum(c) / static_cast<double>(c.size())) << '\n';
    return 0;
}

struct OracleArgs {
    std::string name;
    std::optional<std::size_t> n, m;
    std::optional<double> p;
};

double evaluate_oracle(const OracleArgs& a) {
    const std::string ctx = "oracle '" + a.name + "'";
    if (a.name == "edi2") return expected_di2_er(require(a.n, "n", ctx), require(a.p, "p", ctx));
    if (a.name == "edi1") return expected_di1_er(require(a.n, "n", ctx), require(a.p, "p", ctx));
    if (a.name == "edi1-pair") return expected_di1_pair_er(require(a.n, "n", ctx), require(a.p, "p", ctx));
    if (a.name == "edi1-upper") return expected_di1_upper_bound(require(a.n, "n", ctx), require(a.p, "p", ctx));
    if (a.name == "eclustering") return expected_local_clustering_er(require(a.n, "n", ctx), require(a.p, "p", ctx));
    if (a.name == "mad-binomial") return mean_abs_diff_binomial({require(a.m, "m", ctx), require(a.p, "p", ctx)});
    if (a.name == "mad-binomial-half") return mean_abs_diff_binomial_half(require(a.m, "m", ctx));
    if (a.name == "mad-binomial-asym") {
        return mean_abs_diff_binomial_asymptotic({require(a.m, "m", ctx), require(a.p, "p", ctx)});
    }
    if (a.name == "ci2-limit") return ci2_empirical_limit(require(a.p, "p", ctx));
    if (a.name == "eci1-two-phase") return expected_ci1_two_phase(require(a.n, "n", ctx), require(a.p, "p", ctx));
    if (a.name == "eci1-two-phase-exact") {
        return expected_ci1_two_phase_exact(require(a.n, "n", ctx), require(a.p, "p", ctx));
    }
    if (a.name == "ci-upper") return ci_upper_bound(require(a.n, "n", ctx));
    throw InvalidArgument("unknown oracle '" + a.name + "'");
}

std::size_t match_parameter(const std::string& model, std::size_t n, double p_star) {
    if (model == "ws") return ws_k_for_density(n, p_star);
    if (model == "ba") return ba_m_for_density(n, p_star);
    if (model == "rr") return rr_d_for_density(n, p_star);
    throw InvalidArgument("--model: params supports ws, ba, rr; got '" + model + "'");
}

int run_experiment_command(const std::string& config_path, const std::string& out_path) {
    std::ifstream in(config_path);
    if (!in) throw Error("cannot open '" + config_path + "'");
    const ExperimentConfig config = parse_experiment_config(in);
    const unsigned workers = default_worker_count();
    const auto rows = run_experiment(config, workers, [](const std::string& msg) { std::cerr << msg << '\n'; });
    if (out_path.empty()) {
        write_csv(rows, std::cout);
    } else {
        write_file_atomically(out_path, [&](std::ostream& out) { write_csv(rows, out); });
    }
    std::cerr << "wrote " << rows.size() << " rows\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Degree and clustering indices of random graphs"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* generate = app.add_subcommand("generate", "Generate a graph and write it as an edge list");
    generate->add_option("--model", gen.model, "er, ws, ba, rr, two-phase, polygons, clique-triangles, clique-null")
        ->required();
    generate->add_option("--n", gen.n, "Node count");
    generate->add_option("--p", gen.p, "Edge probability (er) or isolation probability (two-phase)");
    generate->add_option("--k", gen.k, "Ring neighbors (ws)");
    generate->add_option("--beta", gen.beta, "Rewiring probability (ws)");
    generate->add_option("--m", gen.m, "Edges per new node (ba) or clique size (clique-null)");
    generate->add_option("--d", gen.d, "Common degree (rr)");
    generate->add_option("--sizes", gen.sizes, "Polygon sizes (polygons)")->delimiter(',');
    generate->add_option("--seed", gen.seed, "Random seed");
    generate->add_option("--out", gen.out, "Output edge-list path (default: standard output)");

    std::string stats_in;
    std::vector<double> stats_alphas{1.0, 2.0};
    auto* stats = app.add_subcommand("stats", "Report indices of an edge-list file");
    stats->add_option("--in", stats_in, "Edge-list path")->required();
    stats->add_option("--alpha", stats_alphas, "Index exponents")->delimiter(',');

    OracleArgs ora;
    auto* oracle = app.add_subcommand("oracle", "Evaluate a closed-form expectation");
    oracle->add_option("name", ora.name,
                       "edi2, edi1, edi1-pair, edi1-upper, eclustering, mad-binomial, mad-binomial-half, "
                       "mad-binomial-asym, ci2-limit, eci1-two-phase, eci1-two-phase-exact, ci-upper")
        ->required();
    oracle->add_option("--n", ora.n, "Node count");
    oracle->add_option("--m", ora.m, "Binomial trials");
    oracle->add_option("--p", ora.p, "Probability");

    std::string params_model;
    std::size_t params_n = 0;
    double params_p = 0.0;
    auto* params = app.add_subcommand("params", "Match a model parameter to a target edge density");
    params->add_option("--model", params_model, "ws, ba or rr")->required();
    params->add_option("--n", params_n, "Node count")->required();
    params->add_option("--p-star", params_p, "Target edge density")->required();

    std::string config_path, experiment_out;
    auto* experiment = app.add_subcommand("experiment", "Run a Monte Carlo experiment grid and write CSV");
    experiment->add_option("--config", config_path, "Experiment config file")->required();
    experiment->add_option("--out", experiment_out, "Output CSV path (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*generate) return run_generate(gen);
        if (*stats) return run_stats(stats_in, stats_alphas);
        if (*oracle) {
            std::cout << real(evaluate_oracle(ora)) << '\n';
            return 0;
        }
        if (*params) {
            std::cout << match_parameter(params_model, params_n, params_p) << '\n';
            return 0;
        }
        if (*experiment) return run_experiment_command(config_path, experiment_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
