// socrec: ingest social-network rating data, cluster users, and produce
// context-filtered top-N recommendations with an offline evaluation mode.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "socrec/clustering.hpp"
#include "socrec/dataset.hpp"
#include "socrec/evaluation.hpp"
#include "socrec/json_io.hpp"
#include "socrec/recommend.hpp"

namespace fs = std::filesystem;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file_atomic(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw socrec::Error("cannot write " + tmp.string());
        out << content;
        if (!out.flush()) throw socrec::Error("failed writing " + tmp.string());
    }
    fs::rename(tmp, path);
}

socrec::RatingsMatrix load_ratings(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw socrec::Error("cannot open " + path.string());
    return socrec::ingest_ratings(in);
}

socrec::SocialGraph load_edges(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw socrec::Error("cannot open " + path.string());
    return socrec::ingest_edges(in);
}

socrec::Dataset load_store(const fs::path& dir) {
    auto ratings = load_ratings(dir / "ratings.csv");
    auto graph = load_edges(dir / "edges.csv");
    return socrec::make_dataset(std::move(ratings), std::move(graph));
}

socrec::ClusterSet load_clusters(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw socrec::Error("cannot open " + path.string());
    return socrec::parse_cluster_set(in);
}

// "location=athens,time=evening"; dims from {location,time,weather,emotion}.
socrec::ContextQuery parse_context_flag(const std::string& flag) {
    socrec::ContextQuery q;
    if (flag.empty()) return q;
    std::size_t start = 0;
    while (start <= flag.size()) {
        std::size_t comma = flag.find(',', start);
        std::string part =
            comma == std::string::npos ? flag.substr(start) : flag.substr(start, comma - start);
        auto eq = part.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= part.size())
            throw UsageError("bad context assignment: '" + part + "' (want dim=value)");
        std::string dim = part.substr(0, eq);
        std::string value = part.substr(eq + 1);
        std::optional<std::string>* slot = nullptr;
        if (dim == "location") slot = &q.location;
        else if (dim == "time") slot = &q.time;
        else if (dim == "weather") slot = &q.weather;
        else if (dim == "emotion") slot = &q.emotion;
        else throw UsageError("unknown context dimension: '" + dim + "'");
        if (*slot) throw UsageError("duplicate context dimension: '" + dim + "'");
        *slot = value;
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return q;
}

socrec::ClusterMode parse_mode_flag(const std::string& mode) {
    socrec::ClusterMode m;
    if (!socrec::parse_cluster_mode(mode, m))
        throw UsageError("unknown mode: '" + mode + "' (want single-pass or iterative)");
    return m;
}

struct IngestArgs {
    std::string ratings;
    std::string edges;
    std::string out;
};

int run_ingest(const IngestArgs& args) {
    auto matrix = load_ratings(args.ratings);
    socrec::SocialGraph graph;
    if (!args.edges.empty()) graph = load_edges(args.edges);

    std::ostringstream ratings_csv, edges_csv;
    socrec::write_ratings_csv(matrix, ratings_csv);
    socrec::write_edges_csv(graph, edges_csv);
    fs::create_directories(args.out);
    write_file_atomic(fs::path(args.out) / "ratings.csv", ratings_csv.str());
    write_file_atomic(fs::path(args.out) / "edges.csv", edges_csv.str());

    std::cout << "ratings: " << matrix.rating_count() << "\n"
              << "rated users: " << matrix.user_count() << "\n"
              << "items: " << matrix.items().size() << "\n"
              << "edges: " << graph.edge_count() << "\n"
              << "graph users: " << graph.users().size() << "\n"
              << "store: " << args.out << "\n";
    return 0;
}

struct ClusterArgs {
    std::string store;
    std::string out;
    int k = 1;
    std::string mode = "single-pass";
    int max_iter = 20;
    double epsilon = 1e-6;
};

int run_cluster(const ClusterArgs& args) {
    auto matrix = load_ratings(fs::path(args.store) / "ratings.csv");
    socrec::ClusteringConfig config;
    config.k = args.k;
    config.mode = parse_mode_flag(args.mode);
    config.max_iterations = args.max_iter;
    config.epsilon = args.epsilon;

    auto cs = socrec::cluster(matrix, config);
    write_file_atomic(args.out, socrec::serialize(cs));

    std::cout << "k: " << cs.k << "\n"
              << "mode: " << socrec::to_string(cs.mode) << "\n"
              << "iterations: " << cs.iterations_run << "\n";
    for (std::size_t j = 0; j < cs.clusters.size(); ++j)
        std::cout << "cluster " << j << ": " << cs.clusters[j].members.size() << " members\n";
    std::cout << "clusters: " << args.out << "\n";
    return 0;
}

struct RecommendArgs {
    std::string store;
    std::string clusters;
    std::string user;
    std::string context;
    std::string out;
    int n = 10;
    int min_support = 0;
};

int run_recommend(const RecommendArgs& args) {
    auto dataset = load_store(args.store);
    auto cs = load_clusters(args.clusters);
    auto query = parse_context_flag(args.context);
    const socrec::UserId user{args.user};

    std::string doc;
    try {
        auto rec = socrec::recommend_top_n(dataset, cs, user, static_cast<std::size_t>(args.n),
                                           query, static_cast<std::size_t>(args.min_support));
        doc = socrec::recommendation_to_json(rec);
    } catch (const socrec::ColdStartUnresolvable&) {
        // No usable social signal: degrade to the most-popular list.
        auto prefiltered = socrec::context_prefilter(dataset.ratings, query,
                                                     static_cast<std::size_t>(args.min_support));
        auto items =
            socrec::popular_items(prefiltered.matrix, static_cast<std::size_t>(args.n));
        doc = socrec::popularity_to_json(user, prefiltered.effective_query, items);
    }

    std::cout << doc;
    if (!args.out.empty()) write_file_atomic(args.out, doc);
    return 0;
}

struct EvalArgs {
    std::string store;
    std::string out;
    int k = 1;
    std::string mode = "single-pass";
    int max_iter = 20;
    double epsilon = 1e-6;
    double holdout = 0.2;
    std::uint64_t seed = 42;
    int n = 10;
    double relevance_threshold = 4.0;
    std::string split_mode = "per-user";
    bool per_user_table = false;
};

int run_eval(const EvalArgs& args) {
    auto dataset = load_store(args.store);

    socrec::ClusteringConfig clustering;
    clustering.k = args.k;
    clustering.mode = parse_mode_flag(args.mode);
    clustering.max_iterations = args.max_iter;
    clustering.epsilon = args.epsilon;

    socrec::SplitConfig split_cfg;
    split_cfg.holdout_fraction = args.holdout;
    split_cfg.seed = args.seed;
    if (args.split_mode == "per-user") split_cfg.per_user = true;
    else if (args.split_mode == "global") split_cfg.per_user = false;
    else throw UsageError("unknown split mode: '" + args.split_mode + "'");

    auto report = socrec::evaluate(dataset, clustering, static_cast<std::size_t>(args.n),
                                   args.relevance_threshold, split_cfg);
    write_file_atomic(args.out, socrec::report_to_json(report, args.per_user_table));

    std::cout << "macro precision@" << args.n << ": " << report.macro_precision << "\n"
              << "macro recall@" << args.n << ": " << report.macro_recall << "\n"
              << "evaluable users: " << report.evaluable_users << "\n"
              << "report: " << args.out << "\n";
    return 0;
}

struct InspectArgs {
    std::string store;
    std::string clusters;
};

int run_inspect(const InspectArgs& args) {
    auto dataset = load_store(args.store);
    std::cout << "ratings: " << dataset.ratings.rating_count() << "\n"
              << "rated users: " << dataset.ratings.user_count() << "\n"
              << "items: " << dataset.ratings.items().size() << "\n"
              << "edges: " << dataset.graph.edge_count() << "\n"
              << "graph users: " << dataset.graph.users().size() << "\n"
              << "all users: " << dataset.all_users.size() << "\n";
    if (!args.clusters.empty()) {
        auto cs = load_clusters(args.clusters);
        std::cout << "clusters: k=" << cs.k << " mode=" << socrec::to_string(cs.mode)
                  << " iterations=" << cs.iterations_run << "\n";
        for (std::size_t j = 0; j < cs.clusters.size(); ++j)
            std::cout << "cluster " << j << ": " << cs.clusters[j].members.size() << " members\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cluster-restricted collaborative-filtering recommender over social rating data"};
    app.require_subcommand(1);

    IngestArgs ingest_args;
    auto* ingest = app.add_subcommand("ingest", "Validate CSV inputs and write a canonical store");
    ingest->add_option("--ratings", ingest_args.ratings, "Ratings CSV file")->required();
    ingest->add_option("--edges", ingest_args.edges, "Edges CSV file");
    ingest->add_option("--out", ingest_args.out, "Store directory to create")->required();

    ClusterArgs cluster_args;
    auto* cluster = app.add_subcommand("cluster", "Cluster the store's rated users");
    cluster->add_option("--store", cluster_args.store, "Store directory")->required();
    cluster->add_option("--k", cluster_args.k, "Number of clusters")->required();
    cluster->add_option("--mode", cluster_args.mode, "single-pass or iterative")
        ->default_str("single-pass");
    cluster->add_option("--max-iter", cluster_args.max_iter, "Iteration cap (iterative mode)")
        ->check(CLI::Range(1, 1000000000));
    cluster->add_option("--epsilon", cluster_args.epsilon,
                        "Centroid-movement convergence threshold (iterative mode)")
        ->check(CLI::NonNegativeNumber);
    cluster->add_option("--out", cluster_args.out, "Cluster file to write")->required();

    RecommendArgs rec_args;
    auto* recommend = app.add_subcommand("recommend", "Top-N recommendations for a user");
    recommend->add_option("--store", rec_args.store, "Store directory")->required();
    recommend->add_option("--clusters", rec_args.clusters, "Cluster file")->required();
    recommend->add_option("--user", rec_args.user, "Target user id")->required();
    recommend->add_option("--n", rec_args.n, "List length")->check(CLI::Range(1, 1000000000));
    recommend->add_option("--context", rec_args.context,
                          "Context filter, e.g. location=athens,time=evening");
    recommend->add_option("--min-support", rec_args.min_support,
                          "Minimum surviving ratings before the context filter relaxes")
        ->check(CLI::Range(0, 1000000000));
    recommend->add_option("--out", rec_args.out, "Also write the JSON to this file");

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "Holdout precision/recall evaluation");
    eval->add_option("--store", eval_args.store, "Store directory")->required();
    eval->add_option("--k", eval_args.k, "Number of clusters")->required();
    eval->add_option("--mode", eval_args.mode, "single-pass or iterative")
        ->default_str("single-pass");
    eval->add_option("--max-iter", eval_args.max_iter, "Iteration cap (iterative mode)")
        ->check(CLI::Range(1, 1000000000));
    eval->add_option("--epsilon", eval_args.epsilon,
                     "Centroid-movement convergence threshold (iterative mode)")
        ->check(CLI::NonNegativeNumber);
    eval->add_option("--holdout", eval_args.holdout, "Holdout fraction, exclusive (0,1)")
        ->check(CLI::Validator(
            [](std::string& s) -> std::string {
                try {
                    double v = std::stod(s);
                    if (v > 0.0 && v < 1.0) return {};
                } catch (const std::exception&) {
                }
                return "holdout must lie strictly between 0 and 1";
            },
            "HOLDOUT"));
    eval->add_option("--seed", eval_args.seed, "Split seed");
    eval->add_option("--n", eval_args.n, "Recommendation list length")->check(CLI::Range(1, 1000000000));
    eval->add_option("--relevance-threshold", eval_args.relevance_threshold,
                     "Held-out rating value counted as relevant");
    eval->add_option("--split", eval_args.split_mode, "per-user or global holdout selection")
        ->check(CLI::IsMember({"per-user", "global"}));
    eval->add_flag("--per-user-table", eval_args.per_user_table,
                   "Include the per-user table in the report");
    eval->add_option("--out", eval_args.out, "Report file to write")->required();

    InspectArgs inspect_args;
    auto* inspect = app.add_subcommand("inspect", "Print store and cluster summaries");
    inspect->add_option("--store", inspect_args.store, "Store directory")->required();
    inspect->add_option("--clusters", inspect_args.clusters, "Cluster file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*ingest) return run_ingest(ingest_args);
        if (*cluster) return run_cluster(cluster_args);
        if (*recommend) return run_recommend(rec_args);
        if (*eval) return run_eval(eval_args);
        if (*inspect) return run_inspect(inspect_args);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const socrec::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
