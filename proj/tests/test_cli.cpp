#include <doctest.h>

#include <json.hpp>

#include "support/fixtures.hpp"
#include "support/proc.hpp"

using namespace socrec::testing;
using nlohmann::json;

namespace {

const char* kEdgesCsv =
    "source,target,relation\n"
    "User1,User3,friend\n"
    "User5,User2,follower\n"
    "User4,User2,member\n";

// Ratings + edges ingested into a store directory; returns the store path.
std::string make_store(const ScratchDir& dir) {
    dir.write("ratings.in.csv", table2_ratings_csv());
    dir.write("edges.in.csv", kEdgesCsv);
    const std::string store = dir.file("store").string();
    auto r = run_cli(dir, "ingest --ratings " + dir.file("ratings.in.csv").string() +
                              " --edges " + dir.file("edges.in.csv").string() + " --out " + store);
    REQUIRE(r.exit_code == 0);
    return store;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("ingest writes a normalized store and prints counts") {
    ScratchDir dir("cli_ingest");
    const auto store = make_store(dir);

    auto r = run_cli(dir, "inspect --store " + store);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ratings: 7") != std::string::npos);
    CHECK(r.out.find("rated users: 4") != std::string::npos);
    CHECK(r.out.find("edges: 4") != std::string::npos); // friend row symmetrized

    const auto ratings_csv = read_all(std::filesystem::path(store) / "ratings.csv");
    CHECK(ratings_csv.find("User2,Item1") == std::string::npos); // 0 cell dropped
    const auto edges_csv = read_all(std::filesystem::path(store) / "edges.csv");
    CHECK(edges_csv.find("User3,User1,friend") != std::string::npos);
}

TEST_CASE("ingest without --ratings is a usage error") {
    ScratchDir dir("cli_usage");
    auto r = run_cli(dir, "ingest --out " + dir.file("store").string());
    CHECK(r.exit_code == 1);
}

TEST_CASE("duplicate rating rows fail with the line number") {
    ScratchDir dir("cli_dup");
    dir.write("dup.csv", "user_id,item_id,rating\nU,I,5\nU,I,3\n");
    auto r = run_cli(dir, "ingest --ratings " + dir.file("dup.csv").string() + " --out " +
                              dir.file("store").string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);
}

TEST_CASE("cluster writes the expected partition and is byte-deterministic") {
    ScratchDir dir("cli_cluster");
    const auto store = make_store(dir);
    const auto clusters = dir.file("clusters.txt").string();

    auto r = run_cli(dir, "cluster --store " + store + " --k 2 --mode single-pass --out " +
                              clusters);
    CHECK(r.exit_code == 0);
    CHECK(read_all(clusters) ==
          "k=2 mode=single_pass iterations=1\n"
          "0\tUser1,User3\n"
          "1\tUser2,User4\n");

    const auto first = read_all(clusters);
    auto again = run_cli(dir, "cluster --store " + store + " --k 2 --mode single-pass --out " +
                                  clusters);
    CHECK(again.exit_code == 0);
    CHECK(read_all(clusters) == first);
}

TEST_CASE("cluster with k larger than the user count is a data error") {
    ScratchDir dir("cli_badk");
    const auto store = make_store(dir);
    auto r = run_cli(dir, "cluster --store " + store + " --k 99 --mode single-pass --out " +
                              dir.file("c.txt").string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("k") != std::string::npos);
}

TEST_CASE("recommend emits ranked JSON for a clustered user") {
    ScratchDir dir("cli_recommend");
    const auto store = make_store(dir);
    const auto clusters = dir.file("clusters.txt").string();
    REQUIRE(run_cli(dir, "cluster --store " + store + " --k 1 --mode single-pass --out " +
                             clusters)
                .exit_code == 0);

    auto r = run_cli(dir, "recommend --store " + store + " --clusters " + clusters +
                              " --user User2 --n 5");
    CHECK(r.exit_code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["user"] == "User2");
    REQUIRE(doc["entries"].size() == 1); // only Item1 is unrated by User2
    CHECK(doc["entries"][0]["item"] == "Item1");
}

TEST_CASE("recommend resolves a graph-only user through its friends") {
    ScratchDir dir("cli_coldstart");
    dir.write("ratings.in.csv", table2_ratings_csv());
    dir.write("edges.in.csv",
              "source,target,relation\n"
              "New,User2,friend\n"
              "New,User4,friend\n"
              "New,User1,friend\n");
    const std::string store = dir.file("store").string();
    REQUIRE(run_cli(dir, "ingest --ratings " + dir.file("ratings.in.csv").string() + " --edges " +
                             dir.file("edges.in.csv").string() + " --out " + store)
                .exit_code == 0);
    const auto clusters = dir.file("clusters.txt").string();
    REQUIRE(run_cli(dir, "cluster --store " + store + " --k 2 --mode single-pass --out " +
                             clusters)
                .exit_code == 0);

    // two friends in cluster 1, one in cluster 0 -> recommendations from cluster 1
    auto r = run_cli(dir, "recommend --store " + store + " --clusters " + clusters +
                              " --user New --n 5");
    CHECK(r.exit_code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["user"] == "New");
    CHECK_FALSE(doc.contains("fallback"));
    REQUIRE(doc["entries"].size() == 2);
    CHECK(doc["entries"][0]["item"] == "Item2"); // cluster-1 mean 3.5 beats 2.0
    CHECK(doc["entries"][1]["item"] == "Item1");
}

TEST_CASE("recommend degrades to the popularity list for isolated users") {
    ScratchDir dir("cli_popularity");
    dir.write("ratings.in.csv", table2_ratings_csv());
    dir.write("edges.in.csv",
              "source,target,relation\n"
              "Loner,Stranger,friend\n"); // neither endpoint is clustered
    const std::string store = dir.file("store").string();
    REQUIRE(run_cli(dir, "ingest --ratings " + dir.file("ratings.in.csv").string() + " --edges " +
                             dir.file("edges.in.csv").string() + " --out " + store)
                .exit_code == 0);
    const auto clusters = dir.file("clusters.txt").string();
    REQUIRE(run_cli(dir, "cluster --store " + store + " --k 2 --mode single-pass --out " +
                             clusters)
                .exit_code == 0);

    auto r = run_cli(dir, "recommend --store " + store + " --clusters " + clusters +
                              " --user Loner --n 2");
    CHECK(r.exit_code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["fallback"] == "popularity");
    REQUIRE(doc["entries"].size() == 2);
    CHECK(doc["entries"][0]["item"] == "Item2");
    CHECK(doc["entries"][1]["item"] == "Item1");
}

TEST_CASE("recommend rejects unknown users and bad context flags") {
    ScratchDir dir("cli_unknown");
    const auto store = make_store(dir);
    const auto clusters = dir.file("clusters.txt").string();
    REQUIRE(run_cli(dir, "cluster --store " + store + " --k 1 --mode single-pass --out " +
                             clusters)
                .exit_code == 0);

    auto unknown = run_cli(dir, "recommend --store " + store + " --clusters " + clusters +
                                    " --user Nobody --n 3");
    CHECK(unknown.exit_code == 2);

    auto bad_dim = run_cli(dir, "recommend --store " + store + " --clusters " + clusters +
                                    " --user User1 --n 3 --context mood=happy");
    CHECK(bad_dim.exit_code == 1);
}

TEST_CASE("context flag filters the working matrix") {
    ScratchDir dir("cli_context");
    std::ostringstream ratings;
    socrec::write_ratings_csv(tagged_matrix(), ratings);
    dir.write("ratings.in.csv", ratings.str());
    const std::string store = dir.file("store").string();
    REQUIRE(run_cli(dir, "ingest --ratings " + dir.file("ratings.in.csv").string() + " --out " +
                             store)
                .exit_code == 0);
    const auto clusters = dir.file("clusters.txt").string();
    REQUIRE(run_cli(dir, "cluster --store " + store + " --k 1 --mode single-pass --out " +
                             clusters)
                .exit_code == 0);

    auto r = run_cli(dir, "recommend --store " + store + " --clusters " + clusters +
                              " --user U7 --n 10 --context location=athens,weather=sunny");
    CHECK(r.exit_code == 0);
    auto doc = json::parse(r.out);
    CHECK(doc["query"] == json{{"location", "athens"}, {"weather", "sunny"}});
    for (const auto& e : doc["entries"]) CHECK(e["item"] != "I6"); // U7 rated I6
}

TEST_CASE("eval writes byte-identical reports for identical arguments") {
    ScratchDir dir("cli_eval");
    std::ostringstream ratings, edges;
    auto planted = planted_communities();
    socrec::write_ratings_csv(planted.ratings, ratings);
    socrec::write_edges_csv(planted.graph, edges);
    dir.write("ratings.in.csv", ratings.str());
    dir.write("edges.in.csv", edges.str());
    const std::string store = dir.file("store").string();
    REQUIRE(run_cli(dir, "ingest --ratings " + dir.file("ratings.in.csv").string() + " --edges " +
                             dir.file("edges.in.csv").string() + " --out " + store)
                .exit_code == 0);

    const std::string args = "eval --store " + store +
                             " --k 2 --mode single-pass --holdout 0.2 --seed 7 --n 10 "
                             "--relevance-threshold 4.0 --per-user-table --out ";
    auto a = run_cli(dir, args + dir.file("report_a.json").string());
    auto b = run_cli(dir, args + dir.file("report_b.json").string());
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    CHECK(read_all(dir.file("report_a.json")) == read_all(dir.file("report_b.json")));
    CHECK(a.out.find("macro precision@10") != std::string::npos);
    CHECK(a.out.find("macro recall@10") != std::string::npos);

    auto doc = json::parse(read_all(dir.file("report_a.json")));
    CHECK(doc["macro_recall_at_n"].get<double>() >= 0.9);
}

TEST_CASE("eval rejects an out-of-range holdout as usage") {
    ScratchDir dir("cli_eval_usage");
    const auto store = make_store(dir);
    auto r = run_cli(dir, "eval --store " + store + " --k 2 --holdout 1.5 --out " +
                              dir.file("r.json").string());
    CHECK(r.exit_code == 1);
}

TEST_CASE("help is exit 0 and lists the subcommands") {
    ScratchDir dir("cli_help");
    auto r = run_cli(dir, "--help");
    CHECK(r.exit_code == 0);
    for (const char* sub : {"ingest", "cluster", "recommend", "eval", "inspect"})
        CHECK(r.out.find(sub) != std::string::npos);

    auto rec_help = run_cli(dir, "recommend --help");
    CHECK(rec_help.exit_code == 0);
    for (const char* flag : {"--store", "--clusters", "--user", "--n", "--context",
                             "--min-support"})
        CHECK(rec_help.out.find(flag) != std::string::npos);
}

TEST_CASE("no subcommand is a usage error") {
    ScratchDir dir("cli_nosub");
    auto r = run_cli(dir, "");
    CHECK(r.exit_code == 1);
}

} // TEST_SUITE
