#include <algorithm>
#include <random>
#include <sstream>

#include "costar/components.hpp"
#include "costar/paths.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace costar;
using fixtures::id;

namespace {

std::string render(const PathResult& r, std::string_view u, std::string_view v) {
    std::ostringstream out;
    write_path(out, r, u, v);
    return out.str();
}

}  // namespace

TEST_CASE("Neeson to Ledger goes through Bale") {
    const auto net = fixtures::batman();
    const auto r = shortest_path(net.graph, net.actors, "Liam Neeson", "Heath Ledger");
    REQUIRE(r.status == PathStatus::found);
    REQUIRE(r.path.length() == 2);
    CHECK(r.path.hops[0] == Hop{"Liam Neeson", "Batman Begins", "Christian Bale"});
    CHECK(r.path.hops[1] == Hop{"Christian Bale", "The Dark Knight", "Heath Ledger"});
    CHECK(render(r, "Liam Neeson", "Heath Ledger") ==
          "Here is the shortest path from Liam Neeson to Heath Ledger\n"
          "  Liam Neeson was in Batman Begins with Christian Bale\n"
          "  Christian Bale was in The Dark Knight with Heath Ledger\n");
}

TEST_CASE("path edge cases") {
    const auto net = fixtures::batman();
    SUBCASE("same actor") {
        const auto r = shortest_path(net.graph, net.actors, "Michael Caine", "Michael Caine");
        CHECK(r.status == PathStatus::found);
        CHECK(r.path.length() == 0);
        CHECK(render(r, "Michael Caine", "Michael Caine") ==
              "Here is the shortest path from Michael Caine to Michael Caine\n");
    }
    SUBCASE("first title on a repeated pair") {
        const auto r = shortest_path(net.graph, net.actors, "Christian Bale", "Michael Caine");
        REQUIRE(r.path.length() == 1);
        CHECK(r.path.hops[0].movie == "Batman Begins");
    }
    SUBCASE("unknown actor") {
        const auto r = shortest_path(net.graph, net.actors, "Homer Simpson", "Christian Bale");
        CHECK(r.status == PathStatus::not_in_network);
        CHECK(render(r, "Homer Simpson", "Christian Bale") ==
              "Here is the shortest path from Homer Simpson to Christian Bale\n"
              "  Error: Homer Simpson and/or Christian Bale are not in the network\n");
    }
    SUBCASE("separate components") {
        const std::vector<MovieRecord> records{{"X", {"a", "b"}, 2000}, {"Y", {"c", "d"}, 2000}};
        const auto split = build_graph(records);
        const auto r = shortest_path(split.graph, split.actors, "a", "d");
        CHECK(r.status == PathStatus::no_path);
        CHECK(render(r, "a", "d") ==
              "Here is the shortest path from a to d\n  No path exists between a and d\n");
        CHECK_FALSE(shortest_path_ids(split.graph, 0, 3));
    }
}

TEST_CASE("hop distributions on the Batman graph") {
    const auto net = fixtures::batman();
    const auto bale = hop_distribution(net.graph, id(net, "Christian Bale"));
    CHECK(bale.counts == std::vector<std::size_t>{1, 16});
    CHECK(to_counter_string(bale) == "Counter({0: 1, 1: 16})");
    CHECK(bale.distance_sum() == 16);

    const auto neeson = hop_distribution(net.graph, id(net, "Liam Neeson"));
    CHECK(neeson.counts == std::vector<std::size_t>{1, 9, 7});
    CHECK(to_counter_string(neeson) == "Counter({0: 1, 1: 9, 2: 7})");
    CHECK(neeson.distance_sum() == 23);
    CHECK(neeson.reached() == 17);
}

TEST_CASE("Bfs visits neighbors in ascending order") {
    // 0 connects to 3 then 1; both reach 2, so 2's parent is 1.
    const auto g = CoStarGraph::from_edges(4, {{0, 3}, {0, 1}, {3, 2}, {1, 2}});
    Bfs bfs(g);
    bfs.run(0);
    CHECK(bfs.order() == std::vector<ActorId>{0, 1, 3, 2});
    CHECK(bfs.parent(2) == 1);
    CHECK(bfs.parent(0) == Bfs::no_parent);
    CHECK(bfs.distance(2) == 2);
    CHECK(shortest_path_ids(g, 0, 2) == std::vector<ActorId>{0, 1, 2});
}

TEST_CASE("paths agree with Floyd-Warshall on random graphs") {
    std::mt19937_64 rng(33);
    std::uniform_int_distribution<std::size_t> size(2, 120);
    for (int round = 0; round < 40; ++round) {
        const std::size_t n = size(rng);
        const double p = std::uniform_real_distribution<double>(0.3, 4.0)(rng) / static_cast<double>(n);
        const auto edges = oracle::random_graph(n, p, rng);
        const auto g = CoStarGraph::from_edges(n, edges);
        const auto d = oracle::floyd_warshall(oracle::Dense(n, edges));
        const auto labels = connected_components(g);

        for (ActorId s = 0; s < n; ++s) {
            const auto dist = hop_distribution(g, s);
            CHECK(dist.reached() == labels.sizes[labels.component_of[s]]);
            std::uint64_t sum = 0;
            for (ActorId t = 0; t < n; ++t)
                if (d[s][t] < oracle::kInf) sum += static_cast<std::uint64_t>(d[s][t]);
            CHECK(dist.distance_sum() == sum);
        }

        for (int q = 0; q < 30; ++q) {
            const auto s = static_cast<ActorId>(rng() % n);
            const auto t = static_cast<ActorId>(rng() % n);
            const auto forward = shortest_path_ids(g, s, t);
            const auto backward = shortest_path_ids(g, t, s);
            if (d[s][t] >= oracle::kInf) {
                CHECK_FALSE(forward);
                CHECK_FALSE(backward);
                continue;
            }
            REQUIRE(forward);
            REQUIRE(backward);
            CHECK(forward->size() == static_cast<std::size_t>(d[s][t]) + 1);
            CHECK(backward->size() == forward->size());
            CHECK(forward->front() == s);
            CHECK(forward->back() == t);
            for (std::size_t i = 0; i + 1 < forward->size(); ++i)
                CHECK(g.find_edge((*forward)[i], (*forward)[i + 1]).has_value());

            // Triangle inequality through a random midpoint.
            const auto w = static_cast<ActorId>(rng() % n);
            if (d[s][w] < oracle::kInf && d[w][t] < oracle::kInf) CHECK(d[s][t] <= d[s][w] + d[w][t]);
        }
    }
}

TEST_CASE("every hop names a movie the pair shared") {
    std::mt19937_64 rng(4);
    std::vector<MovieRecord> records;
    for (int i = 0; i < 300; ++i) {
        MovieRecord r{"movie " + std::to_string(i), {}, 2000};
        for (int c = 0; c < 4; ++c) r.cast.push_back("p" + std::to_string(rng() % 150));
        records.push_back(std::move(r));
    }
    const auto net = build_graph(records);
    const auto& g = net.graph;
    for (int q = 0; q < 200; ++q) {
        const auto& u = net.actors.name(static_cast<ActorId>(rng() % g.node_count()));
        const auto& v = net.actors.name(static_cast<ActorId>(rng() % g.node_count()));
        const auto r = shortest_path(g, net.actors, u, v);
        if (r.status != PathStatus::found) continue;
        std::string at = u;
        for (const auto& hop : r.path.hops) {
            CHECK(hop.from == at);
            const auto titles = g.edge_titles(*net.actors.find(hop.from), *net.actors.find(hop.to));
            REQUIRE_FALSE(titles.empty());
            CHECK(hop.movie == titles.front());
            at = hop.to;
        }
        CHECK(at == v);
    }
}
