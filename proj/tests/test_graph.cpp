#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "costar/graph.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace costar;
using fixtures::id;

namespace {

std::vector<MovieRecord> random_cast_records(std::mt19937_64& rng, std::size_t movies,
                                             int actors) {
    std::uniform_int_distribution<int> size(1, 7);
    std::uniform_int_distribution<int> who(0, actors - 1);
    std::vector<MovieRecord> out;
    for (std::size_t i = 0; i < movies; ++i) {
        MovieRecord r{"film " + std::to_string(i % 23), {}, 2000};
        for (int c = size(rng); c > 0; --c) r.cast.push_back("actor " + std::to_string(who(rng)));
        out.push_back(std::move(r));
    }
    return out;
}

void check_invariants(const CoStarGraph& g) {
    std::size_t degree_sum = 0;
    std::size_t multiplicity_sum = 0;
    for (ActorId u = 0; u < g.node_count(); ++u) {
        auto adj = g.neighbors(u);
        CHECK(std::is_sorted(adj.begin(), adj.end()));
        CHECK(std::adjacent_find(adj.begin(), adj.end()) == adj.end());
        degree_sum += adj.size();
        for (std::size_t s = 0; s < adj.size(); ++s) {
            const ActorId v = adj[s];
            REQUIRE(v != u);
            const auto back = g.find_edge(v, u);
            REQUIRE(back.has_value());
            CHECK(*back == g.incident_edges(u)[s]);
            CHECK(g.edge_titles(u, v) == g.edge_titles(v, u));
            CHECK(g.multiplicity(u, v) == g.edge_titles(u, v).size());
            multiplicity_sum += g.multiplicity(u, v);
        }
    }
    CHECK(degree_sum == 2 * g.simple_edge_count());
    CHECK(multiplicity_sum == 2 * g.multi_edge_count());
}

// Edge multiset as (name, name) -> multiplicity, independent of id order.
std::map<std::pair<std::string, std::string>, std::size_t> named_edges(const Network& net) {
    std::map<std::pair<std::string, std::string>, std::size_t> out;
    for (ActorId u = 0; u < net.graph.node_count(); ++u)
        for (ActorId v : net.graph.neighbors(u)) {
            auto a = net.actors.name(u);
            auto b = net.actors.name(v);
            if (a < b) out[{a, b}] = net.graph.multiplicity(u, v);
        }
    return out;
}

}  // namespace

TEST_CASE("ActorTable interning") {
    ActorTable t;
    CHECK(t.intern("Christian Bale") == 0);
    CHECK(t.intern("Michael Caine") == 1);
    CHECK(t.intern("Christian Bale") == 0);
    CHECK(t.size() == 2);
    CHECK(t.find("Michael Caine") == 1);
    CHECK_FALSE(t.find("michael caine"));
    for (ActorId i = 0; i < t.size(); ++i) CHECK(t.find(t.name(i)) == i);

    const std::vector<ActorId> keep{1};
    const auto sub = t.subset(keep);
    CHECK(sub.size() == 1);
    CHECK(sub.name(0) == "Michael Caine");
}

TEST_CASE("build_graph on the Batman fixture") {
    const auto net = fixtures::batman();
    const auto& g = net.graph;
    CHECK(g.node_count() == 17);
    CHECK(g.multi_edge_count() == 94);
    CHECK(g.simple_edge_count() == 82);
    check_invariants(g);

    // First-appearance ids.
    CHECK(id(net, "Christian Bale") == 0);
    CHECK(id(net, "Michael Caine") == 1);
    CHECK(id(net, "Liam Neeson") == 2);
    CHECK(id(net, "Gary Oldman") == 4);
    CHECK(id(net, "Morgan Freeman") == 9);
    CHECK(id(net, "Heath Ledger") == 10);

    CHECK(g.degree(id(net, "Christian Bale")) == 16);
    CHECK(g.degree(id(net, "Liam Neeson")) == 9);
    CHECK(g.degree(id(net, "Heath Ledger")) == 6);
    CHECK(g.degree(id(net, "Tom Hardy")) == 7);
    CHECK_THROWS_AS(g.degree(17), std::out_of_range);

    const auto titles = g.edge_titles(id(net, "Christian Bale"), id(net, "Michael Caine"));
    CHECK(titles == std::vector<std::string_view>{"Batman Begins", "The Dark Knight",
                                                  "The Dark Knight Rises"});
    CHECK(g.edge_titles(id(net, "Liam Neeson"), id(net, "Heath Ledger")).empty());
    CHECK_THROWS_AS(g.edge_titles(3, 3), std::invalid_argument);

    CHECK(g.multiplicity(id(net, "Christian Bale"), id(net, "Morgan Freeman")) == 3);
    CHECK(g.multiplicity(id(net, "Tom Hardy"), id(net, "Heath Ledger")) == 0);
}

TEST_CASE("duplicate names and tiny casts") {
    const std::vector<MovieRecord> records{
        {"Solo", {"Lone"}, 2000},
        {"Echo", {"A", "A"}, 2000},
        {"Dup", {"A", "B", "A", "B", "C"}, 2001},
        {"Dup", {"A", "B"}, 2002},
    };
    const auto net = build_graph(records);
    const auto& g = net.graph;
    CHECK(net.actors.size() == 3);
    CHECK_FALSE(net.actors.find("Lone"));
    CHECK(g.simple_edge_count() == 3);
    CHECK(g.multi_edge_count() == 4);
    // Same title from two records counts twice.
    CHECK(g.multiplicity(id(net, "A"), id(net, "B")) == 2);
    CHECK(g.edge_titles(id(net, "A"), id(net, "B")) == std::vector<std::string_view>{"Dup", "Dup"});
    check_invariants(g);
}

TEST_CASE("single record yields a complete graph") {
    for (int c = 2; c <= 12; ++c) {
        MovieRecord r{"Only", {}, 1999};
        for (int i = 0; i < c; ++i) r.cast.push_back("p" + std::to_string(i));
        const std::vector<MovieRecord> records{r};
        const auto net = build_graph(records);
        CHECK(net.graph.node_count() == static_cast<std::size_t>(c));
        CHECK(net.graph.simple_edge_count() == static_cast<std::size_t>(c * (c - 1) / 2));
        CHECK(net.graph.multi_edge_count() == net.graph.simple_edge_count());
    }
}

TEST_CASE("graph invariants on random records") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 40; ++round) {
        auto records = random_cast_records(rng, 60, 40);
        const auto net = build_graph(records);
        check_invariants(net.graph);

        // Permuting records gives the same named edge multiset.
        std::shuffle(records.begin(), records.end(), rng);
        const auto permuted = build_graph(records);
        CHECK(permuted.graph.node_count() == net.graph.node_count());
        CHECK(permuted.graph.multi_edge_count() == net.graph.multi_edge_count());
        CHECK(named_edges(permuted) == named_edges(net));
    }
}

TEST_CASE("subgraph") {
    const auto net = fixtures::batman();
    const auto& g = net.graph;

    SUBCASE("all nodes is the identity") {
        std::vector<ActorId> all(g.node_count());
        std::iota(all.begin(), all.end(), ActorId{0});
        auto [sub, remap] = subgraph(g, all);
        CHECK(remap == all);
        CHECK(sub == g);
    }
    SUBCASE("one cast is a clique") {
        const auto records = fixtures::batman_records();
        std::vector<ActorId> cast;
        for (const auto& name : records[0].cast) cast.push_back(id(net, name));
        std::reverse(cast.begin(), cast.end());
        auto [sub, remap] = subgraph(g, cast);
        CHECK(sub.node_count() == 10);
        CHECK(sub.simple_edge_count() == 45);
        CHECK(std::is_sorted(remap.begin(), remap.end()));
        check_invariants(sub);
        // Multiplicities and titles survive reindexing.
        CHECK(sub.multiplicity(0, 1) == 3);
        CHECK(sub.edge_titles(0, 1) == g.edge_titles(remap[0], remap[1]));
    }
    SUBCASE("empty set") {
        auto [sub, remap] = subgraph(g, {});
        CHECK(sub.node_count() == 0);
        CHECK(sub.simple_edge_count() == 0);
        CHECK(remap.empty());
    }
    SUBCASE("subnetwork carries names") {
        const std::vector<ActorId> pick{id(net, "Heath Ledger"), id(net, "Christian Bale")};
        std::vector<ActorId> remap;
        const auto sub = subnetwork(net, pick, &remap);
        CHECK(sub.actors.name(0) == "Christian Bale");
        CHECK(sub.actors.name(1) == "Heath Ledger");
        CHECK(sub.graph.edge_titles(0, 1) == std::vector<std::string_view>{"The Dark Knight"});
    }
    SUBCASE("out of range") {
        const std::vector<ActorId> bad{99};
        CHECK_THROWS_AS(subgraph(g, bad), std::out_of_range);
    }
}

TEST_CASE("from_edges") {
    const std::vector<std::pair<ActorId, ActorId>> edges{{0, 1}, {1, 0}, {2, 2}, {1, 2}};
    const auto g = CoStarGraph::from_edges(4, edges);
    CHECK(g.node_count() == 4);
    CHECK(g.simple_edge_count() == 2);
    CHECK(g.multiplicity(0, 1) == 2);
    CHECK(g.degree(3) == 0);
    check_invariants(g);
}

TEST_CASE("snapshot round-trips bit-exactly") {
    std::mt19937_64 rng(8);
    std::vector<Network> nets{fixtures::batman(), Network{}, build_graph(random_cast_records(rng, 200, 80))};
    for (const auto& net : nets) {
        std::stringstream first;
        save_snapshot(first, net.graph, net.actors);
        const std::string bytes = first.str();

        std::stringstream in(bytes);
        auto [g, actors] = load_snapshot(in);
        CHECK(g == net.graph);
        CHECK(actors == net.actors);

        std::stringstream second;
        save_snapshot(second, g, actors);
        CHECK(second.str() == bytes);
    }
}

TEST_CASE("snapshot rejects corrupt input") {
    const auto net = fixtures::batman();
    std::stringstream out;
    save_snapshot(out, net.graph, net.actors);
    std::string bytes = out.str();

    SUBCASE("bad magic") {
        bytes[0] = 'X';
        std::stringstream in(bytes);
        CHECK_THROWS_AS(load_snapshot(in), std::runtime_error);
    }
    SUBCASE("truncated") {
        std::stringstream in(bytes.substr(0, bytes.size() / 2));
        CHECK_THROWS_AS(load_snapshot(in), std::runtime_error);
    }
    SUBCASE("neighbor id out of range") {
        // Last array is edge movies; corrupt a byte near the end to an absurd id.
        bytes[bytes.size() - 1] = '\x7f';
        std::stringstream in(bytes);
        CHECK_THROWS_AS(load_snapshot(in), std::runtime_error);
    }
}
