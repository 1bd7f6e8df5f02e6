#include <map>
#include <random>
#include <sstream>

#include "costar/reports.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace costar;
using fixtures::id;

TEST_CASE("movies per actor") {
    const auto net = fixtures::batman();
    const auto table = movies_per_actor(net.graph, net.actors);
    REQUIRE(table.rows.size() == 17);
    CHECK(table.integral);
    CHECK(table.rows[0] == TableRow{"Christian Bale", 3});
    CHECK(table.rows[3] == TableRow{"Morgan Freeman", 3});
    CHECK(table.rows[4].value == 1);
    CHECK(movies_per_actor(net.graph, net.actors, 2).rows.size() == 2);

    // A title repeated across records counts once.
    const std::vector<MovieRecord> records{{"Same", {"a", "b"}, 2000}, {"Same", {"a", "c"}, 2001},
                                           {"Other", {"a", "b"}, 2002}};
    const auto small = build_graph(records);
    const auto t = movies_per_actor(small.graph, small.actors);
    CHECK(t.rows[0] == TableRow{"a", 2});
    CHECK(t.rows[1] == TableRow{"b", 2});
    CHECK(t.rows[2] == TableRow{"c", 1});
}

TEST_CASE("top partnerships") {
    const auto net = fixtures::batman();
    const auto all = top_partnerships(net.graph, net.actors);
    CHECK(all.rows.size() == 82);
    std::size_t threes = 0;
    for (const auto& row : all.rows) threes += row.value == 3;
    CHECK(threes == 6);
    CHECK(all.rows[0] == TableRow{"Christian Bale and Gary Oldman", 3});

    const auto top = top_partnerships(net.graph, net.actors, 6);
    CHECK(top.rows == std::vector<TableRow>(all.rows.begin(), all.rows.begin() + 6));
    CHECK(top_partnerships(net.graph, net.actors, 0).rows.empty());
}

TEST_CASE("partnership values equal edge multiplicities") {
    std::mt19937_64 rng(12);
    std::vector<MovieRecord> records;
    for (int i = 0; i < 400; ++i) {
        MovieRecord r{"m" + std::to_string(i), {}, 1990};
        for (int c = 0; c < 3; ++c) r.cast.push_back("p" + std::to_string(rng() % 40));
        records.push_back(std::move(r));
    }
    const auto net = build_graph(records);
    const auto full = top_partnerships(net.graph, net.actors);
    CHECK(full.rows.size() == net.graph.simple_edge_count());
    double total = 0;
    std::map<std::string, double> by_label;
    for (const auto& row : full.rows) {
        total += row.value;
        by_label[row.label] = row.value;
    }
    CHECK(total == static_cast<double>(net.graph.multi_edge_count()));
    for (ActorId u = 0; u < net.graph.node_count(); ++u)
        for (ActorId v : net.graph.neighbors(u))
            if (u < v)
                CHECK(by_label.at(net.actors.name(u) + " and " + net.actors.name(v)) ==
                      static_cast<double>(net.graph.multiplicity(u, v)));

    for (std::size_t limit : {1u, 5u, 17u, 100u}) {
        const auto part = top_partnerships(net.graph, net.actors, limit);
        CHECK(part.rows == std::vector<TableRow>(full.rows.begin(),
                                                 full.rows.begin() + static_cast<std::ptrdiff_t>(limit)));
    }
}

TEST_CASE("decade report") {
    const auto records = fixtures::batman_records();
    DecadeOptions options;
    options.top = 20;
    const auto report = decade_report(records, 2000, options);
    CHECK(report.movies == 2);
    CHECK(report.component_nodes == 13);
    CHECK(report.component_edges == 60);
    REQUIRE(report.degree.rows.size() == 13);
    CHECK(report.degree.rows[0].value == 1.0);
    CHECK(report.degree.decade == 2000);
    CHECK(report.betweenness.rows.size() == 13);
    CHECK(report.closeness.rows.size() == 13);
    // k clamps to the component size, so sampling covers every node.
    CHECK(report.betweenness.source == "betweenness-sampled k=13 seed=0");

    const auto again = decade_report(records, 2000, options);
    CHECK(again.betweenness == report.betweenness);
    CHECK(again.closeness == report.closeness);

    const auto empty = decade_report(records, 1950, options);
    CHECK(empty.movies == 0);
    CHECK(empty.component_nodes == 0);
    CHECK(empty.degree.rows.empty());
    CHECK_THROWS_AS(decade_report(records, 2005, options), std::invalid_argument);
}

TEST_CASE("table output") {
    const auto net = fixtures::batman();
    const auto table = movies_per_actor(net.graph, net.actors, 2);
    std::ostringstream tsv;
    write_tsv(tsv, table);
    CHECK(tsv.str() == "rank\tlabel\tvalue\n1\tChristian Bale\t3\n2\tGary Oldman\t3\n");

    const auto json = to_json(table);
    CHECK(table_from_json(json) == table);

    RankedTable scores;
    scores.title = "x";
    scores.decade = 1990;
    scores.rows = {{"a", 0.1 + 0.2}, {"b", 1e-05}};
    CHECK(table_from_json(to_json(scores)) == scores);
    CHECK(format_value(scores, 0.5) == "0.5");
    CHECK(format_value(table, 3.0) == "3");

    std::ostringstream tex;
    const std::vector<RankedTable> side{table, scores};
    write_longtable(tex, side);
    CHECK(tex.str() ==
          "1\t&\tChristian Bale\t&\t3\t&\ta\t&\t0.30000000000000004\t\\\\\n"
          "2\t&\tGary Oldman\t&\t3\t&\tb\t&\t1e-05\t\\\\\n");
}
