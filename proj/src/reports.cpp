#include "costar/reports.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <unordered_map>

#include "costar/components.hpp"
#include "costar/format.hpp"
#include "json.hpp"

namespace costar {

namespace {

bool row_before(const TableRow& a, const TableRow& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.label < b.label;
}

void sort_and_truncate(RankedTable& table, std::size_t limit) {
    const std::size_t keep = std::min(limit, table.rows.size());
    std::partial_sort(table.rows.begin(), table.rows.begin() + static_cast<std::ptrdiff_t>(keep),
                      table.rows.end(), row_before);
    table.rows.resize(keep);
}

std::string describe(const CoStarGraph& g) {
    return std::to_string(g.node_count()) + " nodes, " + std::to_string(g.simple_edge_count()) +
           " edges";
}

}  // namespace

RankedTable movies_per_actor(const CoStarGraph& g, const ActorTable& actors, std::size_t limit) {
    // Titles compare as strings: two records sharing a title count once.
    std::unordered_map<std::string_view, std::uint32_t> title_ids;
    std::vector<std::uint32_t> title_of(g.movie_count());
    for (MovieId m = 0; m < g.movie_count(); ++m) {
        auto [it, inserted] =
            title_ids.try_emplace(g.movie_title(m), static_cast<std::uint32_t>(title_ids.size()));
        title_of[m] = it->second;
    }

    RankedTable table;
    table.title = "Movies per actor";
    table.source = "distinct titles on incident edges";
    table.graph = describe(g);
    table.integral = true;

    std::vector<std::uint32_t> seen;
    for (ActorId v = 0; v < g.node_count(); ++v) {
        if (g.degree(v) == 0) continue;
        seen.clear();
        for (EdgeId e : g.incident_edges(v))
            for (MovieId m : g.edge_movies(e)) seen.push_back(title_of[m]);
        std::sort(seen.begin(), seen.end());
        const auto distinct = std::unique(seen.begin(), seen.end()) - seen.begin();
        table.rows.push_back({actors.name(v), static_cast<double>(distinct)});
    }
    sort_and_truncate(table, limit);
    return table;
}

RankedTable top_partnerships(const CoStarGraph& g, const ActorTable& actors, std::size_t limit) {
    struct Pair {
        std::size_t count;
        ActorId u;
        ActorId v;
    };
    std::vector<Pair> pairs;
    pairs.reserve(g.simple_edge_count());
    for (ActorId u = 0; u < g.node_count(); ++u) {
        auto adj = g.neighbors(u);
        auto edges = g.incident_edges(u);
        for (std::size_t s = 0; s < adj.size(); ++s)
            if (adj[s] > u) pairs.push_back({g.edge_multiplicity(edges[s]), u, adj[s]});
    }

    // Only pairs at or above the limit-th largest count can make the table;
    // labels are built for those alone.
    if (limit < pairs.size()) {
        std::vector<std::size_t> counts(pairs.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) counts[i] = pairs[i].count;
        auto nth = counts.begin() + static_cast<std::ptrdiff_t>(limit == 0 ? 0 : limit - 1);
        std::nth_element(counts.begin(), nth, counts.end(), std::greater<>());
        const std::size_t threshold = limit == 0 ? std::numeric_limits<std::size_t>::max() : *nth;
        std::erase_if(pairs, [&](const Pair& p) { return p.count < threshold; });
    }

    RankedTable table;
    table.title = "Movies per acting partnership";
    table.source = "edge multiplicity";
    table.graph = describe(g);
    table.integral = true;
    table.rows.reserve(pairs.size());
    for (const auto& p : pairs)
        table.rows.push_back(
            {actors.name(p.u) + " and " + actors.name(p.v), static_cast<double>(p.count)});
    sort_and_truncate(table, limit);
    return table;
}

RankedTable centrality_table(const CentralityVector& vec, const ActorTable& actors,
                             std::size_t limit) {
    RankedTable table;
    table.title = std::string(to_string(vec.measure)) + " centrality";
    table.source = std::string(to_string(vec.measure));
    if (vec.k) table.source += " k=" + std::to_string(*vec.k);
    if (vec.seed) table.source += " seed=" + std::to_string(*vec.seed);
    table.graph = std::to_string(vec.n) + " nodes";
    const auto order = vec.ranking(actors);
    const std::size_t keep = std::min(limit, order.size());
    for (std::size_t r = 0; r < keep; ++r)
        table.rows.push_back({actors.name(vec.actors[order[r]]), vec.scores[order[r]]});
    return table;
}

DecadeReport decade_report(std::span<const MovieRecord> records, int decade,
                           const DecadeOptions& options) {
    DecadeReport report;
    report.decade = decade;
    const auto movies = filter_by_decade(records, decade);
    report.movies = movies.size();

    auto label = [&](RankedTable& t, const char* title) {
        t.title = title;
        t.decade = decade;
    };
    label(report.degree, "degree centrality");
    label(report.betweenness, "betweenness centrality");
    label(report.closeness, "closeness centrality");

    const Network full = build_graph(movies);
    if (full.graph.empty()) return report;

    const Network net = largest_component(full);
    const auto& g = net.graph;
    report.component_nodes = g.node_count();
    report.component_edges = g.simple_edge_count();

    const auto degree = degree_centrality(g);
    const std::size_t k = std::min(options.k, g.node_count());
    const auto between = betweenness_sampled(g, k, options.seed, options.workers);

    std::vector<ActorId> candidates;
    for (std::size_t i : between.ranking(net.actors)) candidates.push_back(between.actors[i]);
    const auto close = closeness_top(g, candidates, options.closeness_limit, options.workers);

    auto fill = [&](RankedTable& t, const CentralityVector& v) {
        auto built = centrality_table(v, net.actors, options.top);
        built.title = t.title;
        built.decade = decade;
        t = std::move(built);
    };
    fill(report.degree, degree);
    fill(report.betweenness, between);
    fill(report.closeness, close);
    return report;
}

std::string format_value(const RankedTable& table, double value) {
    if (table.integral && std::isfinite(value))
        return std::to_string(static_cast<long long>(std::llround(value)));
    return format_double(value);
}

void write_tsv(std::ostream& out, const RankedTable& table, std::size_t top) {
    out << "rank\tlabel\tvalue\n";
    const std::size_t rows = std::min(top, table.rows.size());
    for (std::size_t r = 0; r < rows; ++r)
        out << r + 1 << '\t' << table.rows[r].label << '\t' << format_value(table, table.rows[r].value)
            << '\n';
}

std::string to_json(const RankedTable& table, std::size_t top) {
    nlohmann::ordered_json j;
    j["title"] = table.title;
    j["source"] = table.source;
    j["graph"] = table.graph;
    j["decade"] = table.decade ? nlohmann::ordered_json(*table.decade) : nlohmann::ordered_json();
    j["integral"] = table.integral;
    auto rows = nlohmann::ordered_json::array();
    const std::size_t count = std::min(top, table.rows.size());
    for (std::size_t r = 0; r < count; ++r) {
        nlohmann::ordered_json row;
        row["rank"] = r + 1;
        row["label"] = table.rows[r].label;
        if (table.integral)
            row["value"] = static_cast<long long>(std::llround(table.rows[r].value));
        else
            row["value"] = table.rows[r].value;
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j.dump();
}

RankedTable table_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    RankedTable table;
    table.title = j.at("title").get<std::string>();
    table.source = j.at("source").get<std::string>();
    table.graph = j.at("graph").get<std::string>();
    if (!j.at("decade").is_null()) table.decade = j.at("decade").get<int>();
    table.integral = j.at("integral").get<bool>();
    for (const auto& row : j.at("rows"))
        table.rows.push_back({row.at("label").get<std::string>(), row.at("value").get<double>()});
    return table;
}

void write_longtable(std::ostream& out, std::span<const RankedTable> tables, std::size_t top) {
    std::size_t rows = 0;
    for (const auto& t : tables) rows = std::max(rows, t.rows.size());
    rows = std::min(rows, top);
    for (std::size_t r = 0; r < rows; ++r) {
        out << r + 1;
        for (const auto& t : tables) {
            if (r < t.rows.size())
                out << "\t&\t" << t.rows[r].label << "\t&\t" << format_value(t, t.rows[r].value);
            else
                out << "\t&\t\t&\t";
        }
        out << "\t\\\\\n";
    }
}

}  // namespace costar
