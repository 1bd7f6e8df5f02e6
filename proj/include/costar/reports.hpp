#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "costar/centrality.hpp"
#include "costar/graph.hpp"
#include "costar/ingest.hpp"

namespace costar {

struct TableRow {
    std::string label;
    double value = 0.0;

    bool operator==(const TableRow&) const = default;
};

/// Rows sorted by descending value, ties by ascending label.
struct RankedTable {
    std::string title;
    std::string source;        // what produced the values
    std::string graph;         // description of the graph used
    std::optional<int> decade;
    bool integral = false;     // values are counts
    std::vector<TableRow> rows;

    bool operator==(const RankedTable&) const = default;
};

constexpr std::size_t all_rows = std::numeric_limits<std::size_t>::max();

/// Distinct movie titles over each actor's incident edges.
RankedTable movies_per_actor(const CoStarGraph& g, const ActorTable& actors,
                             std::size_t limit = all_rows);

/// One row per adjacent pair, "<A> and <B>" with A the smaller ActorId,
/// valued by multiplicity. Only the top `limit` rows (plus nothing else) are
/// materialised.
RankedTable top_partnerships(const CoStarGraph& g, const ActorTable& actors,
                             std::size_t limit = all_rows);

/// Table from a centrality vector; closeness tables carry the score.
RankedTable centrality_table(const CentralityVector& vec, const ActorTable& actors,
                             std::size_t limit = all_rows);

struct DecadeReport {
    int decade = 0;
    std::size_t movies = 0;
    std::size_t component_nodes = 0;
    std::size_t component_edges = 0;
    RankedTable degree;
    RankedTable betweenness;
    RankedTable closeness;
};

struct DecadeOptions {
    std::size_t k = 1000;             // clamped to the component size
    std::uint64_t seed = 0;
    std::size_t closeness_limit = 1000;
    std::size_t top = 20;
    unsigned workers = 1;
};

/// filter_by_decade -> build_graph -> largest_component -> degree,
/// betweenness_sampled and closeness_top over the betweenness ranking.
/// Throws std::invalid_argument unless decade is a multiple of 10.
DecadeReport decade_report(std::span<const MovieRecord> records, int decade,
                           const DecadeOptions& options);

/// rank, label, value.
void write_tsv(std::ostream& out, const RankedTable& table, std::size_t top = all_rows);
std::string to_json(const RankedTable& table, std::size_t top = all_rows);
RankedTable table_from_json(const std::string& text);

/// Rows of several tables side by side, one LaTeX longtable line per rank:
/// "1\t&\tA\t&\t703\t&\tB\t&\t292\t\\\\".
void write_longtable(std::ostream& out, std::span<const RankedTable> tables,
                     std::size_t top = all_rows);

/// Value text: integer form for count tables, shortest round-trip otherwise.
std::string format_value(const RankedTable& table, double value);

}  // namespace costar
