#include "costar/cli.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "costar/centrality.hpp"
#include "costar/components.hpp"
#include "costar/format.hpp"
#include "costar/graph.hpp"
#include "costar/ingest.hpp"
#include "costar/parallel.hpp"
#include "costar/paths.hpp"
#include "costar/reports.hpp"
#include "json.hpp"

namespace costar::cli {

namespace {

using ojson = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void report_time(std::ostream& err, const Stopwatch& watch) {
    err << "Time taken = " << format_double(watch.seconds()) << " seconds\n";
}

bool record_command(const std::string& c) {
    return c == "stats" || c == "hist-years" || c == "hist-cast" || c == "top-cast" ||
           c == "build" || c == "decade-report";
}

CleanResult load_clean(const RunConfig& cfg) {
    if (cfg.input.empty()) throw UsageError("an input file is required");
    return clean(parse_records_file(cfg.input, cfg.workers));
}

Network load_network(const RunConfig& cfg) {
    if (cfg.snapshot) return load_snapshot_file(*cfg.snapshot);
    return build_graph(load_clean(cfg).records);
}

ActorId require_actor(const ActorTable& actors, const std::string& name) {
    auto id = actors.find(name);
    if (!id) throw std::runtime_error("actor not in the network: " + name);
    return *id;
}

void write_histogram(std::ostream& out, const Histogram& h, Format format, const char* key) {
    if (format == Format::json) {
        auto bins = ojson::array();
        for (const auto& [k, c] : h.bins) bins.push_back(ojson::array({k, c}));
        out << ojson{{"key", key}, {"bins", bins}}.dump() << '\n';
        return;
    }
    out << key << "\tcount\n";
    for (const auto& [k, c] : h.bins) out << k << '\t' << c << '\n';
}

void emit_table(std::ostream& out, const RankedTable& table, Format format, std::size_t top) {
    switch (format) {
        case Format::json: out << to_json(table, top) << '\n'; break;
        case Format::longtable: {
            std::vector<RankedTable> one{table};
            write_longtable(out, one, top);
            break;
        }
        case Format::table:
            for (std::size_t r = 0; r < std::min(top, table.rows.size()); ++r)
                out << table.rows[r].label << " : " << format_value(table, table.rows[r].value)
                    << '\n';
            break;
        case Format::tsv: write_tsv(out, table, top); break;
    }
}

void emit_centrality(std::ostream& out, const CentralityVector& vec, const ActorTable& actors,
                     Format format, std::size_t top) {
    switch (format) {
        case Format::json: out << to_json(vec, actors, top) << '\n'; break;
        case Format::tsv: write_tsv(out, vec, actors, top); break;
        default: emit_table(out, centrality_table(vec, actors, top), format, top); break;
    }
}

int cmd_stats(const RunConfig& cfg, std::ostream& out) {
    const auto report = load_clean(cfg).report;
    if (cfg.format == Format::json) {
        out << to_json(report) << '\n';
    } else if (cfg.format == Format::table) {
        out << "Movies in dataset          = " << report.raw_count << '\n'
            << "Removed with no cast       = " << report.dropped_no_cast << '\n'
            << "Removed with no year       = " << report.dropped_no_year << '\n'
            << "Malformed lines skipped    = " << report.malformed_lines << '\n'
            << "Movies in clean dataset    = " << report.retained << '\n';
    } else {
        out << "raw_count\t" << report.raw_count << '\n'
            << "dropped_no_cast\t" << report.dropped_no_cast << '\n'
            << "dropped_no_year\t" << report.dropped_no_year << '\n'
            << "retained\t" << report.retained << '\n'
            << "malformed_lines\t" << report.malformed_lines << '\n';
    }
    return 0;
}

int cmd_top_cast(const RunConfig& cfg, std::ostream& out) {
    const auto top = top_by_cast_size(load_clean(cfg).records, cfg.top);
    if (cfg.format == Format::json) {
        auto rows = ojson::array();
        for (std::size_t i = 0; i < top.size(); ++i)
            rows.push_back({{"rank", i + 1}, {"title", top[i].first}, {"cast_size", top[i].second}});
        out << ojson{{"rows", rows}}.dump() << '\n';
    } else if (cfg.format == Format::table) {
        for (const auto& [title, size] : top) out << title << " = " << size << '\n';
    } else {
        out << "rank\ttitle\tcast_size\n";
        for (std::size_t i = 0; i < top.size(); ++i)
            out << i + 1 << '\t' << top[i].first << '\t' << top[i].second << '\n';
    }
    return 0;
}

int cmd_build(const RunConfig& cfg, std::ostream& out) {
    const auto net = build_graph(load_clean(cfg).records);
    if (cfg.output) save_snapshot_file(*cfg.output, net);
    const auto& g = net.graph;
    const bool connected = is_connected(g);
    if (cfg.format == Format::json) {
        out << ojson{{"nodes", g.node_count()},
                     {"multi_edges", g.multi_edge_count()},
                     {"simple_edges", g.simple_edge_count()},
                     {"connected", connected}}
                   .dump()
            << '\n';
    } else {
        out << "Number of nodes in this multigraph = " << g.node_count() << '\n'
            << "Number of edges in this multigraph = " << g.multi_edge_count() << '\n'
            << "Number of nodes in simple graph  = " << g.node_count() << '\n'
            << "Number of edges in simple graph  = " << g.simple_edge_count() << '\n'
            << "Graph Connected?                 = " << (connected ? "True" : "False") << '\n';
    }
    return 0;
}

int cmd_components(const RunConfig& cfg, std::ostream& out) {
    const auto net = load_network(cfg);
    const auto labeling = connected_components(net.graph);
    std::size_t largest_edges = 0;
    std::size_t largest_nodes = 0;
    bool largest_connected = false;
    if (!net.graph.empty()) {
        const auto [sub, remap] = largest_component(net.graph);
        largest_nodes = sub.node_count();
        largest_edges = sub.simple_edge_count();
        largest_connected = is_connected(sub);
    }
    if (cfg.format == Format::json) {
        out << ojson{{"count", labeling.count()},
                     {"sizes", labeling.sizes},
                     {"largest", {{"nodes", largest_nodes}, {"edges", largest_edges}}}}
                   .dump()
            << '\n';
    } else {
        out << "Number of components = " << labeling.count() << '\n'
            << "Component sizes      = " << sizes_to_json(labeling) << '\n'
            << "Number of nodes in simple graph = " << largest_nodes << '\n'
            << "Number of edges in simple graph = " << largest_edges << '\n'
            << "Graph Connected?                = " << (largest_connected ? "True" : "False")
            << '\n';
    }
    return 0;
}

int cmd_path(const RunConfig& cfg, std::ostream& out) {
    if (cfg.actors.size() != 2) throw UsageError("path needs exactly two actor names");
    const auto net = load_network(cfg);
    const auto& u = cfg.actors[0];
    const auto& v = cfg.actors[1];
    const auto result = shortest_path(net.graph, net.actors, u, v);
    if (cfg.format == Format::json) {
        static const std::map<PathStatus, const char*> names = {
            {PathStatus::found, "found"},
            {PathStatus::not_in_network, "not-in-network"},
            {PathStatus::no_path, "no-path"}};
        auto hops = ojson::array();
        for (const auto& h : result.path.hops)
            hops.push_back({{"from", h.from}, {"movie", h.movie}, {"to", h.to}});
        out << ojson{{"from", u}, {"to", v}, {"status", names.at(result.status)}, {"hops", hops}}
                   .dump()
            << '\n';
    } else {
        write_path(out, result, u, v);
    }
    return 0;
}

int cmd_hops(const RunConfig& cfg, std::ostream& out) {
    if (cfg.actors.size() != 1) throw UsageError("hops needs one actor name");
    const auto net = load_network(cfg);
    const auto dist = hop_distribution(net.graph, require_actor(net.actors, cfg.actors[0]));
    if (cfg.format == Format::json) {
        out << ojson{{"actor", cfg.actors[0]}, {"counts", dist.counts}}.dump() << '\n';
    } else if (cfg.format == Format::table) {
        out << to_counter_string(dist) << '\n';
    } else {
        out << "distance\tcount\n";
        for (std::size_t d = 0; d < dist.counts.size(); ++d)
            out << d << '\t' << dist.counts[d] << '\n';
    }
    return 0;
}

int cmd_degree(const RunConfig& cfg, std::ostream& out) {
    const auto net = largest_component(load_network(cfg));
    const auto vec = degree_centrality(net.graph);
    if (cfg.actors.empty()) {
        emit_centrality(out, vec, net.actors, cfg.format, cfg.top);
        return 0;
    }
    if (cfg.format == Format::json) {
        auto rows = ojson::array();
        for (const auto& name : cfg.actors) {
            const auto id = require_actor(net.actors, name);
            rows.push_back({{"actor", name}, {"degree", net.graph.degree(id)}, {"score", vec.scores[id]}});
        }
        out << ojson{{"rows", rows}}.dump() << '\n';
        return 0;
    }
    if (cfg.format == Format::tsv) out << "actor\tdegree\tscore\n";
    for (const auto& name : cfg.actors) {
        const auto id = require_actor(net.actors, name);
        if (cfg.format == Format::tsv)
            out << name << '\t' << net.graph.degree(id) << '\t' << format_double(vec.scores[id]) << '\n';
        else
            out << name << " : " << net.graph.degree(id) << '\n';
    }
    return 0;
}

CentralityVector run_betweenness(const RunConfig& cfg, const CoStarGraph& g, std::ostream& err) {
    Stopwatch watch;
    CentralityVector vec;
    if (cfg.exact) {
        vec = betweenness_exact(g, cfg.workers);
    } else {
        std::size_t k = cfg.k;
        if (k > g.node_count()) {
            err << "note: --k " << k << " exceeds the " << g.node_count()
                << " nodes in the component; using k = " << g.node_count() << '\n';
            k = g.node_count();
        }
        vec = betweenness_sampled(g, k, cfg.seed, cfg.workers);
    }
    report_time(err, watch);
    return vec;
}

int cmd_betweenness(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto net = largest_component(load_network(cfg));
    const auto vec = run_betweenness(cfg, net.graph, err);
    emit_centrality(out, vec, net.actors, cfg.format, cfg.top);
    return 0;
}

int cmd_closeness(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto net = largest_component(load_network(cfg));
    std::vector<ActorId> candidates;
    std::size_t limit = cfg.candidates;
    if (!cfg.actors.empty()) {
        for (const auto& name : cfg.actors) candidates.push_back(require_actor(net.actors, name));
        limit = candidates.size();
    } else {
        const auto between = run_betweenness(cfg, net.graph, err);
        for (std::size_t i : between.ranking(net.actors)) candidates.push_back(between.actors[i]);
    }
    Stopwatch watch;
    const auto vec = closeness_top(net.graph, candidates, limit, cfg.workers);
    report_time(err, watch);
    emit_centrality(out, vec, net.actors, cfg.format, cfg.actors.empty() ? cfg.top : limit);
    return 0;
}

int cmd_sample_closeness(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto net = largest_component(load_network(cfg));
    std::size_t sample = cfg.sample;
    if (sample > net.graph.node_count()) {
        err << "note: --sample " << sample << " exceeds the " << net.graph.node_count()
            << " nodes in the component; sampling all of them\n";
        sample = net.graph.node_count();
    }
    Stopwatch watch;
    const auto stats = closeness_sample_stats(net.graph, sample, cfg.seed, cfg.workers);
    report_time(err, watch);
    if (cfg.format == Format::json) {
        out << ojson{{"sample_size", stats.sample_size()},
                     {"seed", cfg.seed},
                     {"mean", stats.mean},
                     {"sd", stats.stddev},
                     {"bin_edges", stats.bin_edges},
                     {"bin_counts", stats.bin_counts}}
                   .dump()
            << '\n';
        return 0;
    }
    out << "Mean = " << format_double(stats.mean) << '\n'
        << "SD   = " << format_double(stats.stddev) << '\n';
    out << "bin_low\tbin_high\tcount\n";
    for (std::size_t b = 0; b < stats.bin_counts.size(); ++b)
        out << format_double(stats.bin_edges[b]) << '\t' << format_double(stats.bin_edges[b + 1])
            << '\t' << stats.bin_counts[b] << '\n';
    return 0;
}

int cmd_decade_report(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto records = load_clean(cfg).records;
    std::vector<int> decades;
    if (cfg.decade) {
        decades.push_back(*cfg.decade);
    } else {
        for (const auto& [year, count] : movies_per_year(records).bins)
            if (decades.empty() || decades.back() != decade_of(year))
                decades.push_back(decade_of(year));
    }

    DecadeOptions options;
    options.k = cfg.k;
    options.seed = cfg.seed;
    options.closeness_limit = cfg.candidates;
    options.top = cfg.top_given ? cfg.top : 20;
    options.workers = cfg.workers;

    auto reports = ojson::array();
    for (int decade : decades) {
        Stopwatch watch;
        const auto report = decade_report(records, decade, options);
        report_time(err, watch);
        const std::vector<RankedTable> tables{report.degree, report.betweenness, report.closeness};
        if (cfg.format == Format::json) {
            auto entry = ojson{{"decade", decade},
                               {"movies", report.movies},
                               {"component_nodes", report.component_nodes},
                               {"component_edges", report.component_edges}};
            for (const auto& t : tables) entry[t.title] = ojson::parse(to_json(t));
            reports.push_back(std::move(entry));
            continue;
        }
        out << "# decade=" << decade << " movies=" << report.movies
            << " component_nodes=" << report.component_nodes
            << " component_edges=" << report.component_edges << '\n';
        if (cfg.format == Format::longtable) {
            write_longtable(out, tables, options.top);
        } else {
            for (const auto& t : tables) {
                out << "## " << t.title << '\n';
                emit_table(out, t, cfg.format, options.top);
            }
        }
    }
    if (cfg.format == Format::json) out << reports.dump() << '\n';
    return 0;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto& c = cfg.command;
    if (c == "stats") return cmd_stats(cfg, out);
    if (c == "hist-years") {
        write_histogram(out, movies_per_year(load_clean(cfg).records), cfg.format, "year");
        return 0;
    }
    if (c == "hist-cast") {
        write_histogram(out, cast_size_histogram(load_clean(cfg).records), cfg.format, "cast_size");
        return 0;
    }
    if (c == "top-cast") return cmd_top_cast(cfg, out);
    if (c == "build") return cmd_build(cfg, out);
    if (c == "components") return cmd_components(cfg, out);
    if (c == "top-actors") {
        const auto net = load_network(cfg);
        emit_table(out, movies_per_actor(net.graph, net.actors, cfg.top), cfg.format, cfg.top);
        return 0;
    }
    if (c == "top-pairs") {
        const auto net = load_network(cfg);
        emit_table(out, top_partnerships(net.graph, net.actors, cfg.top), cfg.format, cfg.top);
        return 0;
    }
    if (c == "path") return cmd_path(cfg, out);
    if (c == "hops") return cmd_hops(cfg, out);
    if (c == "degree") return cmd_degree(cfg, out);
    if (c == "betweenness") return cmd_betweenness(cfg, out, err);
    if (c == "closeness") return cmd_closeness(cfg, out, err);
    if (c == "sample-closeness") return cmd_sample_closeness(cfg, out, err);
    if (c == "decade-report") return cmd_decade_report(cfg, out, err);
    throw UsageError("unknown command: " + c);
}

}  // namespace

const std::vector<std::string>& commands() {
    static const std::vector<std::string> names = {
        "stats",      "hist-years", "hist-cast",   "top-cast",    "build",
        "components", "top-actors", "top-pairs",   "path",        "hops",
        "degree",     "betweenness", "closeness",  "sample-closeness", "decade-report"};
    return names;
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out,
                                    std::ostream& err, int& exit_code) {
    CLI::App app{"Co-star network analysis: ingest movie casts, build the actor graph, and rank "
                 "actors by degree, betweenness and closeness centrality."};
    app.name("costar");

    RunConfig cfg;
    cfg.workers = default_workers();
    std::string format = "tsv";
    std::vector<std::string> positionals;

    std::string command_list;
    for (const auto& c : commands()) command_list += (command_list.empty() ? "" : ", ") + c;

    app.add_option("command", cfg.command, "One of: " + command_list)->required();
    app.add_option("args", positionals,
                   "Input file, then actor names (with --snapshot the input is omitted)");
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"tsv", "json", "table", "longtable"}));
    auto* top = app.add_option("--top", cfg.top, "Rows to print");
    app.add_option("--k", cfg.k, "Betweenness pivot count")->check(CLI::PositiveNumber);
    app.add_flag("--exact", cfg.exact, "Exact betweenness (every node is a pivot)");
    app.add_option("--seed", cfg.seed, "Random seed");
    app.add_option("--workers", cfg.workers, "Worker threads (default: COSTAR_WORKERS or cores)")
        ->check(CLI::PositiveNumber);
    app.add_option("--decade", cfg.decade, "Decade for decade-report, e.g. 1990");
    app.add_option("--candidates", cfg.candidates,
                   "Closeness: number of top-betweenness actors to score")
        ->check(CLI::PositiveNumber);
    app.add_option("--sample", cfg.sample, "sample-closeness: actors to sample")
        ->check(CLI::PositiveNumber);
    app.add_option("--snapshot", cfg.snapshot, "Load a prebuilt graph snapshot");
    app.add_option("-o,--output", cfg.output, "build: write the graph snapshot here");

    try {
        app.parse(argc, argv);
        if (std::find(commands().begin(), commands().end(), cfg.command) == commands().end())
            throw CLI::ValidationError("command", "unknown command '" + cfg.command + "'");
        if (cfg.snapshot && record_command(cfg.command))
            throw CLI::ValidationError("--snapshot", "'" + cfg.command + "' reads the dataset, not a snapshot");
        if (cfg.exact && app.count("--k"))
            throw CLI::ValidationError("--exact", "--exact and --k are mutually exclusive");
        if (cfg.decade && *cfg.decade % 10 != 0)
            throw CLI::ValidationError("--decade", "decade must be a multiple of 10");
    } catch (const CLI::ParseError& e) {
        exit_code = app.exit(e, out, err);
        return std::nullopt;
    }

    cfg.top_given = top->count() > 0;
    cfg.format = format == "json"        ? Format::json
                 : format == "table"     ? Format::table
                 : format == "longtable" ? Format::longtable
                                         : Format::tsv;
    std::size_t first_actor = 0;
    if (!cfg.snapshot && !positionals.empty()) {
        cfg.input = positionals.front();
        first_actor = 1;
    }
    cfg.actors.assign(positionals.begin() + static_cast<std::ptrdiff_t>(first_actor), positionals.end());
    return cfg;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(config, out, err);
    } catch (const UsageError& e) {
        err << "costar: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "costar: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace costar::cli
