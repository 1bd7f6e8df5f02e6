#include "costar/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace costar {

ActorId ActorTable::intern(std::string_view name) {
    auto [it, inserted] = ids_.try_emplace(std::string(name), static_cast<ActorId>(names_.size()));
    if (inserted) {
        if (names_.size() >= std::numeric_limits<ActorId>::max())
            throw std::length_error("actor table full");
        names_.push_back(it->first);
    }
    return it->second;
}

std::optional<ActorId> ActorTable::find(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

ActorTable ActorTable::subset(std::span<const ActorId> old_ids) const {
    ActorTable out;
    out.names_.reserve(old_ids.size());
    for (ActorId id : old_ids) out.intern(name(id));
    return out;
}

// Turns a list of (u < v, movie) triples into the compressed layout.
class GraphAssembler {
public:
    struct Entry {
        ActorId u;
        ActorId v;
        MovieId movie;
    };

    static CoStarGraph assemble(std::size_t n, std::vector<Entry>& entries,
                                std::shared_ptr<const std::vector<std::string>> titles) {
        std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
            return std::tie(a.u, a.v, a.movie) < std::tie(b.u, b.v, b.movie);
        });

        CoStarGraph g;
        g.titles_ = std::move(titles);
        g.edge_movies_.reserve(entries.size());
        std::vector<std::pair<ActorId, ActorId>> pairs;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const auto& e = entries[i];
            if (i == 0 || e.u != entries[i - 1].u || e.v != entries[i - 1].v) {
                if (!pairs.empty()) g.edge_offsets_.push_back(g.edge_movies_.size());
                pairs.emplace_back(e.u, e.v);
            }
            g.edge_movies_.push_back(e.movie);
        }
        g.edge_offsets_.push_back(g.edge_movies_.size());
        if (pairs.empty()) g.edge_offsets_.assign(1, 0);
        if (pairs.size() > std::numeric_limits<EdgeId>::max())
            throw std::length_error("too many edges");

        fill_adjacency(g, n, pairs);
        return g;
    }

    static std::shared_ptr<const std::vector<std::string>> titles_of(const CoStarGraph& g) {
        return g.titles_;
    }

    // pairs must be sorted by (u, v) with u < v; pair i is EdgeId i.
    static void fill_adjacency(CoStarGraph& g, std::size_t n,
                               const std::vector<std::pair<ActorId, ActorId>>& pairs) {
        g.offsets_.assign(n + 1, 0);
        for (const auto& [u, v] : pairs) {
            ++g.offsets_[u + 1];
            ++g.offsets_[v + 1];
        }
        for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];

        g.neighbors_.resize(2 * pairs.size());
        g.slot_edges_.resize(2 * pairs.size());
        std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
        // Sorted (u, v) order leaves every adjacency list sorted: a node first
        // receives its smaller neighbors, then its larger ones.
        for (std::size_t e = 0; e < pairs.size(); ++e) {
            const auto [u, v] = pairs[e];
            g.neighbors_[cursor[u]] = v;
            g.slot_edges_[cursor[u]++] = static_cast<EdgeId>(e);
            g.neighbors_[cursor[v]] = u;
            g.slot_edges_[cursor[v]++] = static_cast<EdgeId>(e);
        }
    }
};

CoStarGraph::CoStarGraph()
    : offsets_(1, 0),
      edge_offsets_(1, 0),
      titles_(std::make_shared<const std::vector<std::string>>()) {}

std::span<const ActorId> CoStarGraph::neighbors(ActorId v) const {
    if (v >= node_count()) throw std::out_of_range("actor id out of range");
    return std::span<const ActorId>(neighbors_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::span<const EdgeId> CoStarGraph::incident_edges(ActorId v) const {
    if (v >= node_count()) throw std::out_of_range("actor id out of range");
    return std::span<const EdgeId>(slot_edges_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::span<const MovieId> CoStarGraph::edge_movies(EdgeId e) const {
    if (e >= simple_edge_count()) throw std::out_of_range("edge id out of range");
    return std::span<const MovieId>(edge_movies_)
        .subspan(edge_offsets_[e], edge_offsets_[e + 1] - edge_offsets_[e]);
}

std::optional<EdgeId> CoStarGraph::find_edge(ActorId u, ActorId v) const {
    if (u == v) throw std::invalid_argument("edge query requires two distinct actors");
    auto adj = neighbors(u);
    if (v >= node_count()) throw std::out_of_range("actor id out of range");
    auto it = std::lower_bound(adj.begin(), adj.end(), v);
    if (it == adj.end() || *it != v) return std::nullopt;
    return incident_edges(u)[static_cast<std::size_t>(it - adj.begin())];
}

std::vector<std::string_view> CoStarGraph::edge_titles(ActorId u, ActorId v) const {
    std::vector<std::string_view> out;
    if (auto e = find_edge(u, v))
        for (MovieId m : edge_movies(*e)) out.push_back(movie_title(m));
    return out;
}

std::size_t CoStarGraph::multiplicity(ActorId u, ActorId v) const {
    auto e = find_edge(u, v);
    return e ? edge_multiplicity(*e) : 0;
}

CoStarGraph CoStarGraph::from_edges(std::size_t n,
                                    std::span<const std::pair<ActorId, ActorId>> edges) {
    auto titles = std::make_shared<std::vector<std::string>>();
    std::vector<GraphAssembler::Entry> entries;
    entries.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
        titles->push_back(std::to_string(i));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        entries.push_back({u, v, static_cast<MovieId>(i)});
    }
    return GraphAssembler::assemble(n, entries, std::move(titles));
}

bool CoStarGraph::operator==(const CoStarGraph& other) const {
    return offsets_ == other.offsets_ && neighbors_ == other.neighbors_ &&
           slot_edges_ == other.slot_edges_ && edge_offsets_ == other.edge_offsets_ &&
           edge_movies_ == other.edge_movies_ && *titles_ == *other.titles_;
}

Network build_graph(std::span<const MovieRecord> records) {
    if (records.size() > std::numeric_limits<MovieId>::max())
        throw std::length_error("too many records");

    Network net;
    auto titles = std::make_shared<std::vector<std::string>>();
    titles->reserve(records.size());
    std::vector<GraphAssembler::Entry> entries;
    std::vector<ActorId> ids;
    std::vector<std::string_view> distinct;

    for (std::size_t r = 0; r < records.size(); ++r) {
        const auto& rec = records[r];
        titles->push_back(rec.title);
        if (rec.cast.size() < 2) continue;

        distinct.assign(rec.cast.begin(), rec.cast.end());
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        if (distinct.size() < 2) continue;

        ids.clear();
        for (const auto& name : rec.cast) ids.push_back(net.actors.intern(name));
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

        const auto movie = static_cast<MovieId>(r);
        for (std::size_t i = 0; i + 1 < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j)
                entries.push_back({ids[i], ids[j], movie});
    }

    net.graph = GraphAssembler::assemble(net.actors.size(), entries, std::move(titles));
    return net;
}

std::pair<CoStarGraph, std::vector<ActorId>> subgraph(const CoStarGraph& g,
                                                      std::span<const ActorId> nodes) {
    std::vector<ActorId> old_ids(nodes.begin(), nodes.end());
    std::sort(old_ids.begin(), old_ids.end());
    old_ids.erase(std::unique(old_ids.begin(), old_ids.end()), old_ids.end());
    if (!old_ids.empty() && old_ids.back() >= g.node_count())
        throw std::out_of_range("subgraph node out of range");

    constexpr ActorId absent = std::numeric_limits<ActorId>::max();
    std::vector<ActorId> new_id(g.node_count(), absent);
    for (std::size_t i = 0; i < old_ids.size(); ++i) new_id[old_ids[i]] = static_cast<ActorId>(i);

    std::vector<GraphAssembler::Entry> entries;
    for (ActorId nu = 0; nu < old_ids.size(); ++nu) {
        const ActorId u = old_ids[nu];
        auto adj = g.neighbors(u);
        auto edges = g.incident_edges(u);
        for (std::size_t s = 0; s < adj.size(); ++s) {
            const ActorId nv = new_id[adj[s]];
            if (nv == absent || nv <= nu) continue;
            for (MovieId m : g.edge_movies(edges[s])) entries.push_back({nu, nv, m});
        }
    }

    // Title table is immutable and shared with the parent graph.
    CoStarGraph sub =
        GraphAssembler::assemble(old_ids.size(), entries, GraphAssembler::titles_of(g));
    return {std::move(sub), std::move(old_ids)};
}

Network subnetwork(const Network& net, std::span<const ActorId> nodes,
                   std::vector<ActorId>* remap) {
    auto [g, old_ids] = subgraph(net.graph, nodes);
    Network out{std::move(g), net.actors.subset(old_ids)};
    if (remap) *remap = std::move(old_ids);
    return out;
}

}  // namespace costar
