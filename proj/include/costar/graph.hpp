#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "costar/ingest.hpp"

namespace costar {

/// Dense actor index, assigned from 0 in first-appearance order.
using ActorId = std::uint32_t;
/// Index of the record that produced an edge label.
using MovieId = std::uint32_t;
/// Index of one undirected adjacent pair.
using EdgeId = std::uint32_t;

/// Bidirectional name <-> id mapping. Names compare by exact bytes.
class ActorTable {
public:
    /// Returns the id of `name`, assigning the next id on first sight.
    ActorId intern(std::string_view name);
    std::optional<ActorId> find(std::string_view name) const;
    const std::string& name(ActorId id) const { return names_.at(id); }
    std::size_t size() const { return names_.size(); }
    std::span<const std::string> names() const { return names_; }

    /// Table for a reindexed graph: new id i is old id old_ids[i].
    ActorTable subset(std::span<const ActorId> old_ids) const;

    bool operator==(const ActorTable& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, ActorId> ids_;
};

/// Undirected co-star graph in compressed adjacency form.
///
/// Every adjacent pair is one EdgeId carrying the ordered list of movies that
/// joined the pair (the multigraph view); the adjacency alone is the simple
/// graph view. Adjacency lists are sorted by neighbor id and both endpoints of
/// a pair share the same EdgeId, so multiplicity and titles are symmetric.
class CoStarGraph {
public:
    CoStarGraph();

    std::size_t node_count() const { return offsets_.size() - 1; }
    std::size_t simple_edge_count() const { return edge_offsets_.size() - 1; }
    std::size_t multi_edge_count() const { return edge_movies_.size(); }
    bool empty() const { return node_count() == 0; }

    /// Throws std::out_of_range for v >= node_count().
    std::span<const ActorId> neighbors(ActorId v) const;
    /// EdgeIds parallel to neighbors(v).
    std::span<const EdgeId> incident_edges(ActorId v) const;
    std::size_t degree(ActorId v) const { return neighbors(v).size(); }

    std::span<const MovieId> edge_movies(EdgeId e) const;
    std::size_t edge_multiplicity(EdgeId e) const { return edge_movies(e).size(); }

    /// Throws std::invalid_argument when u == v.
    std::optional<EdgeId> find_edge(ActorId u, ActorId v) const;
    std::vector<std::string_view> edge_titles(ActorId u, ActorId v) const;
    std::size_t multiplicity(ActorId u, ActorId v) const;

    const std::string& movie_title(MovieId m) const { return titles_->at(m); }
    std::size_t movie_count() const { return titles_->size(); }

    /// Builds from plain pairs; pair i becomes a movie titled std::to_string(i).
    /// Self-loops are dropped, repeated pairs raise the multiplicity.
    static CoStarGraph from_edges(std::size_t n,
                                  std::span<const std::pair<ActorId, ActorId>> edges);
    static CoStarGraph from_edges(std::size_t n,
                                  std::initializer_list<std::pair<ActorId, ActorId>> edges) {
        return from_edges(n, std::span<const std::pair<ActorId, ActorId>>(edges.begin(), edges.size()));
    }

    bool operator==(const CoStarGraph& other) const;

private:
    friend class GraphAssembler;
    friend void save_snapshot(std::ostream&, const CoStarGraph&, const ActorTable&);
    friend std::pair<CoStarGraph, ActorTable> load_snapshot(std::istream&);

    std::vector<std::uint64_t> offsets_;       // n + 1
    std::vector<ActorId> neighbors_;           // 2 * simple edges
    std::vector<EdgeId> slot_edges_;           // parallel to neighbors_
    std::vector<std::uint64_t> edge_offsets_;  // simple edges + 1
    std::vector<MovieId> edge_movies_;         // multi edges, record order per pair
    std::shared_ptr<const std::vector<std::string>> titles_;
};

struct Network {
    CoStarGraph graph;
    ActorTable actors;
};

/// Builds the co-star graph from cleaned records. Each unordered pair of
/// distinct names in a cast adds that record to the pair's movie list.
/// Duplicate names in a cast collapse to one node; casts with fewer than two
/// distinct names add no nodes.
Network build_graph(std::span<const MovieRecord> records);

/// Induced subgraph on `nodes` (any order, duplicates ignored). New ids follow
/// ascending old id; the returned vector maps new id -> old id.
std::pair<CoStarGraph, std::vector<ActorId>> subgraph(const CoStarGraph& g,
                                                      std::span<const ActorId> nodes);

/// Subgraph plus the matching reindexed actor table.
Network subnetwork(const Network& net, std::span<const ActorId> nodes,
                   std::vector<ActorId>* remap = nullptr);

/// Binary snapshot. Layout: magic "COSTARGR", u32 version, then u64 counts and
/// little-endian arrays. save -> load -> save reproduces identical bytes.
void save_snapshot(std::ostream& out, const CoStarGraph& g, const ActorTable& actors);
std::pair<CoStarGraph, ActorTable> load_snapshot(std::istream& in);
void save_snapshot_file(const std::string& path, const Network& net);
Network load_snapshot_file(const std::string& path);

}  // namespace costar
