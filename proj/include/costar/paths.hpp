#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "costar/graph.hpp"

namespace costar {

/// Breadth-first search with reusable scratch state. Neighbors are visited in
/// ascending id order and each node's parent is the node that discovered it.
/// One instance per thread.
class Bfs {
public:
    static constexpr std::uint32_t unreached = std::numeric_limits<std::uint32_t>::max();
    static constexpr ActorId no_parent = std::numeric_limits<ActorId>::max();

    explicit Bfs(const CoStarGraph& g);

    /// Runs from source; stops early once `stop_at` is dequeued.
    void run(ActorId source, std::optional<ActorId> stop_at = std::nullopt);

    std::uint32_t distance(ActorId v) const { return dist_[v]; }
    ActorId parent(ActorId v) const { return parent_[v]; }
    /// Nodes in visitation order, source first.
    const std::vector<ActorId>& order() const { return order_; }

private:
    const CoStarGraph* g_;
    std::vector<std::uint32_t> dist_;
    std::vector<ActorId> parent_;
    std::vector<ActorId> order_;
};

struct Hop {
    std::string from;
    std::string movie;
    std::string to;

    bool operator==(const Hop&) const = default;
};

/// Chained hops; hops[i].to == hops[i + 1].from.
struct PathExplanation {
    std::vector<Hop> hops;

    std::size_t length() const { return hops.size(); }
};

enum class PathStatus { found, not_in_network, no_path };

struct PathResult {
    PathStatus status = PathStatus::found;
    PathExplanation path;
};

/// Node sequence of a minimum-hop path, or nullopt when t is unreachable.
std::optional<std::vector<ActorId>> shortest_path_ids(const CoStarGraph& g, ActorId s, ActorId t);

/// Shortest path between two named actors. Each hop reports the first title
/// (record order) on that pair. u == v gives an empty path.
PathResult shortest_path(const CoStarGraph& g, const ActorTable& actors, std::string_view u,
                         std::string_view v);

/// Writes the header line followed by one "  A was in T with B" line per hop,
/// or the matching error line.
void write_path(std::ostream& out, const PathResult& result, std::string_view u,
                std::string_view v);

/// counts[d] = number of nodes at exactly d hops; counts[0] == 1.
struct HopDistribution {
    std::vector<std::size_t> counts;

    std::size_t reached() const;
    std::uint64_t distance_sum() const;
};

HopDistribution hop_distribution(const CoStarGraph& g, ActorId source);

/// "Counter({0: 1, 1: 16})" form.
std::string to_counter_string(const HopDistribution& dist);

}  // namespace costar
