#include "costar/paths.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace costar {

Bfs::Bfs(const CoStarGraph& g)
    : g_(&g), dist_(g.node_count(), unreached), parent_(g.node_count(), no_parent) {
    order_.reserve(g.node_count());
}

void Bfs::run(ActorId source, std::optional<ActorId> stop_at) {
    if (source >= dist_.size()) throw std::out_of_range("bfs source out of range");
    for (ActorId v : order_) {
        dist_[v] = unreached;
        parent_[v] = no_parent;
    }
    order_.clear();

    dist_[source] = 0;
    order_.push_back(source);
    for (std::size_t head = 0; head < order_.size(); ++head) {
        const ActorId u = order_[head];
        if (stop_at && u == *stop_at) break;
        const std::uint32_t next = dist_[u] + 1;
        for (ActorId w : g_->neighbors(u)) {
            if (dist_[w] != unreached) continue;
            dist_[w] = next;
            parent_[w] = u;
            order_.push_back(w);
        }
    }
}

std::optional<std::vector<ActorId>> shortest_path_ids(const CoStarGraph& g, ActorId s, ActorId t) {
    if (s >= g.node_count() || t >= g.node_count())
        throw std::out_of_range("path endpoint out of range");
    Bfs bfs(g);
    bfs.run(s, t);
    if (bfs.distance(t) == Bfs::unreached) return std::nullopt;

    std::vector<ActorId> path;
    for (ActorId v = t; v != Bfs::no_parent; v = bfs.parent(v)) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

PathResult shortest_path(const CoStarGraph& g, const ActorTable& actors, std::string_view u,
                         std::string_view v) {
    PathResult result;
    const auto s = actors.find(u);
    const auto t = actors.find(v);
    if (!s || !t) {
        result.status = PathStatus::not_in_network;
        return result;
    }
    const auto ids = shortest_path_ids(g, *s, *t);
    if (!ids) {
        result.status = PathStatus::no_path;
        return result;
    }
    for (std::size_t i = 0; i + 1 < ids->size(); ++i) {
        const ActorId a = (*ids)[i];
        const ActorId b = (*ids)[i + 1];
        const auto edge = g.find_edge(a, b);
        const MovieId first = g.edge_movies(*edge).front();
        result.path.hops.push_back({actors.name(a), g.movie_title(first), actors.name(b)});
    }
    return result;
}

void write_path(std::ostream& out, const PathResult& result, std::string_view u,
                std::string_view v) {
    out << "Here is the shortest path from " << u << " to " << v << '\n';
    switch (result.status) {
        case PathStatus::not_in_network:
            out << "  Error: " << u << " and/or " << v << " are not in the network\n";
            break;
        case PathStatus::no_path:
            out << "  No path exists between " << u << " and " << v << '\n';
            break;
        case PathStatus::found:
            for (const auto& hop : result.path.hops)
                out << "  " << hop.from << " was in " << hop.movie << " with " << hop.to << '\n';
            break;
    }
}

std::size_t HopDistribution::reached() const {
    std::size_t sum = 0;
    for (auto c : counts) sum += c;
    return sum;
}

std::uint64_t HopDistribution::distance_sum() const {
    std::uint64_t sum = 0;
    for (std::size_t d = 0; d < counts.size(); ++d) sum += d * counts[d];
    return sum;
}

HopDistribution hop_distribution(const CoStarGraph& g, ActorId source) {
    Bfs bfs(g);
    bfs.run(source);
    HopDistribution out;
    for (ActorId v : bfs.order()) {
        const auto d = bfs.distance(v);
        if (d >= out.counts.size()) out.counts.resize(d + 1, 0);
        ++out.counts[d];
    }
    return out;
}

std::string to_counter_string(const HopDistribution& dist) {
    std::ostringstream out;
    out << "Counter({";
    for (std::size_t d = 0; d < dist.counts.size(); ++d) {
        if (d) out << ", ";
        out << d << ": " << dist.counts[d];
    }
    out << "})";
    return out.str();
}

}  // namespace costar
