#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "costar/graph.hpp"

namespace costar {

/// Disjoint-set forest with union by size and path halving.
class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// Returns false when a and b were already joined.
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

    std::size_t size_of(std::size_t x) { return size_[find(x)]; }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

/// Component ids are ordered by descending size, ties by the smallest
/// ActorId the component contains.
struct ComponentLabeling {
    std::vector<std::uint32_t> component_of;
    std::vector<std::size_t> sizes;

    std::size_t count() const { return sizes.size(); }
    std::vector<ActorId> members(std::uint32_t component) const;
};

ComponentLabeling connected_components(const CoStarGraph& g);

/// Induced subgraph of component 0. Throws std::invalid_argument on an empty
/// graph.
std::pair<CoStarGraph, std::vector<ActorId>> largest_component(const CoStarGraph& g);
Network largest_component(const Network& net, std::vector<ActorId>* remap = nullptr);

/// False for the empty graph.
bool is_connected(const CoStarGraph& g);

/// Sizes as a JSON array, descending.
std::string sizes_to_json(const ComponentLabeling& labeling);

}  // namespace costar
