#include "costar/components.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "json.hpp"

namespace costar {

std::vector<ActorId> ComponentLabeling::members(std::uint32_t component) const {
    std::vector<ActorId> out;
    if (component < sizes.size()) out.reserve(sizes[component]);
    for (std::size_t v = 0; v < component_of.size(); ++v)
        if (component_of[v] == component) out.push_back(static_cast<ActorId>(v));
    return out;
}

ComponentLabeling connected_components(const CoStarGraph& g) {
    const std::size_t n = g.node_count();
    UnionFind uf(n);
    for (ActorId u = 0; u < n; ++u)
        for (ActorId v : g.neighbors(u))
            if (u < v) uf.unite(u, v);

    // Roots visited in ascending id order, so each root's first sighting is
    // at its component's smallest member.
    constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> provisional(n, unset);
    std::vector<std::size_t> sizes;
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t root = uf.find(v);
        if (provisional[root] == unset) {
            provisional[root] = static_cast<std::uint32_t>(sizes.size());
            sizes.push_back(uf.size_of(root));
        }
    }

    std::vector<std::uint32_t> order(sizes.size());
    std::iota(order.begin(), order.end(), 0u);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return sizes[a] > sizes[b]; });
    std::vector<std::uint32_t> final_label(sizes.size());
    for (std::uint32_t rank = 0; rank < order.size(); ++rank) final_label[order[rank]] = rank;

    ComponentLabeling out;
    out.component_of.resize(n);
    for (std::size_t v = 0; v < n; ++v)
        out.component_of[v] = final_label[provisional[uf.find(v)]];
    out.sizes.resize(sizes.size());
    for (std::uint32_t rank = 0; rank < order.size(); ++rank) out.sizes[rank] = sizes[order[rank]];
    return out;
}

std::pair<CoStarGraph, std::vector<ActorId>> largest_component(const CoStarGraph& g) {
    if (g.empty()) throw std::invalid_argument("largest component of an empty graph");
    const auto labeling = connected_components(g);
    return subgraph(g, labeling.members(0));
}

Network largest_component(const Network& net, std::vector<ActorId>* remap) {
    if (net.graph.empty()) throw std::invalid_argument("largest component of an empty graph");
    const auto labeling = connected_components(net.graph);
    return subnetwork(net, labeling.members(0), remap);
}

bool is_connected(const CoStarGraph& g) {
    if (g.empty()) return false;
    return connected_components(g).count() == 1;
}

std::string sizes_to_json(const ComponentLabeling& labeling) {
    return nlohmann::json(labeling.sizes).dump();
}

}  // namespace costar
