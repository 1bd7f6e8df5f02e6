#pragma once

#include <string>
#include <utility>
#include <vector>

#include "costar/graph.hpp"
#include "costar/ingest.hpp"

namespace fixtures {

inline std::string data_path(const std::string& name) {
    return std::string(COSTAR_TEST_DATA_DIR) + "/" + name;
}

inline std::vector<costar::MovieRecord> batman_records() {
    return costar::clean(costar::parse_records_file(data_path("batman.jsonl"))).records;
}

inline costar::Network batman() { return costar::build_graph(batman_records()); }

inline costar::ActorId id(const costar::Network& net, const std::string& name) {
    return net.actors.find(name).value();
}

/// Table "a0", "a1", ... matching a graph built with from_edges.
inline costar::ActorTable numbered_table(std::size_t n) {
    costar::ActorTable t;
    for (std::size_t i = 0; i < n; ++i) t.intern("a" + std::to_string(i));
    return t;
}

}  // namespace fixtures
