#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "costar/graph.hpp"

namespace costar {

namespace {

constexpr std::array<char, 8> kMagic = {'C', 'O', 'S', 'T', 'A', 'R', 'G', 'R'};
constexpr std::uint32_t kVersion = 1;

static_assert(std::endian::native == std::endian::little || std::endian::native == std::endian::big);

template <typename T>
T to_little(T value) {
    if constexpr (std::endian::native == std::endian::big) {
        auto bytes = std::bit_cast<std::array<unsigned char, sizeof(T)>>(value);
        std::reverse(bytes.begin(), bytes.end());
        return std::bit_cast<T>(bytes);
    }
    return value;
}

class Writer {
public:
    explicit Writer(std::ostream& out) : out_(out) {}

    template <typename T>
    void scalar(T value) {
        value = to_little(value);
        out_.write(reinterpret_cast<const char*>(&value), sizeof value);
    }

    template <typename T>
    void array(const std::vector<T>& values) {
        scalar<std::uint64_t>(values.size());
        if constexpr (std::endian::native == std::endian::little) {
            out_.write(reinterpret_cast<const char*>(values.data()),
                       static_cast<std::streamsize>(values.size() * sizeof(T)));
        } else {
            for (T v : values) scalar(v);
        }
    }

    void strings(std::span<const std::string> values) {
        scalar<std::uint64_t>(values.size());
        for (const auto& s : values) {
            scalar<std::uint64_t>(s.size());
            out_.write(s.data(), static_cast<std::streamsize>(s.size()));
        }
    }

private:
    std::ostream& out_;
};

class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    template <typename T>
    T scalar() {
        T value{};
        bytes(reinterpret_cast<char*>(&value), sizeof value);
        return to_little(value);
    }

    template <typename T>
    std::vector<T> array() {
        const auto count = length();
        std::vector<T> values(count);
        bytes(reinterpret_cast<char*>(values.data()), count * sizeof(T));
        if constexpr (std::endian::native == std::endian::big)
            for (auto& v : values) v = to_little(v);
        return values;
    }

    std::vector<std::string> strings() {
        const auto count = length();
        std::vector<std::string> values;
        values.reserve(count);
        for (std::uint64_t i = 0; i < count; ++i) {
            std::string s(length(), '\0');
            bytes(s.data(), s.size());
            values.push_back(std::move(s));
        }
        return values;
    }

    void bytes(char* dst, std::size_t size) {
        in_.read(dst, static_cast<std::streamsize>(size));
        if (static_cast<std::size_t>(in_.gcount()) != size)
            throw std::runtime_error("snapshot truncated");
    }

private:
    // Lengths are bounded so a corrupt header fails cleanly instead of
    // attempting a huge allocation.
    std::uint64_t length() {
        const auto n = scalar<std::uint64_t>();
        if (n > (std::uint64_t{1} << 40)) throw std::runtime_error("snapshot length field corrupt");
        return n;
    }

    std::istream& in_;
};

void require(bool ok, const char* what) {
    if (!ok) throw std::runtime_error(std::string("snapshot invalid: ") + what);
}

}  // namespace

void save_snapshot(std::ostream& out, const CoStarGraph& g, const ActorTable& actors) {
    if (actors.size() != g.node_count())
        throw std::invalid_argument("actor table does not match graph");
    Writer w(out);
    out.write(kMagic.data(), kMagic.size());
    w.scalar(kVersion);
    w.strings(actors.names());
    w.strings(*g.titles_);
    w.array(g.offsets_);
    w.array(g.neighbors_);
    w.array(g.slot_edges_);
    w.array(g.edge_offsets_);
    w.array(g.edge_movies_);
    if (!out) throw std::runtime_error("snapshot write failed");
}

std::pair<CoStarGraph, ActorTable> load_snapshot(std::istream& in) {
    Reader r(in);
    std::array<char, 8> magic{};
    r.bytes(magic.data(), magic.size());
    require(magic == kMagic, "bad magic");
    require(r.scalar<std::uint32_t>() == kVersion, "unsupported version");

    ActorTable actors;
    for (const auto& name : r.strings()) actors.intern(name);

    CoStarGraph g;
    g.titles_ = std::make_shared<const std::vector<std::string>>(r.strings());
    g.offsets_ = r.array<std::uint64_t>();
    g.neighbors_ = r.array<ActorId>();
    g.slot_edges_ = r.array<EdgeId>();
    g.edge_offsets_ = r.array<std::uint64_t>();
    g.edge_movies_ = r.array<MovieId>();

    const std::size_t n = actors.size();
    require(g.offsets_.size() == n + 1 && g.offsets_.front() == 0, "offsets");
    require(std::is_sorted(g.offsets_.begin(), g.offsets_.end()), "offsets order");
    require(g.offsets_.back() == g.neighbors_.size(), "adjacency size");
    require(g.slot_edges_.size() == g.neighbors_.size(), "edge slots");
    require(!g.edge_offsets_.empty() && g.edge_offsets_.front() == 0, "edge offsets");
    require(std::is_sorted(g.edge_offsets_.begin(), g.edge_offsets_.end()), "edge offsets order");
    require(g.edge_offsets_.back() == g.edge_movies_.size(), "movie list size");
    require(g.neighbors_.size() == 2 * (g.edge_offsets_.size() - 1), "edge count");
    require(std::all_of(g.neighbors_.begin(), g.neighbors_.end(), [&](ActorId v) { return v < n; }),
            "neighbor id");
    const std::size_t m = g.edge_offsets_.size() - 1;
    require(std::all_of(g.slot_edges_.begin(), g.slot_edges_.end(), [&](EdgeId e) { return e < m; }),
            "edge id");
    const std::size_t movies = g.titles_->size();
    require(std::all_of(g.edge_movies_.begin(), g.edge_movies_.end(),
                        [&](MovieId mv) { return mv < movies; }),
            "movie id");
    return {std::move(g), std::move(actors)};
}

void save_snapshot_file(const std::string& path, const Network& net) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open snapshot for writing: " + path);
    save_snapshot(out, net.graph, net.actors);
}

Network load_snapshot_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open snapshot: " + path);
    auto [g, actors] = load_snapshot(in);
    return {std::move(g), std::move(actors)};
}

}  // namespace costar
