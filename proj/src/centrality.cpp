#include "costar/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "costar/format.hpp"
#include "costar/parallel.hpp"
#include "costar/paths.hpp"
#include "json.hpp"

namespace costar {

namespace {

// Scratch for one single-source dependency pass. Only entries reached by the
// last run are non-default, and `order` lists exactly those.
struct DependencyState {
    explicit DependencyState(std::size_t n)
        : dist(n, Bfs::unreached), sigma(n, 0.0), delta(n, 0.0) {
        order.reserve(n);
    }

    void reset() {
        for (ActorId v : order) {
            dist[v] = Bfs::unreached;
            sigma[v] = 0.0;
            delta[v] = 0.0;
        }
        order.clear();
    }

    // Brandes accumulation on the unweighted graph; leaves delta_s(v) in
    // delta with delta[s] = 0.
    void run(const CoStarGraph& g, ActorId s) {
        reset();
        dist[s] = 0;
        sigma[s] = 1.0;
        order.push_back(s);
        for (std::size_t head = 0; head < order.size(); ++head) {
            const ActorId u = order[head];
            const std::uint32_t next = dist[u] + 1;
            for (ActorId w : g.neighbors(u)) {
                if (dist[w] == Bfs::unreached) {
                    dist[w] = next;
                    order.push_back(w);
                }
                if (dist[w] == next) sigma[w] += sigma[u];
            }
        }
        for (std::size_t i = order.size(); i-- > 1;) {
            const ActorId w = order[i];
            const double coeff = (1.0 + delta[w]) / sigma[w];
            const std::uint32_t prev = dist[w] - 1;
            for (ActorId v : g.neighbors(w))
                if (dist[v] == prev) delta[v] += sigma[v] * coeff;
        }
        delta[s] = 0.0;
    }

    std::vector<std::uint32_t> dist;
    std::vector<double> sigma;
    std::vector<double> delta;
    std::vector<ActorId> order;
};

CentralityVector all_nodes(Measure m, const CoStarGraph& g) {
    CentralityVector vec;
    vec.measure = m;
    vec.n = g.node_count();
    vec.actors.resize(g.node_count());
    std::iota(vec.actors.begin(), vec.actors.end(), ActorId{0});
    vec.scores.assign(g.node_count(), 0.0);
    return vec;
}

// Shared by exact and sampled so k == n reproduces exact bit for bit.
void scale_betweenness(CentralityVector& vec, const std::vector<double>& sums, std::size_t k) {
    const std::size_t n = vec.n;
    if (n < 3) return;
    const double scale = static_cast<double>(n) / static_cast<double>(k);
    const double pairs = static_cast<double>(n - 1) * static_cast<double>(n - 2) / 2.0;
    for (std::size_t v = 0; v < n; ++v) vec.scores[v] = scale * sums[v] / 2.0 / pairs;
}

double closeness_with(Bfs& bfs, const CoStarGraph& g, ActorId v) {
    bfs.run(v);
    if (bfs.order().size() != g.node_count())
        throw std::domain_error("closeness requires a connected graph");
    std::uint64_t total = 0;
    for (ActorId u : bfs.order()) total += bfs.distance(u);
    return static_cast<double>(g.node_count() - 1) / static_cast<double>(total);
}

void require_closeness_domain(const CoStarGraph& g) {
    if (g.node_count() < 2) throw std::invalid_argument("closeness needs at least two nodes");
}

}  // namespace

std::string_view to_string(Measure m) {
    switch (m) {
        case Measure::degree: return "degree";
        case Measure::betweenness_exact: return "betweenness-exact";
        case Measure::betweenness_sampled: return "betweenness-sampled";
        case Measure::closeness: return "closeness";
    }
    return "unknown";
}

std::vector<std::size_t> CentralityVector::ranking(const ActorTable& names) const {
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        const auto& na = names.name(actors[a]);
        const auto& nb = names.name(actors[b]);
        if (na != nb) return na < nb;
        return actors[a] < actors[b];
    });
    return order;
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty range");
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % bound + 1) % bound;
    std::uint64_t r;
    do {
        r = engine_();
    } while (r > limit);
    return r % bound;
}

std::vector<ActorId> sample_without_replacement(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k > n) throw std::invalid_argument("sample larger than population");
    std::vector<ActorId> pool(n);
    std::iota(pool.begin(), pool.end(), ActorId{0});
    Rng rng(seed);
    for (std::size_t i = 0; i < k; ++i) {
        const auto j = i + static_cast<std::size_t>(rng.below(n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

CentralityVector degree_centrality(const CoStarGraph& g) {
    const std::size_t n = g.node_count();
    if (n < 2) throw std::invalid_argument("degree centrality needs at least two nodes");
    auto vec = all_nodes(Measure::degree, g);
    const double denom = static_cast<double>(n - 1);
    for (ActorId v = 0; v < n; ++v) vec.scores[v] = static_cast<double>(g.degree(v)) / denom;
    return vec;
}

std::vector<double> dependency_sums(const CoStarGraph& g, std::span<const ActorId> sources,
                                    unsigned workers) {
    const std::size_t n = g.node_count();
    std::vector<double> sums(n, 0.0);
    if (sources.empty()) return sums;
    for (ActorId s : sources)
        if (s >= n) throw std::out_of_range("source out of range");

    std::vector<ActorId> sorted(sources.begin(), sources.end());
    std::sort(sorted.begin(), sorted.end());

    // Sources are processed in blocks; within a block every source has its
    // own state, and the block is folded into `sums` in source order. Each
    // node therefore sees the same sequence of additions for any worker count.
    const unsigned threads = std::max(workers, 1u);
    const std::size_t block = std::min<std::size_t>(sorted.size(), 2 * std::size_t{threads});
    std::vector<DependencyState> states;
    states.reserve(block);
    for (std::size_t i = 0; i < block; ++i) states.emplace_back(n);

    for (std::size_t begin = 0; begin < sorted.size(); begin += block) {
        const std::size_t count = std::min(block, sorted.size() - begin);
        parallel_for(count, threads,
                     [&](std::size_t i, unsigned) { states[i].run(g, sorted[begin + i]); });
        for (std::size_t i = 0; i < count; ++i) {
            const auto& st = states[i];
            for (ActorId v : st.order) sums[v] += st.delta[v];
        }
    }
    return sums;
}

CentralityVector betweenness_exact(const CoStarGraph& g, unsigned workers) {
    auto vec = all_nodes(Measure::betweenness_exact, g);
    const std::size_t n = g.node_count();
    if (n < 3) return vec;
    std::vector<ActorId> sources(n);
    std::iota(sources.begin(), sources.end(), ActorId{0});
    scale_betweenness(vec, dependency_sums(g, sources, workers), n);
    return vec;
}

CentralityVector betweenness_sampled(const CoStarGraph& g, std::size_t k, std::uint64_t seed,
                                     unsigned workers) {
    const std::size_t n = g.node_count();
    if (k == 0 || k > n) throw std::invalid_argument("pivot count must satisfy 1 <= k <= n");
    auto vec = all_nodes(Measure::betweenness_sampled, g);
    vec.k = k;
    vec.seed = seed;
    const auto pivots = sample_without_replacement(n, k, seed);
    scale_betweenness(vec, dependency_sums(g, pivots, workers), k);
    return vec;
}

double closeness(const CoStarGraph& g, ActorId v) {
    require_closeness_domain(g);
    Bfs bfs(g);
    return closeness_with(bfs, g, v);
}

CentralityVector closeness_top(const CoStarGraph& g, std::span<const ActorId> candidates,
                               std::size_t limit, unsigned workers) {
    require_closeness_domain(g);
    CentralityVector vec;
    vec.measure = Measure::closeness;
    vec.n = g.node_count();
    const std::size_t count = std::min(limit, candidates.size());
    vec.actors.assign(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(count));
    vec.scores.assign(count, 0.0);
    for (ActorId v : vec.actors)
        if (v >= g.node_count()) throw std::out_of_range("candidate out of range");

    const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(std::max(workers, 1u), std::max<std::size_t>(count, 1)));
    std::vector<Bfs> scratch(threads, Bfs(g));
    parallel_for(count, threads, [&](std::size_t i, unsigned w) {
        vec.scores[i] = closeness_with(scratch[w], g, vec.actors[i]);
    });
    return vec;
}

void fill_histogram(SampleStats& stats, std::size_t bins) {
    stats.bin_edges.clear();
    stats.bin_counts.assign(bins, 0);
    if (stats.mean_hops.empty() || bins == 0) return;

    auto [lo_it, hi_it] = std::minmax_element(stats.mean_hops.begin(), stats.mean_hops.end());
    double lo = *lo_it;
    double hi = *hi_it;
    if (lo == hi) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double width = (hi - lo) / static_cast<double>(bins);
    for (std::size_t i = 0; i <= bins; ++i)
        stats.bin_edges.push_back(i == bins ? hi : lo + width * static_cast<double>(i));
    for (double x : stats.mean_hops) {
        auto bin = static_cast<std::size_t>((x - lo) / width);
        if (bin >= bins) bin = bins - 1;
        // Edge rounding can land a value one bin off; settle against the edges.
        while (bin > 0 && x < stats.bin_edges[bin]) --bin;
        while (bin + 1 < bins && x >= stats.bin_edges[bin + 1]) ++bin;
        ++stats.bin_counts[bin];
    }
}

SampleStats closeness_sample_stats(const CoStarGraph& g, std::size_t sample_size,
                                   std::uint64_t seed, unsigned workers) {
    if (sample_size == 0) throw std::invalid_argument("sample size must be positive");
    if (sample_size > g.node_count()) throw std::invalid_argument("sample larger than graph");
    require_closeness_domain(g);

    SampleStats stats;
    stats.actors = sample_without_replacement(g.node_count(), sample_size, seed);
    const auto scores = closeness_top(g, stats.actors, sample_size, workers);
    stats.mean_hops.reserve(sample_size);
    for (double s : scores.scores) stats.mean_hops.push_back(1.0 / s);

    double sum = 0.0;
    for (double x : stats.mean_hops) sum += x;
    stats.mean = sum / static_cast<double>(sample_size);
    if (sample_size > 1) {
        double sq = 0.0;
        for (double x : stats.mean_hops) sq += (x - stats.mean) * (x - stats.mean);
        stats.stddev = std::sqrt(sq / static_cast<double>(sample_size - 1));
    }
    fill_histogram(stats);
    return stats;
}

void write_tsv(std::ostream& out, const CentralityVector& vec, const ActorTable& names,
               std::size_t top) {
    out << "# measure=" << to_string(vec.measure) << " n=" << vec.n;
    if (vec.k) out << " k=" << *vec.k;
    if (vec.seed) out << " seed=" << *vec.seed;
    out << '\n';
    const bool hops = vec.measure == Measure::closeness;
    out << "rank\tactor\tscore" << (hops ? "\tmean_hops" : "") << '\n';
    const auto order = vec.ranking(names);
    const std::size_t rows = std::min(top, order.size());
    for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t i = order[r];
        out << r + 1 << '\t' << names.name(vec.actors[i]) << '\t' << format_double(vec.scores[i]);
        if (hops) out << '\t' << format_double(1.0 / vec.scores[i]);
        out << '\n';
    }
}

std::string to_json(const CentralityVector& vec, const ActorTable& names, std::size_t top) {
    nlohmann::ordered_json j;
    j["measure"] = to_string(vec.measure);
    j["n"] = vec.n;
    if (vec.k) j["k"] = *vec.k;
    if (vec.seed) j["seed"] = *vec.seed;
    const bool hops = vec.measure == Measure::closeness;
    auto rows = nlohmann::ordered_json::array();
    const auto order = vec.ranking(names);
    const std::size_t count = std::min(top, order.size());
    for (std::size_t r = 0; r < count; ++r) {
        const std::size_t i = order[r];
        nlohmann::ordered_json row;
        row["rank"] = r + 1;
        row["actor"] = names.name(vec.actors[i]);
        row["score"] = vec.scores[i];
        if (hops) row["mean_hops"] = 1.0 / vec.scores[i];
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j.dump();
}

}  // namespace costar
