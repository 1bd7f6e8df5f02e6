#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "costar/graph.hpp"

namespace costar {

enum class Measure { degree, betweenness_exact, betweenness_sampled, closeness };

std::string_view to_string(Measure m);

/// Scores for one measure over a set of actors (all nodes, or a candidate
/// subset for closeness_top). actors and scores are parallel.
struct CentralityVector {
    Measure measure = Measure::degree;
    std::size_t n = 0;
    std::optional<std::size_t> k;
    std::optional<std::uint64_t> seed;
    std::vector<ActorId> actors;
    std::vector<double> scores;

    /// Positions into actors/scores, by descending score then ascending name.
    std::vector<std::size_t> ranking(const ActorTable& names) const;
};

/// Reproducible random source: std::mt19937_64 (fully specified by the C++
/// standard) with bounded draws by rejection, so results do not depend on
/// the standard library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

/// k distinct ids from [0, n), uniformly, in draw order (partial
/// Fisher-Yates). Throws std::invalid_argument if k > n.
std::vector<ActorId> sample_without_replacement(std::size_t n, std::size_t k, std::uint64_t seed);

/// degree(v) / (n - 1). Throws std::invalid_argument when n < 2.
CentralityVector degree_centrality(const CoStarGraph& g);

/// Sum over `sources` of the single-source dependencies delta_s(v), with
/// sources added in ascending order whatever the worker count.
std::vector<double> dependency_sums(const CoStarGraph& g, std::span<const ActorId> sources,
                                    unsigned workers = 1);

/// Exact normalized betweenness: pair dependencies over unordered pairs,
/// endpoints excluded, divided by (n - 1)(n - 2) / 2. All zero for n < 3.
CentralityVector betweenness_exact(const CoStarGraph& g, unsigned workers = 1);

/// Pivot-sampled betweenness: k distinct pivots, estimate scaled by n / k.
/// Throws std::invalid_argument unless 1 <= k <= n. With k == n the result is
/// bit-identical to betweenness_exact.
CentralityVector betweenness_sampled(const CoStarGraph& g, std::size_t k, std::uint64_t seed,
                                     unsigned workers = 1);

/// (n - 1) / sum of distances from v. Throws std::domain_error when the graph
/// is disconnected and std::invalid_argument when n < 2.
double closeness(const CoStarGraph& g, ActorId v);

/// Closeness of the first `limit` candidates, in candidate order.
CentralityVector closeness_top(const CoStarGraph& g, std::span<const ActorId> candidates,
                               std::size_t limit, unsigned workers = 1);

struct SampleStats {
    std::vector<ActorId> actors;     // draw order
    std::vector<double> mean_hops;   // parallel to actors
    double mean = 0.0;
    double stddev = 0.0;             // n - 1 denominator; 0 for one sample
    std::vector<double> bin_edges;   // 21 edges
    std::vector<std::size_t> bin_counts;  // 20 bins

    std::size_t sample_size() const { return actors.size(); }
};

/// Mean path length (1 / closeness) for a uniform sample of actors.
SampleStats closeness_sample_stats(const CoStarGraph& g, std::size_t sample_size,
                                   std::uint64_t seed, unsigned workers = 1);

/// 20 equal-width bins over [min, max]; the last bin is closed. A zero-width
/// range is widened to [x - 0.5, x + 0.5].
void fill_histogram(SampleStats& stats, std::size_t bins = 20);

/// TSV: metadata comment line, then rank, actor, score (and mean hops for
/// closeness) for the top `top` rows.
void write_tsv(std::ostream& out, const CentralityVector& vec, const ActorTable& names,
               std::size_t top);
std::string to_json(const CentralityVector& vec, const ActorTable& names, std::size_t top);

}  // namespace costar
