#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gonet/netbuild.hpp"
#include "gonet/types.hpp"

namespace gonet {

// Items ranked by descending count; ties keep the caller's item order.
// integrated[r] = sum of counts from rank r to the end, divided by the total,
// so it starts at 1 and never increases.
struct RankedDistribution {
    std::vector<std::string> labels;
    std::vector<int64_t> counts;
    std::vector<double> integrated;

    size_t size() const { return labels.size(); }
};

RankedDistribution rank_counts(std::vector<std::pair<std::string, int64_t>> items);

// Per-class frequency distribution (the Zipf curve of moves).
RankedDistribution move_frequency(const GoNetwork& net);

// All class ids (0..n-1) ordered by descending count, ties by ascending id.
std::vector<uint16_t> frequency_ranking(const GoNetwork& net);

// Overlapping windows of k consecutive events whose k-1 successive pairs all
// link under distance d; keys are "-"-joined class ids.
RankedDistribution sequence_frequency(std::span<const GameEvents> games, int k, int d);

// Variant move definitions kept for comparison with the main construction:
// C1 = board positions, immediate successor pairs; C2 = board positions, b =
// first later move within distance d of a; C3 = tuples of displacement
// vectors between linked consecutive moves.
RankedDistribution variant_c1(std::span<const GameEvents> games);
RankedDistribution variant_c2(std::span<const GameEvents> games, int d);
RankedDistribution variant_c3(std::span<const GameEvents> games, int d, int k);

// P(d') for d' = 0..18 over consecutive within-game pairs, summing to 1.
std::vector<double> distance_distribution(std::span<const GameEvents> games);

// Integrated degree curve: p[k] = #{vertices with degree > k} / n_vertices,
// k = 0..k_max, with k_norm = k/k_max.
struct DegreeCurve {
    std::vector<int64_t> k;
    std::vector<double> k_norm;
    std::vector<double> p;
    int64_t k_max = 0;
};

// Degrees count distinct links; pass weighted = true for the summed-weight
// variant emitted alongside for inspection.
std::pair<DegreeCurve, DegreeCurve> degree_distributions(const GoNetwork& net,
                                                         bool weighted = false);

struct ClusteringResult {
    double average = 0;                // over vertices with degree >= 2
    std::vector<double> per_vertex;    // meaningful where counted[v]
    std::vector<bool> counted;
    int64_t n_counted = 0;
};

// Direction, weights and self-loops discarded; vertices of degree < 2 are
// excluded from the average.
ClusteringResult clustering_coefficient(const GoNetwork& net);

std::vector<std::pair<int64_t, double>> cc_vs_games(std::span<const GameEvents> games,
                                                    NetworkConfig config,
                                                    std::span<const int64_t> checkpoints,
                                                    int n_vertices = 1107);

struct SlopeFit {
    double slope = 0;
    double intercept = 0;
    int64_t r_min = 0;
    int64_t r_max = 0;
    double residual_rms = 0;  // in log10 space
    size_t n_points = 0;
};

// Least squares of log10(y) against log10(x); points with x or y <= 0 are
// skipped. Throws if fewer than 3 usable points remain.
SlopeFit fit_loglog(std::span<const double> xs, std::span<const double> ys);

// Fit over 1-based ranks [r_min, r_max] of the integrated curve (or raw
// counts when use_integrated is false).
SlopeFit fit_slope(const RankedDistribution& dist, int64_t r_min, int64_t r_max,
                   bool use_integrated = true);

SlopeFit fit_degree_curve(const DegreeCurve& curve);

}  // namespace gonet
