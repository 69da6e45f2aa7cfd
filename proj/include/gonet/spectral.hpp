#pragma once

#include <complex>
#include <span>
#include <vector>

#include "gonet/netbuild.hpp"
#include "gonet/plaquette.hpp"
#include "gonet/types.hpp"

namespace gonet {

// Column-stochastic G = alpha*S + (1-alpha)/n, S the column-normalized
// weighted adjacency with dangling columns replaced by 1/n. Edge a->b sits in
// column a, row b. Stored dense column-major.
struct GoogleMatrix {
    int n = 0;
    double alpha = 1.0;
    std::vector<double> data;  // column-major n*n

    double at(int row, int col) const { return data[static_cast<size_t>(col) * n + row]; }
    double trace() const;
    double column_sum(int col) const;
};

GoogleMatrix build_google(const GoNetwork& net, double alpha);

enum class RankKind { PageRank, CheiRank, Hub, Authority };

const char* rank_kind_name(RankKind kind);

struct RankingVector {
    RankKind kind = RankKind::PageRank;
    std::vector<double> values;  // nonnegative, L1-normalized
    std::vector<int32_t> ranks;  // vertex id -> 1-based rank, ties by id
    int iterations = 0;
    double residual = 0;
};

// vertex -> 1-based position under descending value, ties by ascending id.
std::vector<int32_t> ranks_of(std::span<const double> values);

// Power iteration from the uniform vector with L1 renormalization; stops when
// the L1 step difference drops below tol. Throws NumericError on
// non-convergence (at alpha=1 periodic structure can stall it; the dense
// spectrum solver is the fallback).
RankingVector pagerank(const GoogleMatrix& g, double tol = 1e-12, int max_iter = 100000);

// PageRank of the link-reversed network, same code path.
RankingVector cheirank(const GoNetwork& net, double alpha = 1.0, double tol = 1e-12,
                       int max_iter = 100000);

struct HitsResult {
    RankingVector hubs;
    RankingVector authorities;
};

// Mutually reinforcing scores on the weighted adjacency (set weighted = false
// to binarize), L2-normalized per step, reported L1-normalized.
HitsResult hits(const GoNetwork& net, double tol = 1e-12, int max_iter = 100000,
                bool weighted = true);

struct SpectralReport {
    // all n eigenvalues, sorted by descending modulus, ties by descending
    // real then imaginary part
    std::vector<std::complex<double>> eigenvalues;
    // right eigenvectors of the m largest-modulus eigenvalues, normalized to
    // sum|psi|^2 = 1 with the largest-modulus entry made real positive
    std::vector<std::vector<std::complex<double>>> top_vectors;
    std::vector<std::pair<double, double>> lambda_c;  // (percent, radius)
};

// Dense eigendecomposition (O(n^3); n is ~1107 here). Checks sum(lambda)
// against trace(G) to 1e-6 as a solver sanity assertion.
SpectralReport full_spectrum(const GoogleMatrix& g, int m = 7,
                             std::span<const double> percents = {});

// k-th smallest eigenvalue modulus with k = clamp(floor(percent*n/100), 1, n).
double lambda_c(std::span<const std::complex<double>> eigenvalues, double percent);

// |psi|^2 (normalized over all n entries) at the vertices ranked 1..M by
// corpus frequency.
std::vector<double> localization_profile(std::span<const std::complex<double>> eigvec,
                                         std::span<const uint16_t> freq_ranking, int M = 100);

struct TopEntry {
    uint16_t id = 0;
    double weight2 = 0;  // |psi|^2
    std::string diagram;
};

std::vector<TopEntry> top_entries(std::span<const std::complex<double>> eigvec, int k,
                                  const ClassTable& table);

struct RankCorrelation {
    std::vector<std::pair<int32_t, int32_t>> scatter;  // (K, K*) per vertex
    double kendall_tau = 0;
};

RankCorrelation rank_correlation(const RankingVector& pr, const RankingVector& cr);

}  // namespace gonet
