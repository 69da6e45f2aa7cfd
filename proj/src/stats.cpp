#include "gonet/stats.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>

namespace gonet {

RankedDistribution rank_counts(std::vector<std::pair<std::string, int64_t>> items) {
    std::stable_sort(items.begin(), items.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    RankedDistribution dist;
    dist.labels.reserve(items.size());
    dist.counts.reserve(items.size());
    int64_t total = 0;
    for (auto& [label, count] : items) {
        dist.labels.push_back(std::move(label));
        dist.counts.push_back(count);
        total += count;
    }
    dist.integrated.resize(items.size());
    int64_t tail = 0;
    for (size_t r = items.size(); r-- > 0;) {
        tail += dist.counts[r];
        dist.integrated[r] = total > 0 ? static_cast<double>(tail) / total : 0.0;
    }
    return dist;
}

RankedDistribution move_frequency(const GoNetwork& net) {
    if (net.total_moves() == 0)
        throw DataError("move_frequency: empty corpus");
    std::vector<std::pair<std::string, int64_t>> items;
    for (int id = 0; id < net.n_vertices; ++id)
        if (net.vertex_counts[id] > 0)
            items.emplace_back(std::to_string(id), net.vertex_counts[id]);
    return rank_counts(std::move(items));
}

std::vector<uint16_t> frequency_ranking(const GoNetwork& net) {
    std::vector<uint16_t> ids(net.n_vertices);
    std::iota(ids.begin(), ids.end(), 0);
    std::stable_sort(ids.begin(), ids.end(), [&](uint16_t a, uint16_t b) {
        return net.vertex_counts[a] > net.vertex_counts[b];
    });
    return ids;
}

RankedDistribution sequence_frequency(std::span<const GameEvents> games, int k, int d) {
    if (k < 2)
        throw DataError("sequence_frequency: k must be >= 2");
    std::map<std::string, int64_t> counts;
    for (const GameEvents& game : games) {
        const auto& ev = game.events;
        for (size_t start = 0; start + k <= ev.size(); ++start) {
            bool chained = true;
            for (int j = 1; j < k && chained; ++j)
                chained = linked(ev[start + j - 1], ev[start + j], d);
            if (!chained)
                continue;
            std::string key;
            for (int j = 0; j < k; ++j) {
                if (j) key += '-';
                key += std::to_string(ev[start + j].class_id);
            }
            counts[key] += 1;
        }
    }
    return rank_counts({counts.begin(), counts.end()});
}

namespace {

std::string pos_label(Coord c) {
    return std::to_string(c.h) + "," + std::to_string(c.v);
}

}  // namespace

RankedDistribution variant_c1(std::span<const GameEvents> games) {
    std::map<std::string, int64_t> counts;
    for (const GameEvents& game : games)
        for (size_t i = 1; i < game.events.size(); ++i) {
            const MoveEvent& a = game.events[i - 1];
            const MoveEvent& b = game.events[i];
            if (b.seq != a.seq + 1)
                continue;
            counts[pos_label(a.at) + ">" + pos_label(b.at)] += 1;
        }
    return rank_counts({counts.begin(), counts.end()});
}

RankedDistribution variant_c2(std::span<const GameEvents> games, int d) {
    std::map<std::string, int64_t> counts;
    for (const GameEvents& game : games)
        for (size_t i = 0; i < game.events.size(); ++i)
            for (size_t j = i + 1; j < game.events.size(); ++j)
                if (chebyshev(game.events[i].at, game.events[j].at) <= d) {
                    counts[pos_label(game.events[i].at) + ">" + pos_label(game.events[j].at)] += 1;
                    break;
                }
    return rank_counts({counts.begin(), counts.end()});
}

RankedDistribution variant_c3(std::span<const GameEvents> games, int d, int k) {
    if (k < 1)
        throw DataError("variant_c3: k must be >= 1");
    std::map<std::string, int64_t> counts;
    for (const GameEvents& game : games) {
        const auto& ev = game.events;
        // k displacement vectors span k+1 events, every pair linked
        for (size_t start = 0; start + k + 1 <= ev.size(); ++start) {
            bool chained = true;
            for (int j = 0; j < k && chained; ++j)
                chained = linked(ev[start + j], ev[start + j + 1], d);
            if (!chained)
                continue;
            std::string key;
            for (int j = 0; j < k; ++j) {
                Coord a = ev[start + j].at;
                Coord b = ev[start + j + 1].at;
                key += "(" + std::to_string(b.h - a.h) + "," + std::to_string(b.v - a.v) + ")";
            }
            counts[key] += 1;
        }
    }
    return rank_counts({counts.begin(), counts.end()});
}

std::vector<double> distance_distribution(std::span<const GameEvents> games) {
    std::vector<int64_t> hist(19, 0);
    int64_t total = 0;
    for (const GameEvents& game : games)
        for (size_t i = 1; i < game.events.size(); ++i) {
            const MoveEvent& a = game.events[i - 1];
            const MoveEvent& b = game.events[i];
            if (b.seq != a.seq + 1)
                continue;
            hist.at(chebyshev(a.at, b.at)) += 1;
            ++total;
        }
    if (total == 0)
        throw DataError("distance_distribution: no consecutive move pairs");
    std::vector<double> p(19);
    for (size_t i = 0; i < hist.size(); ++i)
        p[i] = static_cast<double>(hist[i]) / total;
    return p;
}

namespace {

DegreeCurve integrated_curve(const std::vector<int64_t>& degrees, int n_vertices) {
    DegreeCurve curve;
    curve.k_max = degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
    std::vector<int64_t> above(curve.k_max + 1, 0);
    for (int64_t deg : degrees)
        for (int64_t k = 0; k < deg; ++k)
            ++above[k];
    // quadratic in k_max; fine for degree counts but not for weighted sums
    curve.k.resize(curve.k_max + 1);
    curve.k_norm.resize(curve.k_max + 1);
    curve.p.resize(curve.k_max + 1);
    for (int64_t k = 0; k <= curve.k_max; ++k) {
        curve.k[k] = k;
        curve.k_norm[k] = curve.k_max > 0 ? static_cast<double>(k) / curve.k_max : 0.0;
        curve.p[k] = static_cast<double>(above[k]) / n_vertices;
    }
    return curve;
}

// Evaluates only at distinct degree values (plus 0); weighted degrees can
// reach the total edge weight, far too large for a dense k grid.
DegreeCurve integrated_curve_sparse(const std::vector<int64_t>& degrees, int n_vertices) {
    DegreeCurve curve;
    std::vector<int64_t> sorted = degrees;
    std::sort(sorted.begin(), sorted.end());
    curve.k_max = sorted.empty() ? 0 : sorted.back();
    std::vector<int64_t> ks{0};
    for (int64_t deg : sorted)
        if (deg > 0 && deg != ks.back())
            ks.push_back(deg);
    for (int64_t k : ks) {
        int64_t above = sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), k);
        curve.k.push_back(k);
        curve.k_norm.push_back(curve.k_max > 0 ? static_cast<double>(k) / curve.k_max : 0.0);
        curve.p.push_back(static_cast<double>(above) / n_vertices);
    }
    return curve;
}

}  // namespace

std::pair<DegreeCurve, DegreeCurve> degree_distributions(const GoNetwork& net, bool weighted) {
    std::vector<int64_t> in_deg(net.n_vertices, 0), out_deg(net.n_vertices, 0);
    for (const auto& [edge, w] : net.edges) {
        int64_t unit = weighted ? w : 1;
        out_deg[edge.first] += unit;
        in_deg[edge.second] += unit;
    }
    if (weighted)
        return {integrated_curve_sparse(in_deg, net.n_vertices),
                integrated_curve_sparse(out_deg, net.n_vertices)};
    return {integrated_curve(in_deg, net.n_vertices), integrated_curve(out_deg, net.n_vertices)};
}

ClusteringResult clustering_coefficient(const GoNetwork& net) {
    const int n = net.n_vertices;
    const int words = (n + 63) / 64;
    std::vector<uint64_t> adj(static_cast<size_t>(n) * words, 0);
    auto set_bit = [&](int i, int j) { adj[static_cast<size_t>(i) * words + j / 64] |= 1ull << (j % 64); };
    for (const auto& [edge, w] : net.edges) {
        if (edge.first == edge.second)
            continue;  // self-loops excluded
        set_bit(edge.first, edge.second);
        set_bit(edge.second, edge.first);
    }

    ClusteringResult res;
    res.per_vertex.assign(n, 0.0);
    res.counted.assign(n, false);
    double sum = 0;
    for (int i = 0; i < n; ++i) {
        const uint64_t* row_i = &adj[static_cast<size_t>(i) * words];
        std::vector<int> neighbors;
        for (int w = 0; w < words; ++w) {
            uint64_t bits = row_i[w];
            while (bits) {
                int b = std::countr_zero(bits);
                neighbors.push_back(w * 64 + b);
                bits &= bits - 1;
            }
        }
        size_t deg = neighbors.size();
        if (deg < 2)
            continue;
        int64_t connected_ordered = 0;
        for (int j : neighbors) {
            const uint64_t* row_j = &adj[static_cast<size_t>(j) * words];
            for (int w = 0; w < words; ++w)
                connected_ordered += std::popcount(row_i[w] & row_j[w]);
        }
        res.per_vertex[i] = static_cast<double>(connected_ordered) /
                            (static_cast<double>(deg) * (deg - 1));
        res.counted[i] = true;
        res.n_counted += 1;
        sum += res.per_vertex[i];
    }
    if (res.n_counted == 0)
        throw DataError("clustering coefficient undefined: no vertex of degree >= 2");
    res.average = sum / res.n_counted;
    return res;
}

std::vector<std::pair<int64_t, double>> cc_vs_games(std::span<const GameEvents> games,
                                                    NetworkConfig config,
                                                    std::span<const int64_t> checkpoints,
                                                    int n_vertices) {
    std::vector<std::pair<int64_t, double>> out;
    int64_t prev = 0;
    for (int64_t n_g : checkpoints) {
        if (n_g < prev)
            throw DataError("cc_vs_games: checkpoints must be ascending");
        if (n_g > static_cast<int64_t>(games.size()))
            throw DataError("cc_vs_games: checkpoint exceeds corpus size");
        prev = n_g;
        GoNetwork net = build_network(games.subspan(0, n_g), config, n_vertices);
        out.emplace_back(n_g, clustering_coefficient(net).average);
    }
    return out;
}

SlopeFit fit_loglog(std::span<const double> xs, std::span<const double> ys) {
    std::vector<double> lx, ly;
    for (size_t i = 0; i < xs.size(); ++i)
        if (xs[i] > 0 && ys[i] > 0) {
            lx.push_back(std::log10(xs[i]));
            ly.push_back(std::log10(ys[i]));
        }
    if (lx.size() < 3)
        throw DataError("fit_loglog: fewer than 3 positive points");
    double n = static_cast<double>(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    SlopeFit fit;
    double denom = n * sxx - sx * sx;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss = 0;
    for (size_t i = 0; i < lx.size(); ++i) {
        double r = ly[i] - (fit.slope * lx[i] + fit.intercept);
        ss += r * r;
    }
    fit.residual_rms = std::sqrt(ss / n);
    fit.n_points = lx.size();
    return fit;
}

SlopeFit fit_slope(const RankedDistribution& dist, int64_t r_min, int64_t r_max,
                   bool use_integrated) {
    if (r_min < 1 || r_min >= r_max)
        throw DataError("fit_slope: invalid rank range");
    r_max = std::min<int64_t>(r_max, static_cast<int64_t>(dist.size()));
    std::vector<double> xs, ys;
    for (int64_t r = r_min; r <= r_max; ++r) {
        xs.push_back(static_cast<double>(r));
        ys.push_back(use_integrated ? dist.integrated[r - 1]
                                    : static_cast<double>(dist.counts[r - 1]));
    }
    SlopeFit fit = fit_loglog(xs, ys);
    fit.r_min = r_min;
    fit.r_max = r_max;
    return fit;
}

SlopeFit fit_degree_curve(const DegreeCurve& curve) {
    std::vector<double> xs, ys;
    for (size_t i = 0; i < curve.k.size(); ++i)
        if (curve.k[i] >= 1 && curve.p[i] > 0) {
            xs.push_back(curve.k_norm[i]);
            ys.push_back(curve.p[i]);
        }
    return fit_loglog(xs, ys);
}

}  // namespace gonet
