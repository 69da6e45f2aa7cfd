#include "gonet/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "gonet/kernels.hpp"

namespace gonet {

double GoogleMatrix::trace() const {
    double t = 0;
    for (int i = 0; i < n; ++i)
        t += at(i, i);
    return t;
}

double GoogleMatrix::column_sum(int col) const {
    double s = 0;
    for (int i = 0; i < n; ++i)
        s += at(i, col);
    return s;
}

GoogleMatrix build_google(const GoNetwork& net, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw DataError("alpha must be in (0, 1]");
    const int n = net.n_vertices;
    GoogleMatrix g;
    g.n = n;
    g.alpha = alpha;
    g.data.assign(static_cast<size_t>(n) * n, 0.0);

    std::vector<double> col_sum(n, 0.0);
    for (const auto& [edge, w] : net.edges) {
        g.data[static_cast<size_t>(edge.first) * n + edge.second] += static_cast<double>(w);
        col_sum[edge.first] += static_cast<double>(w);
    }
    const double teleport = (1.0 - alpha) / n;
    const double uniform = 1.0 / n;
    for (int j = 0; j < n; ++j) {
        double* col = g.data.data() + static_cast<size_t>(j) * n;
        if (col_sum[j] == 0.0) {
            for (int i = 0; i < n; ++i)
                col[i] = alpha * uniform + teleport;
        } else {
            const double inv = 1.0 / col_sum[j];
            for (int i = 0; i < n; ++i)
                col[i] = alpha * (col[i] * inv) + teleport;
        }
    }
    return g;
}

const char* rank_kind_name(RankKind kind) {
    switch (kind) {
        case RankKind::PageRank: return "pagerank";
        case RankKind::CheiRank: return "cheirank";
        case RankKind::Hub: return "hub";
        case RankKind::Authority: return "authority";
    }
    return "?";
}

std::vector<int32_t> ranks_of(std::span<const double> values) {
    std::vector<int32_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int32_t a, int32_t b) { return values[a] > values[b]; });
    std::vector<int32_t> ranks(values.size());
    for (size_t pos = 0; pos < order.size(); ++pos)
        ranks[order[pos]] = static_cast<int32_t>(pos) + 1;
    return ranks;
}

RankingVector pagerank(const GoogleMatrix& g, double tol, int max_iter) {
    if (tol <= 0)
        throw DataError("pagerank: tol must be positive");
    const int n = g.n;
    std::vector<double> x(n, 1.0 / n), y(n);
    double residual = 0;
    for (int iter = 1; iter <= max_iter; ++iter) {
        kernels::matvec(y.data(), g.data.data(), x.data(), n);
        double norm = kernels::l1_norm(y.data(), n);
        kernels::scale(y.data(), n, 1.0 / norm);
        residual = kernels::l1_diff(x.data(), y.data(), n);
        x.swap(y);
        if (residual < tol) {
            RankingVector result;
            result.kind = RankKind::PageRank;
            result.values = std::move(x);
            result.ranks = ranks_of(result.values);
            result.iterations = iter;
            result.residual = residual;
            return result;
        }
    }
    throw NumericError("pagerank: power iteration did not converge after " +
                       std::to_string(max_iter) + " iterations (last residual " +
                       std::to_string(residual) +
                       "); the dense solver (spectrum) is the fallback");
}

RankingVector cheirank(const GoNetwork& net, double alpha, double tol, int max_iter) {
    RankingVector result = pagerank(build_google(transpose(net), alpha), tol, max_iter);
    result.kind = RankKind::CheiRank;
    return result;
}

HitsResult hits(const GoNetwork& net, double tol, int max_iter, bool weighted) {
    if (net.edges.empty())
        throw DataError("hits: network has no edges");
    const int n = net.n_vertices;
    // w[j*n+i] = weight of edge j->i; wt is the reverse orientation
    std::vector<double> w(static_cast<size_t>(n) * n, 0.0), wt(static_cast<size_t>(n) * n, 0.0);
    for (const auto& [edge, weight] : net.edges) {
        double value = weighted ? static_cast<double>(weight) : 1.0;
        w[static_cast<size_t>(edge.first) * n + edge.second] = value;
        wt[static_cast<size_t>(edge.second) * n + edge.first] = value;
    }

    std::vector<double> hub(n, 1.0 / std::sqrt(static_cast<double>(n))), auth(n, 0.0);
    std::vector<double> next(n), diff(n);
    double residual = 0;
    for (int iter = 1; iter <= max_iter; ++iter) {
        // authorities gather from in-links, hubs from out-links
        kernels::matvec(next.data(), w.data(), hub.data(), n);
        double an = kernels::l2_norm(next.data(), n);
        if (an == 0)
            throw NumericError("hits: authority vector collapsed to zero");
        kernels::scale(next.data(), n, 1.0 / an);
        diff = next;
        kernels::axpy(diff.data(), auth.data(), n, -1.0);
        residual = kernels::l2_norm(diff.data(), n);
        auth.swap(next);

        kernels::matvec(next.data(), wt.data(), auth.data(), n);
        double hn = kernels::l2_norm(next.data(), n);
        if (hn == 0)
            throw NumericError("hits: hub vector collapsed to zero");
        kernels::scale(next.data(), n, 1.0 / hn);
        diff = next;
        kernels::axpy(diff.data(), hub.data(), n, -1.0);
        residual += kernels::l2_norm(diff.data(), n);
        hub.swap(next);

        if (residual < tol) {
            HitsResult result;
            auto finish = [n](std::vector<double> v, RankKind kind, int iters, double res) {
                double l1 = kernels::l1_norm(v.data(), n);
                kernels::scale(v.data(), n, 1.0 / l1);
                RankingVector rv;
                rv.kind = kind;
                rv.values = std::move(v);
                rv.ranks = ranks_of(rv.values);
                rv.iterations = iters;
                rv.residual = res;
                return rv;
            };
            result.hubs = finish(std::move(hub), RankKind::Hub, iter, residual);
            result.authorities = finish(std::move(auth), RankKind::Authority, iter, residual);
            return result;
        }
    }
    throw NumericError("hits: did not converge after " + std::to_string(max_iter) +
                       " iterations (last residual " + std::to_string(residual) + ")");
}

SpectralReport full_spectrum(const GoogleMatrix& g, int m, std::span<const double> percents) {
    const int n = g.n;
    Eigen::Map<const Eigen::MatrixXd> mat(g.data.data(), n, n);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(mat, true);
    if (solver.info() != Eigen::Success)
        throw NumericError("dense eigensolver failed to converge");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    const auto& raw = solver.eigenvalues();
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        double ma = std::abs(raw[a]), mb = std::abs(raw[b]);
        if (ma != mb)
            return ma > mb;
        if (raw[a].real() != raw[b].real())
            return raw[a].real() > raw[b].real();
        return raw[a].imag() > raw[b].imag();
    });

    SpectralReport report;
    report.eigenvalues.reserve(n);
    for (int i : order)
        report.eigenvalues.push_back(raw[i]);

    std::complex<double> lambda_sum =
        std::accumulate(report.eigenvalues.begin(), report.eigenvalues.end(),
                        std::complex<double>{0, 0});
    if (std::abs(lambda_sum - std::complex<double>{g.trace(), 0}) > 1e-6)
        throw NumericError("eigensolver sanity check failed: sum(lambda) != trace(G)");

    m = std::min(m, n);
    const auto& vectors = solver.eigenvectors();
    for (int rank = 0; rank < m; ++rank) {
        Eigen::VectorXcd v = vectors.col(order[rank]);
        double norm2 = 0;
        for (int i = 0; i < n; ++i)
            norm2 += std::norm(v[i]);
        v /= std::sqrt(norm2);
        // fix the global phase: largest-modulus entry real positive
        int peak = 0;
        for (int i = 1; i < n; ++i)
            if (std::abs(v[i]) > std::abs(v[peak]))
                peak = i;
        if (std::abs(v[peak]) > 0)
            v *= std::conj(v[peak]) / std::abs(v[peak]);
        report.top_vectors.emplace_back(v.data(), v.data() + n);
    }

    for (double p : percents)
        report.lambda_c.emplace_back(p, lambda_c(report.eigenvalues, p));
    return report;
}

double lambda_c(std::span<const std::complex<double>> eigenvalues, double percent) {
    if (eigenvalues.empty())
        throw DataError("lambda_c: empty eigenvalue set");
    if (!(percent > 0 && percent < 100))
        throw DataError("lambda_c: percent must be in (0, 100)");
    std::vector<double> moduli;
    moduli.reserve(eigenvalues.size());
    for (const auto& ev : eigenvalues)
        moduli.push_back(std::abs(ev));
    std::sort(moduli.begin(), moduli.end());
    auto k = static_cast<size_t>(std::floor(percent * moduli.size() / 100.0));
    k = std::clamp<size_t>(k, 1, moduli.size());
    return moduli[k - 1];
}

std::vector<double> localization_profile(std::span<const std::complex<double>> eigvec,
                                         std::span<const uint16_t> freq_ranking, int M) {
    double norm2 = 0;
    for (const auto& z : eigvec)
        norm2 += std::norm(z);
    if (norm2 == 0)
        throw DataError("localization_profile: zero vector");
    size_t count = std::min<size_t>(M, freq_ranking.size());
    std::vector<double> profile(count);
    for (size_t r = 0; r < count; ++r)
        profile[r] = std::norm(eigvec[freq_ranking[r]]) / norm2;
    return profile;
}

std::vector<TopEntry> top_entries(std::span<const std::complex<double>> eigvec, int k,
                                  const ClassTable& table) {
    double norm2 = 0;
    for (const auto& z : eigvec)
        norm2 += std::norm(z);
    std::vector<int> order(eigvec.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::norm(eigvec[a]) > std::norm(eigvec[b]);
    });
    std::vector<TopEntry> out;
    for (int pos = 0; pos < k && pos < static_cast<int>(order.size()); ++pos) {
        TopEntry entry;
        entry.id = static_cast<uint16_t>(order[pos]);
        entry.weight2 = norm2 > 0 ? std::norm(eigvec[order[pos]]) / norm2 : 0.0;
        entry.diagram = render_ascii(table.at(entry.id));
        out.push_back(std::move(entry));
    }
    return out;
}

namespace {

// inversion count via merge sort; values are a permutation so there are no ties
int64_t count_inversions(std::vector<int32_t>& v, std::vector<int32_t>& buf, size_t lo,
                         size_t hi) {
    if (hi - lo < 2)
        return 0;
    size_t mid = (lo + hi) / 2;
    int64_t inv = count_inversions(v, buf, lo, mid) + count_inversions(v, buf, mid, hi);
    size_t a = lo, b = mid, out = lo;
    while (a < mid && b < hi) {
        if (v[a] <= v[b]) {
            buf[out++] = v[a++];
        } else {
            inv += static_cast<int64_t>(mid - a);
            buf[out++] = v[b++];
        }
    }
    while (a < mid)
        buf[out++] = v[a++];
    while (b < hi)
        buf[out++] = v[b++];
    std::copy(buf.begin() + lo, buf.begin() + hi, v.begin() + lo);
    return inv;
}

}  // namespace

RankCorrelation rank_correlation(const RankingVector& pr, const RankingVector& cr) {
    if (pr.ranks.size() != cr.ranks.size())
        throw DataError("rank_correlation: size mismatch");
    const size_t n = pr.ranks.size();
    RankCorrelation out;
    out.scatter.reserve(n);
    for (size_t v = 0; v < n; ++v)
        out.scatter.emplace_back(pr.ranks[v], cr.ranks[v]);

    // K* sequence in K order; tau = 1 - 4*inversions / (n(n-1))
    std::vector<int32_t> seq(n);
    for (size_t v = 0; v < n; ++v)
        seq[pr.ranks[v] - 1] = cr.ranks[v];
    std::vector<int32_t> buf(n);
    int64_t inversions = count_inversions(seq, buf, 0, n);
    out.kendall_tau =
        n < 2 ? 1.0
              : 1.0 - 4.0 * static_cast<double>(inversions) /
                          (static_cast<double>(n) * (static_cast<double>(n) - 1.0));
    return out;
}

}  // namespace gonet
