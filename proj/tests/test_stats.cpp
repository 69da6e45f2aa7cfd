#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "gonet/stats.hpp"
#include "helpers.hpp"

using namespace gonet;

namespace {

std::vector<GameEvents> one_game(std::vector<std::tuple<int, int, uint16_t>> moves) {
    GameEvents game;
    game.game_id = "toy";
    int32_t i = 0;
    for (auto [h, v, cls] : moves) {
        game.events.push_back(MoveEvent{i, i, i % 2 ? Color::White : Color::Black,
                                        Coord{h, v}, cls});
        ++i;
    }
    return {game};
}

// Window oracle with a different algorithm: mark link flags, then count
// windows inside each maximal linked run.
int64_t window_count_oracle(std::span<const GameEvents> games, int k, int d) {
    int64_t total = 0;
    for (const auto& game : games) {
        if (game.events.empty())
            continue;
        std::vector<int> run_lengths;
        int run = 1;
        for (size_t i = 1; i < game.events.size(); ++i) {
            if (linked(game.events[i - 1], game.events[i], d)) {
                ++run;
            } else {
                run_lengths.push_back(run);
                run = 1;
            }
        }
        run_lengths.push_back(run);
        for (int len : run_lengths)
            if (len >= k)
                total += len - k + 1;
    }
    return total;
}

GoNetwork net_from_edges(int n, std::vector<std::tuple<int, int, int64_t>> edges) {
    GoNetwork net;
    net.n_vertices = n;
    net.vertex_counts.assign(n, 0);
    for (auto [from, to, w] : edges)
        net.edges[{static_cast<uint16_t>(from), static_cast<uint16_t>(to)}] += w;
    return net;
}

}  // namespace

TEST_SUITE("stats") {

TEST_CASE("move_frequency basics") {
    GoNetwork net;
    net.n_vertices = 5;
    net.vertex_counts = {0, 1, 0, 0, 0};
    RankedDistribution single = move_frequency(net);
    REQUIRE(single.size() == 1);
    CHECK(single.labels[0] == "1");
    CHECK(single.integrated == std::vector<double>{1.0});

    net.vertex_counts = {0, 2, 0, 0, 0};
    RankedDistribution doubled = move_frequency(net);
    REQUIRE(doubled.size() == 1);
    CHECK(doubled.counts[0] == 2);

    net.vertex_counts = {0, 0, 0, 0, 0};
    CHECK_THROWS_AS(move_frequency(net), DataError);
}

TEST_CASE("move_frequency hand tally on ten classified moves") {
    GoNetwork net;
    net.n_vertices = 6;
    // counts by class: 0 -> 4, 2 -> 3, 5 -> 2, 1 -> 1
    net.vertex_counts = {4, 1, 3, 0, 0, 2};
    RankedDistribution dist = move_frequency(net);
    CHECK(dist.labels == std::vector<std::string>{"0", "2", "5", "1"});
    CHECK(dist.counts == std::vector<int64_t>{4, 3, 2, 1});
    CHECK(dist.integrated[0] == doctest::Approx(1.0));
    CHECK(dist.integrated[1] == doctest::Approx(0.6));
    CHECK(dist.integrated[2] == doctest::Approx(0.3));
    CHECK(dist.integrated[3] == doctest::Approx(0.1));
    for (size_t r = 1; r < dist.size(); ++r)
        CHECK(dist.integrated[r] <= dist.integrated[r - 1]);
}

TEST_CASE("frequency_ranking breaks ties by ascending id") {
    GoNetwork net;
    net.n_vertices = 4;
    net.vertex_counts = {1, 3, 1, 3};
    CHECK(frequency_ranking(net) == std::vector<uint16_t>{1, 3, 0, 2});
}

TEST_CASE("sequence_frequency on crafted games") {
    auto adjacent = one_game({{10, 10, 1}, {10, 11, 2}});
    RankedDistribution two = sequence_frequency(adjacent, 2, 4);
    REQUIRE(two.size() == 1);
    CHECK(two.labels[0] == "1-2");
    CHECK(two.counts[0] == 1);

    // far jump between moves 2 and 3: one 2-sequence, no 3-sequence
    auto jump = one_game({{10, 10, 1}, {10, 11, 2}, {19, 19, 3}});
    CHECK(sequence_frequency(jump, 2, 4).size() == 1);
    CHECK(sequence_frequency(jump, 3, 4).size() == 0);
    CHECK_THROWS_AS(sequence_frequency(jump, 1, 4), DataError);
}

TEST_CASE("sequence_frequency totals match the run-length oracle") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        auto corpus = test::random_event_corpus(rng, 6, 50, 20);
        for (int k : {2, 3, 5})
            for (int d : {2, 4}) {
                RankedDistribution dist = sequence_frequency(corpus, k, d);
                int64_t total = 0;
                for (int64_t c : dist.counts)
                    total += c;
                CHECK(total == window_count_oracle(corpus, k, d));
            }
    }
}

TEST_CASE("sequence_frequency with k=2 and unlimited d counts every adjacent pair") {
    std::mt19937_64 rng(43);
    auto corpus = test::random_event_corpus(rng, 5, 30, 10);
    RankedDistribution dist = sequence_frequency(corpus, 2, 18);
    int64_t total = 0;
    for (int64_t c : dist.counts)
        total += c;
    int64_t expected = 0;
    for (const auto& game : corpus)
        expected += game.events.empty() ? 0 : static_cast<int64_t>(game.events.size()) - 1;
    CHECK(total == expected);
}

TEST_CASE("variant C1: immediate successor pairs of positions") {
    auto corpus = one_game({{3, 3, 1}, {16, 16, 2}});
    RankedDistribution dist = variant_c1(corpus);
    REQUIRE(dist.size() == 1);
    CHECK(dist.labels[0] == "3,3>16,16");
    CHECK(dist.counts[0] == 1);
}

TEST_CASE("variant C2: earliest later move within distance") {
    // all moves mutually distant -> empty
    auto far = one_game({{1, 1, 1}, {10, 10, 2}, {19, 19, 3}});
    CHECK(variant_c2(far, 4).size() == 0);

    // b is found across an intervening distant move
    auto skip = one_game({{10, 10, 1}, {19, 19, 2}, {11, 10, 3}});
    RankedDistribution dist = variant_c2(skip, 4);
    std::map<std::string, int64_t> got;
    for (size_t i = 0; i < dist.size(); ++i)
        got[dist.labels[i]] = dist.counts[i];
    // (10,10)->(11,10) via the skip; (19,19) has no later partner
    std::map<std::string, int64_t> want{{"10,10>11,10", 1}};
    CHECK(got == want);
}

TEST_CASE("variant C3: displacement tuples") {
    auto colinear = one_game({{10, 10, 1}, {10, 11, 2}, {10, 12, 3}});
    RankedDistribution pairs = variant_c3(colinear, 4, 2);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs.labels[0] == "(0,1)(0,1)");
    CHECK(pairs.counts[0] == 1);
    RankedDistribution singles = variant_c3(colinear, 4, 1);
    REQUIRE(singles.size() == 1);
    CHECK(singles.labels[0] == "(0,1)");
    CHECK(singles.counts[0] == 2);
}

TEST_CASE("distance distribution") {
    auto toy = one_game({{5, 5, 1}, {8, 6, 2}});
    std::vector<double> p = distance_distribution(toy);
    CHECK(p[3] == doctest::Approx(1.0));
    for (int k = 0; k < 19; ++k)
        if (k != 3)
            CHECK(p[k] == 0.0);

    std::mt19937_64 rng(47);
    auto corpus = test::random_event_corpus(rng, 6, 50, 10);
    std::vector<double> pd = distance_distribution(corpus);
    double sum = 0;
    for (double x : pd)
        sum += x;
    CHECK(sum == doctest::Approx(1.0));

    auto hand = one_game({{5, 5, 1}, {6, 5, 2}, {6, 9, 3}, {7, 9, 4}});
    std::vector<double> ph = distance_distribution(hand);
    CHECK(ph[1] == doctest::Approx(2.0 / 3));
    CHECK(ph[4] == doctest::Approx(1.0 / 3));
}

TEST_CASE("degree distributions on a single edge") {
    GoNetwork net = net_from_edges(10, {{2, 7, 5}});
    auto [in_curve, out_curve] = degree_distributions(net);
    CHECK(in_curve.k_max == 1);
    CHECK(out_curve.k_max == 1);
    CHECK(in_curve.p[0] == doctest::Approx(0.1));   // one vertex with in-degree > 0
    CHECK(in_curve.p[1] == doctest::Approx(0.0));
    CHECK(out_curve.p[0] == doctest::Approx(0.1));
    auto [in_w, out_w] = degree_distributions(net, true);
    CHECK(in_w.k_max == 5);  // weighted degree counts the multiplicity
}

TEST_CASE("degree curves match a direct census on random networks") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 10; ++trial) {
        auto corpus = test::random_event_corpus(rng, 4, 40, 12);
        GoNetwork net = build_network(corpus, {.d = 4}, 12);

        std::vector<int64_t> in_deg(12, 0), out_deg(12, 0);
        std::set<std::pair<int, int>> distinct;
        for (const auto& [edge, w] : net.edges) {
            distinct.insert(edge);
            out_deg[edge.first]++;
            in_deg[edge.second]++;
        }
        int64_t sum_in = 0, sum_out = 0;
        for (int v = 0; v < 12; ++v) {
            sum_in += in_deg[v];
            sum_out += out_deg[v];
        }
        CHECK(sum_in == static_cast<int64_t>(distinct.size()));
        CHECK(sum_in == sum_out);

        auto [in_curve, out_curve] = degree_distributions(net);
        for (size_t i = 0; i < in_curve.k.size(); ++i) {
            int64_t k = in_curve.k[i];
            int above = 0;
            for (int v = 0; v < 12; ++v)
                above += in_deg[v] > k;
            CHECK(in_curve.p[i] == doctest::Approx(above / 12.0));
        }
        for (size_t i = 0; i < out_curve.k.size(); ++i) {
            int64_t k = out_curve.k[i];
            int above = 0;
            for (int v = 0; v < 12; ++v)
                above += out_deg[v] > k;
            CHECK(out_curve.p[i] == doctest::Approx(above / 12.0));
        }
    }
}

TEST_CASE("clustering coefficient on crafted graphs") {
    GoNetwork triangle = net_from_edges(3, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
    ClusteringResult t = clustering_coefficient(triangle);
    CHECK(t.average == doctest::Approx(1.0));
    CHECK(t.n_counted == 3);

    GoNetwork star = net_from_edges(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 1}});
    ClusteringResult s = clustering_coefficient(star);
    CHECK(s.average == doctest::Approx(0.0));
    CHECK(s.n_counted == 1);  // leaves have degree 1

    GoNetwork lone = net_from_edges(3, {{0, 1, 1}});
    CHECK_THROWS_AS(clustering_coefficient(lone), DataError);

    // self-loops and double edges do not inflate anything
    GoNetwork noisy = net_from_edges(3, {{0, 1, 3}, {1, 0, 2}, {1, 1, 5}, {1, 2, 1}, {2, 0, 1}});
    ClusteringResult n = clustering_coefficient(noisy);
    CHECK(n.average == doctest::Approx(1.0));
}

TEST_CASE("clustering coefficient matches the O(n^3) oracle on random graphs") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 8;
        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        GoNetwork net;
        net.n_vertices = n;
        net.vertex_counts.assign(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && rng() % 3 == 0) {
                    net.edges[{static_cast<uint16_t>(i), static_cast<uint16_t>(j)}] =
                        1 + static_cast<int64_t>(rng() % 5);
                    adj[i][j] = adj[j][i] = true;
                }
        double sum = 0;
        int counted = 0;
        for (int i = 0; i < n; ++i) {
            int deg = 0;
            for (int j = 0; j < n; ++j)
                deg += adj[i][j];
            if (deg < 2)
                continue;
            int pairs = 0, closed = 0;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (adj[i][a] && adj[i][b]) {
                        ++pairs;
                        closed += adj[a][b];
                    }
            sum += static_cast<double>(closed) / pairs;
            ++counted;
        }
        if (counted == 0)
            continue;
        ClusteringResult res = clustering_coefficient(net);
        CHECK(res.n_counted == counted);
        CHECK(res.average == doctest::Approx(sum / counted).epsilon(1e-12));
    }
}

TEST_CASE("cc_vs_games checkpoints") {
    std::mt19937_64 rng(61);
    auto corpus = test::random_event_corpus(rng, 10, 30, 15);
    NetworkConfig cfg{.d = 4};
    std::vector<int64_t> checkpoints{2, 5, 10};
    auto curve = cc_vs_games(corpus, cfg, checkpoints, 15);
    REQUIRE(curve.size() == 3);
    for (auto [n_g, cc] : curve) {
        CHECK(cc >= 0.0);
        CHECK(cc <= 1.0);
    }
    CHECK(curve.back().second ==
          doctest::Approx(clustering_coefficient(build_network(corpus, cfg, 15)).average));

    // prefix networks nest
    GoNetwork five = build_network(std::span(corpus).subspan(0, 5), cfg, 15);
    GoNetwork ten = build_network(corpus, cfg, 15);
    for (const auto& [edge, w] : five.edges) {
        CHECK(ten.edges.count(edge) == 1);
        CHECK(ten.edges.at(edge) >= w);
    }

    std::vector<int64_t> bad{11};
    CHECK_THROWS_AS(cc_vs_games(corpus, cfg, bad, 15), DataError);
    std::vector<int64_t> unsorted{5, 2};
    CHECK_THROWS_AS(cc_vs_games(corpus, cfg, unsorted, 15), DataError);
}

TEST_CASE("fit_slope recovers exact power laws") {
    std::vector<double> xs, ys15, ys10;
    for (int r = 1; r <= 200; ++r) {
        xs.push_back(r);
        ys10.push_back(std::pow(r, -1.0));
        ys15.push_back(std::pow(r, -1.5));
    }
    CHECK(fit_loglog(xs, ys10).slope == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(fit_loglog(xs, ys15).slope == doctest::Approx(-1.5).epsilon(1e-9));
    CHECK(fit_loglog(xs, ys10).residual_rms == doctest::Approx(0.0));
}

TEST_CASE("fit_slope on noisy synthetic power law stays near the truth") {
    std::mt19937_64 rng(67);
    std::normal_distribution<double> noise(0.0, 0.02);
    std::vector<double> xs, ys;
    for (int r = 1; r <= 500; ++r) {
        xs.push_back(r);
        ys.push_back(std::pow(r, -1.2) * std::pow(10.0, noise(rng)));
    }
    SlopeFit fit = fit_loglog(xs, ys);
    CHECK(fit.slope == doctest::Approx(-1.2).epsilon(0.05));
}

TEST_CASE("fit_slope over a RankedDistribution rank window") {
    std::vector<std::pair<std::string, int64_t>> items;
    for (int i = 0; i < 50; ++i)
        items.emplace_back("c" + std::to_string(i), 1000000 / ((i + 1) * (i + 1)));
    RankedDistribution dist = rank_counts(std::move(items));
    SlopeFit fit = fit_slope(dist, 1, 50, false);
    CHECK(fit.slope == doctest::Approx(-2.0).epsilon(0.01));
    CHECK(fit.r_min == 1);
    CHECK(fit.r_max == 50);
    CHECK_THROWS_AS(fit_slope(dist, 10, 5), DataError);
    CHECK_THROWS_AS(fit_slope(dist, 0, 10), DataError);
}

TEST_CASE("move_frequency is exactly conserved by shuffle_baseline") {
    std::mt19937_64 rng(71);
    auto corpus = test::random_event_corpus(rng, 6, 40, 25);
    GoNetwork before = build_network(corpus, {.d = 4}, 25);
    GoNetwork after = build_network(shuffle_baseline(corpus, 5), {.d = 4}, 25);
    RankedDistribution a = move_frequency(before);
    RankedDistribution b = move_frequency(after);
    CHECK(a.labels == b.labels);
    CHECK(a.counts == b.counts);
    CHECK(a.integrated == b.integrated);
}

}  // TEST_SUITE
