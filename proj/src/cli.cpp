#include "gonet/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gonet/netbuild.hpp"
#include "gonet/plaquette.hpp"
#include "gonet/sgf.hpp"
#include "gonet/spectral.hpp"
#include "gonet/stats.hpp"
#include "gonet/version.hpp"

namespace gonet::cli {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

const ClassTable& class_table() {
    static ClassTable table = ClassTable::enumerate();
    return table;
}

fs::path resolve_out_dir(const std::string& flag) {
    if (!flag.empty())
        return flag;
    if (const char* env = std::getenv("GONET_OUT_DIR"))
        return env;
    return ".";
}

std::string read_digest(const fs::path& json_path) {
    std::ifstream in(json_path, std::ios::binary);
    if (!in)
        return "";
    try {
        ordered_json j;
        in >> j;
        if (j.contains("meta") && j["meta"].contains("corpus_digest"))
            return j["meta"]["corpus_digest"].get<std::string>();
    } catch (const nlohmann::json::exception&) {
    }
    return "";
}

ordered_json meta_json(const FileMeta& meta) {
    return ordered_json{
        {"tool", meta.tool}, {"version", kVersion}, {"corpus_digest", meta.corpus_digest}};
}

void write_json(const fs::path& path, const ordered_json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw DataError("cannot write " + path.string());
    out << j.dump() << "\n";
}

class CsvWriter {
public:
    CsvWriter(const fs::path& path, const FileMeta& meta, const std::string& config_line)
        : out_(path, std::ios::binary) {
        if (!out_)
            throw DataError("cannot write " + path.string());
        out_ << "# tool=gonet version=" << kVersion << "\n";
        out_ << "# corpus=" << meta.corpus_digest << "\n";
        out_ << "# config: " << config_line << "\n";
        out_ << std::setprecision(15);
    }
    std::ofstream& stream() { return out_; }

private:
    std::ofstream out_;
};

void write_distribution_csv(const fs::path& path, const RankedDistribution& dist,
                            const FileMeta& meta, const std::string& config_line) {
    CsvWriter csv(path, meta, config_line);
    csv.stream() << "rank,label,count,integrated\n";
    for (size_t r = 0; r < dist.size(); ++r)
        csv.stream() << (r + 1) << "," << dist.labels[r] << "," << dist.counts[r] << ","
                     << dist.integrated[r] << "\n";
}

void print_fit(const std::string& name, const SlopeFit& fit) {
    std::cout << name << ": slope " << std::setprecision(6) << fit.slope << " over ranks ["
              << fit.r_min << "," << fit.r_max << "], rms residual " << fit.residual_rms << "\n";
}

// ---- subcommand state ----

struct EnumerateArgs {
    std::string geometry;
    std::string out;
    std::string out_dir;
};

struct BuildArgs {
    std::vector<std::string> inputs;
    bool strict = false;
    int d = 4;
    int threads = 2;
    std::string out;
    std::string events_out;
    std::string out_dir;
};

struct StatsArgs {
    std::string net;
    std::string events;
    std::string which;
    int k = 2;
    int d = 4;
    int64_t fit_min = 1;
    int64_t fit_max = 500;
    std::string checkpoints;
    std::string out_dir;
};

struct RankArgs {
    std::string net;
    std::string alg = "all";
    double alpha = 1.0;
    double tol = 1e-12;
    int max_iter = 100000;
    bool unweighted_hits = false;
    std::string out_dir;
};

struct SpectrumArgs {
    std::string net;
    double alpha = 1.0;
    int top = 7;
    std::string percentiles = "80,90,95,99";
    int profile_depth = 100;
    std::string out_dir;
};

struct BaselineArgs {
    std::string events;
    int d = 4;
    uint64_t seed = 0;
    bool spectral = false;
    std::string out_dir;
};

std::vector<double> parse_percentiles(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(std::stod(item));
    return out;
}

std::vector<int64_t> parse_checkpoints(const std::string& text, int64_t n_games) {
    std::vector<int64_t> out;
    if (!text.empty()) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty())
                out.push_back(std::stoll(item));
        return out;
    }
    // default: 1, 2, 5, 10, ... up to the corpus size
    for (int64_t base = 1; base < n_games; base *= 10)
        for (int64_t mult : {1, 2, 5}) {
            int64_t value = base * mult;
            if (value < n_games)
                out.push_back(value);
        }
    out.push_back(n_games);
    return out;
}

ordered_json ranking_json(const RankingVector& rv, const FileMeta& meta, double alpha,
                          double tol) {
    ordered_json j;
    j["meta"] = meta_json(meta);
    j["kind"] = rank_kind_name(rv.kind);
    j["alpha"] = alpha;
    j["tol"] = tol;
    j["iterations"] = rv.iterations;
    j["residual"] = rv.residual;
    j["values"] = rv.values;
    j["ranks"] = rv.ranks;
    return j;
}

// ---- subcommand bodies ----

int cmd_enumerate(const EnumerateArgs& args) {
    const ClassTable& table = class_table();
    int interior = 0, edge = 0, corner = 0;
    for (const auto& cls : table.classes()) {
        interior += cls.geometry == Geometry::Interior;
        edge += cls.geometry == Geometry::Edge;
        corner += cls.geometry == Geometry::Corner;
    }

    ordered_json classes = ordered_json::array();
    for (const auto& cls : table.classes()) {
        if (!args.geometry.empty() && args.geometry != geometry_name(cls.geometry))
            continue;
        classes.push_back({{"id", cls.id},
                           {"geometry", geometry_name(cls.geometry)},
                           {"cells", cells_string(cls.canonical)},
                           {"orbit_size", cls.orbit_size}});
    }
    ordered_json j;
    j["meta"] = meta_json({});
    j["total"] = table.size();
    j["interior"] = interior;
    j["edge"] = edge;
    j["corner"] = corner;
    j["classes"] = std::move(classes);

    fs::path out = args.out.empty() ? resolve_out_dir(args.out_dir) / "census.json"
                                    : fs::path(args.out);
    write_json(out, j);
    std::cout << table.size() << " classes (" << interior << " interior / " << edge << " edge / "
              << corner << " corner)\n";
    std::cout << "census written to " << out.string() << "\n";
    return 0;
}

int cmd_build(const BuildArgs& args) {
    std::vector<fs::path> paths(args.inputs.begin(), args.inputs.end());
    Corpus corpus = load_corpus(paths, {.strict = args.strict});
    for (const auto& warning : corpus.warnings)
        std::cerr << "warning: " << warning << "\n";
    for (const auto& source : corpus.sources)
        std::cout << source.path << ": " << source.n_games << " games\n";
    if (corpus.games.empty())
        throw DataError("no games loaded");

    FileMeta meta{.corpus_digest = digest_hex(corpus.digest())};
    std::vector<GameEvents> events = extract_all(corpus.games, class_table(), args.threads);
    GoNetwork net = build_network(events, {.d = args.d});

    fs::path out_dir = resolve_out_dir(args.out_dir);
    fs::path net_path = args.out.empty() ? out_dir / "net.json" : fs::path(args.out);
    save_network(net_path, net, meta);
    std::cout << "corpus " << meta.corpus_digest << ": " << net.n_games << " games, "
              << net.total_moves() << " moves, " << net.edges.size() << " distinct edges, "
              << net.total_edge_weight() << " links (d=" << args.d << ")\n";
    std::cout << "network written to " << net_path.string() << "\n";

    if (!args.events_out.empty()) {
        fs::path events_path = fs::path(args.events_out);
        save_events(events_path, events, meta);
        std::cout << "events written to " << events_path.string() << "\n";
    }
    return 0;
}

int cmd_stats(const StatsArgs& args) {
    fs::path out_dir = resolve_out_dir(args.out_dir);
    FileMeta meta;

    GoNetwork net;
    bool have_net = false;
    if (!args.net.empty()) {
        net = load_network(args.net);
        meta.corpus_digest = read_digest(args.net);
        have_net = true;
    }
    std::vector<GameEvents> events;
    bool have_events = false;
    if (!args.events.empty()) {
        events = load_events(args.events);
        if (meta.corpus_digest.empty())
            meta.corpus_digest = read_digest(args.events);
        have_events = true;
    }
    auto need_net = [&] {
        if (!have_net)
            throw DataError("--which " + args.which + " needs --net");
    };
    auto need_events = [&] {
        if (!have_events)
            throw DataError("--which " + args.which + " needs --events");
    };

    if (args.which == "zipf") {
        need_net();
        RankedDistribution dist = move_frequency(net);
        write_distribution_csv(out_dir / "zipf_moves.csv", dist, meta, "which=zipf");
        print_fit("zipf", fit_slope(dist, args.fit_min, args.fit_max));
    } else if (args.which == "seq") {
        need_events();
        RankedDistribution dist = sequence_frequency(events, args.k, args.d);
        std::string name = "seq_k" + std::to_string(args.k) + "_d" + std::to_string(args.d);
        write_distribution_csv(out_dir / (name + ".csv"), dist, meta, "which=" + name);
        print_fit(name, fit_slope(dist, 1, static_cast<int64_t>(dist.size())));
    } else if (args.which == "c1" || args.which == "c2" || args.which == "c3") {
        need_events();
        RankedDistribution dist;
        std::string config;
        if (args.which == "c1") {
            dist = variant_c1(events);
            config = "which=c1";
        } else if (args.which == "c2") {
            dist = variant_c2(events, args.d);
            config = "which=c2 d=" + std::to_string(args.d);
        } else {
            dist = variant_c3(events, args.d, args.k);
            config = "which=c3 d=" + std::to_string(args.d) + " k=" + std::to_string(args.k);
        }
        write_distribution_csv(out_dir / (args.which + ".csv"), dist, meta, config);
        if (dist.size() >= 3)
            print_fit(args.which, fit_slope(dist, 1, static_cast<int64_t>(dist.size())));
    } else if (args.which == "pd") {
        need_events();
        std::vector<double> p = distance_distribution(events);
        CsvWriter csv(out_dir / "pd.csv", meta, "which=pd");
        csv.stream() << "d,P\n";
        for (size_t k = 0; k < p.size(); ++k)
            csv.stream() << k << "," << p[k] << "\n";
    } else if (args.which == "degrees") {
        need_net();
        auto [in_curve, out_curve] = degree_distributions(net, false);
        auto [in_w, out_w] = degree_distributions(net, true);
        auto dump = [&](const fs::path& path, const DegreeCurve& curve, const std::string& cfg) {
            CsvWriter csv(path, meta, cfg);
            csv.stream() << "k,k_norm,p\n";
            for (size_t i = 0; i < curve.k.size(); ++i)
                csv.stream() << curve.k[i] << "," << curve.k_norm[i] << "," << curve.p[i] << "\n";
        };
        dump(out_dir / "degrees_in.csv", in_curve, "which=degrees side=in");
        dump(out_dir / "degrees_out.csv", out_curve, "which=degrees side=out");
        dump(out_dir / "degrees_in_weighted.csv", in_w, "which=degrees side=in weighted");
        dump(out_dir / "degrees_out_weighted.csv", out_w, "which=degrees side=out weighted");
        SlopeFit fin = fit_degree_curve(in_curve);
        SlopeFit fout = fit_degree_curve(out_curve);
        std::cout << "degrees: in slope " << std::setprecision(6) << fin.slope << ", out slope "
                  << fout.slope << "\n";
    } else if (args.which == "cc") {
        if (have_events) {
            std::vector<int64_t> checkpoints =
                parse_checkpoints(args.checkpoints, static_cast<int64_t>(events.size()));
            auto curve = cc_vs_games(events, {.d = args.d}, checkpoints);
            CsvWriter csv(out_dir / "cc.csv", meta, "which=cc d=" + std::to_string(args.d));
            csv.stream() << "n_g,cc\n";
            for (auto [n_g, cc] : curve)
                csv.stream() << n_g << "," << cc << "\n";
            std::cout << "cc at full corpus: " << std::setprecision(6) << curve.back().second
                      << "\n";
        } else {
            need_net();
            ClusteringResult cc = clustering_coefficient(net);
            CsvWriter csv(out_dir / "cc.csv", meta, "which=cc");
            csv.stream() << "n_g,cc\n";
            csv.stream() << net.n_games << "," << cc.average << "\n";
            std::cout << "cc: " << std::setprecision(6) << cc.average << " over " << cc.n_counted
                      << " vertices\n";
        }
    } else {
        throw DataError("unknown --which value: " + args.which);
    }
    return 0;
}

int cmd_rank(const RankArgs& args) {
    GoNetwork net = load_network(args.net);
    FileMeta meta{.corpus_digest = read_digest(args.net)};
    fs::path out_dir = resolve_out_dir(args.out_dir);

    bool all = args.alg == "all";
    RankingVector pr, cr;
    bool have_pr = false, have_cr = false;
    if (all || args.alg == "pagerank") {
        pr = pagerank(build_google(net, args.alpha), args.tol, args.max_iter);
        write_json(out_dir / "pagerank.json", ranking_json(pr, meta, args.alpha, args.tol));
        std::cout << "pagerank: " << pr.iterations << " iterations, residual " << pr.residual
                  << "\n";
        have_pr = true;
    }
    if (all || args.alg == "cheirank") {
        cr = cheirank(net, args.alpha, args.tol, args.max_iter);
        write_json(out_dir / "cheirank.json", ranking_json(cr, meta, args.alpha, args.tol));
        std::cout << "cheirank: " << cr.iterations << " iterations, residual " << cr.residual
                  << "\n";
        have_cr = true;
    }
    if (all || args.alg == "hits") {
        HitsResult hr = hits(net, args.tol, args.max_iter, !args.unweighted_hits);
        ordered_json j;
        j["meta"] = meta_json(meta);
        j["weighted"] = !args.unweighted_hits;
        j["tol"] = args.tol;
        j["iterations"] = hr.hubs.iterations;
        j["hubs"] = {{"values", hr.hubs.values}, {"ranks", hr.hubs.ranks}};
        j["authorities"] = {{"values", hr.authorities.values}, {"ranks", hr.authorities.ranks}};
        write_json(out_dir / "hits.json", j);
        std::cout << "hits: " << hr.hubs.iterations << " iterations\n";
    }
    if (!all && args.alg != "pagerank" && args.alg != "cheirank" && args.alg != "hits")
        throw DataError("unknown --alg value: " + args.alg);

    if (have_pr && have_cr) {
        RankCorrelation corr = rank_correlation(pr, cr);
        CsvWriter csv(out_dir / "kstar_vs_k.csv", meta,
                      "alg=pagerank+cheirank alpha=" + std::to_string(args.alpha) +
                          " kendall_tau=" + std::to_string(corr.kendall_tau));
        csv.stream() << "vertex,K,Kstar\n";
        for (size_t v = 0; v < corr.scatter.size(); ++v)
            csv.stream() << v << "," << corr.scatter[v].first << "," << corr.scatter[v].second
                         << "\n";
        std::cout << "kendall tau (K vs K*): " << std::setprecision(6) << corr.kendall_tau
                  << "\n";
    }
    return 0;
}

int cmd_spectrum(const SpectrumArgs& args) {
    GoNetwork net = load_network(args.net);
    FileMeta meta{.corpus_digest = read_digest(args.net)};
    fs::path out_dir = resolve_out_dir(args.out_dir);

    GoogleMatrix g = build_google(net, args.alpha);
    std::vector<double> percents = parse_percentiles(args.percentiles);
    SpectralReport report = full_spectrum(g, args.top, percents);
    std::vector<uint16_t> freq_rank = frequency_ranking(net);

    ordered_json j;
    j["meta"] = meta_json(meta);
    j["alpha"] = args.alpha;
    j["n"] = g.n;
    j["trace"] = g.trace();
    ordered_json evs = ordered_json::array();
    for (const auto& ev : report.eigenvalues)
        evs.push_back({ev.real(), ev.imag()});
    j["eigenvalues"] = std::move(evs);
    ordered_json lc = ordered_json::array();
    for (auto [p, r] : report.lambda_c)
        lc.push_back({p, r});
    j["lambda_c"] = std::move(lc);

    ordered_json vectors = ordered_json::array();
    std::ofstream moves(out_dir / "eigenvector_moves.txt", std::ios::binary);
    if (!moves)
        throw DataError("cannot write eigenvector_moves.txt");
    moves << "# tool=gonet version=" << kVersion << "\n# corpus=" << meta.corpus_digest << "\n";
    moves << std::setprecision(6);
    for (size_t i = 0; i < report.top_vectors.size(); ++i) {
        const auto& vec = report.top_vectors[i];
        const auto& ev = report.eigenvalues[i];
        ordered_json entry;
        entry["eigenvalue"] = {ev.real(), ev.imag()};
        ordered_json vj = ordered_json::array();
        for (const auto& z : vec)
            vj.push_back({z.real(), z.imag()});
        entry["vector"] = std::move(vj);
        entry["localization"] = localization_profile(vec, freq_rank, args.profile_depth);
        vectors.push_back(std::move(entry));

        moves << "\neigenvector " << (i + 1) << ": lambda = (" << ev.real() << ", " << ev.imag()
              << "), |lambda| = " << std::abs(ev) << "\n";
        for (const TopEntry& top : top_entries(vec, 10, class_table())) {
            moves << "class " << top.id << "  |psi|^2 = " << top.weight2 << "\n"
                  << top.diagram;
        }
    }
    j["top_vectors"] = std::move(vectors);
    write_json(out_dir / "spectrum.json", j);

    std::cout << "spectrum: lambda_1 = " << std::setprecision(10)
              << std::abs(report.eigenvalues[0])
              << ", |lambda_2| = " << std::abs(report.eigenvalues[1]) << "\n";
    for (auto [p, r] : report.lambda_c)
        std::cout << "lambda_c(" << p << "%) = " << r << "\n";
    return 0;
}

int cmd_baseline(const BaselineArgs& args) {
    std::vector<GameEvents> events = load_events(args.events);
    FileMeta meta{.corpus_digest = read_digest(args.events)};
    fs::path out_dir = resolve_out_dir(args.out_dir);

    std::vector<GameEvents> shuffled = shuffle_baseline(events, args.seed);
    GoNetwork original = build_network(events, {.d = args.d});
    GoNetwork randomized = build_network(shuffled, {.d = args.d});
    save_network(out_dir / "net_shuffled.json", randomized, meta);

    int64_t common = 0;
    for (const auto& [edge, w] : original.edges) {
        auto it = randomized.edges.find(edge);
        if (it != randomized.edges.end())
            common += std::min(w, it->second);
    }
    ordered_json j;
    j["meta"] = meta_json(meta);
    j["seed"] = args.seed;
    j["d"] = args.d;
    j["vertex_counts_identical"] = original.vertex_counts == randomized.vertex_counts;
    j["edges_identical"] = original.edges == randomized.edges;
    j["n_edges_original"] = original.edges.size();
    j["n_edges_shuffled"] = randomized.edges.size();
    j["total_weight_original"] = original.total_edge_weight();
    j["total_weight_shuffled"] = randomized.total_edge_weight();
    j["common_edge_weight"] = common;

    if (args.spectral) {
        SpectralReport orig_spec = full_spectrum(build_google(original, 1.0), 2, {});
        SpectralReport rand_spec = full_spectrum(build_google(randomized, 1.0), 2, {});
        j["lambda2_original"] = std::abs(orig_spec.eigenvalues[1]);
        j["lambda2_shuffled"] = std::abs(rand_spec.eigenvalues[1]);
    }
    write_json(out_dir / "baseline_report.json", j);
    std::cout << "baseline: vertex counts "
              << (original.vertex_counts == randomized.vertex_counts ? "identical" : "DIFFER")
              << ", edges " << (original.edges == randomized.edges ? "identical" : "differ")
              << "\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"go move-network analysis toolkit"};
    app.require_subcommand(1);

    EnumerateArgs enum_args;
    auto* enumerate = app.add_subcommand("enumerate-plaquettes", "dump the plaquette class census");
    enumerate->add_option("--geometry", enum_args.geometry, "filter: interior|edge|corner")
        ->check(CLI::IsMember({"interior", "edge", "corner"}));
    enumerate->add_option("--out", enum_args.out, "census JSON path");
    enumerate->add_option("--out-dir", enum_args.out_dir, "output directory");

    BuildArgs build_args;
    auto* build = app.add_subcommand("build", "parse SGF, replay, build the move network");
    build->add_option("--input", build_args.inputs, "SGF files or directories")->required();
    build->add_flag("--strict", build_args.strict, "abort on malformed files");
    build->add_option("--d", build_args.d, "Chebyshev link radius")->check(CLI::PositiveNumber);
    build->add_option("--threads", build_args.threads, "replay threads");
    build->add_option("--out", build_args.out, "network JSON path");
    build->add_option("--events", build_args.events_out, "also write per-game events JSON");
    build->add_option("--out-dir", build_args.out_dir, "output directory");

    StatsArgs stats_args;
    auto* stats = app.add_subcommand("stats", "frequency and graph statistics");
    stats->add_option("--net", stats_args.net, "network JSON from `build`");
    stats->add_option("--events", stats_args.events, "events JSON from `build --events`");
    stats->add_option("--which", stats_args.which, "zipf|seq|c1|c2|c3|pd|degrees|cc")->required();
    stats->add_option("--k", stats_args.k, "sequence length (seq: moves, c3: vectors)");
    stats->add_option("--d", stats_args.d, "link radius for seq/c2/c3/cc");
    stats->add_option("--fit-min", stats_args.fit_min, "first rank of the slope fit");
    stats->add_option("--fit-max", stats_args.fit_max, "last rank of the slope fit");
    stats->add_option("--checkpoints", stats_args.checkpoints, "cc: comma-separated n_g list");
    stats->add_option("--out-dir", stats_args.out_dir, "output directory");

    RankArgs rank_args;
    auto* rank = app.add_subcommand("rank", "PageRank / CheiRank / HITS");
    rank->add_option("--net", rank_args.net, "network JSON")->required();
    rank->add_option("--alg", rank_args.alg, "pagerank|cheirank|hits|all");
    rank->add_option("--alpha", rank_args.alpha, "damping factor in (0,1]");
    rank->add_option("--tol", rank_args.tol, "L1 convergence tolerance");
    rank->add_option("--max-iter", rank_args.max_iter, "iteration cap");
    rank->add_flag("--unweighted-hits", rank_args.unweighted_hits, "binarize HITS adjacency");
    rank->add_option("--out-dir", rank_args.out_dir, "output directory");

    SpectrumArgs spectrum_args;
    auto* spectrum = app.add_subcommand("spectrum", "full complex spectrum of G");
    spectrum->add_option("--net", spectrum_args.net, "network JSON")->required();
    spectrum->add_option("--alpha", spectrum_args.alpha, "damping factor in (0,1]");
    spectrum->add_option("--top", spectrum_args.top, "eigenvectors to extract");
    spectrum->add_option("--percentiles", spectrum_args.percentiles, "lambda_c percentiles");
    spectrum->add_option("--profile-depth", spectrum_args.profile_depth,
                         "localization profile length");
    spectrum->add_option("--out-dir", spectrum_args.out_dir, "output directory");

    BaselineArgs baseline_args;
    auto* baseline = app.add_subcommand("baseline", "shuffled null model");
    baseline->add_option("--events", baseline_args.events, "events JSON")->required();
    baseline->add_option("--d", baseline_args.d, "Chebyshev link radius");
    baseline->add_option("--shuffle-seed", baseline_args.seed, "RNG seed");
    baseline->add_flag("--spectral", baseline_args.spectral, "compare |lambda_2| before/after");
    baseline->add_option("--out-dir", baseline_args.out_dir, "output directory");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (enumerate->parsed())
            return cmd_enumerate(enum_args);
        if (build->parsed())
            return cmd_build(build_args);
        if (stats->parsed())
            return cmd_stats(stats_args);
        if (rank->parsed())
            return cmd_rank(rank_args);
        if (spectrum->parsed())
            return cmd_spectrum(spectrum_args);
        if (baseline->parsed())
            return cmd_baseline(baseline_args);
    } catch (const NumericError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 3;
    } catch (const Error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 1;
}

int run(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run(args);
}

}  // namespace gonet::cli
