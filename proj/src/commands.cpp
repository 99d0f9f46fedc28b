#include "isofdp/commands.hpp"

#include "isofdp/benchmark.hpp"
#include "isofdp/errors.hpp"
#include "isofdp/generators.hpp"
#include "isofdp/io.hpp"
#include "isofdp/metrics.hpp"
#include "isofdp/pipeline.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

namespace isofdp {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

struct GlobalOptions {
    std::string input;
    std::string format;
    std::string measure = "structure";
    std::size_t knn = kDefaultNeighborhood;
    std::size_t dim = kDefaultDim;
    double dc_percentile = kDefaultDcPercentile;
    std::size_t kmax = 0;
    std::uint64_t seed = 0;
    std::string out_dir = ".";
    std::size_t threads = 1;
    bool timings = false;
};

void add_global_options(CLI::App& cmd, GlobalOptions& g) {
    cmd.add_option("--input", g.input, "graph file");
    cmd.add_option("--format", g.format, "edges or gml (default: from extension)");
    cmd.add_option("--measure", g.measure, "structure, euclidean, jaccard, cosine or hamming");
    cmd.add_option("--knn", g.knn, "neighborhood size lambda");
    cmd.add_option("--dim", g.dim, "embedding dimension p");
    cmd.add_option("--dc-percentile", g.dc_percentile, "cutoff percentile of pairwise distances");
    cmd.add_option("--kmax", g.kmax, "largest k in the sweep (0: min(ceil(2 sqrt n), n-1))");
    cmd.add_option("--seed", g.seed, "master seed");
    cmd.add_option("--out-dir", g.out_dir, "output directory");
    cmd.add_option("--threads", g.threads, "worker threads (0: all cores)");
    cmd.add_flag("--timings", g.timings, "record stage timings in report.json");
}

PipelineConfig pipeline_config(const GlobalOptions& g) {
    PipelineConfig c;
    c.measure = parse_measure(g.measure);
    c.neighborhood = g.knn;
    c.dim = g.dim;
    c.dc_percentile = g.dc_percentile;
    if (g.kmax != 0) c.k_max = g.kmax;
    c.workers = g.threads;
    return c;
}

GraphFormat resolve_format(const GlobalOptions& g) {
    if (!g.format.empty()) return parse_format(g.format);
    return fs::path(g.input).extension() == ".gml" ? GraphFormat::Gml : GraphFormat::EdgeList;
}

Graph load_input(const GlobalOptions& g) {
    if (g.input.empty()) throw DomainError("--input is required");
    return read_graph(g.input, resolve_format(g));
}

fs::path prepare_out_dir(const GlobalOptions& g) {
    fs::path dir(g.out_dir);
    fs::create_directories(dir);
    return dir;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

ordered_json config_json(const GlobalOptions& g, const ResolvedConfig& r) {
    ordered_json c;
    c["input"] = g.input;
    c["format"] = resolve_format(g) == GraphFormat::Gml ? "gml" : "edges";
    c["measure"] = std::string(measure_name(r.measure));
    c["knn"] = g.knn;
    c["knn_resolved"] = r.neighborhood;
    c["dim"] = r.dim;
    c["dc_percentile"] = r.dc_percentile;
    c["kmax"] = r.k_max;
    c["seed"] = g.seed;
    return c;
}

void write_embedding_csv(std::ostream& out, const Graph& g, const Embedding& e) {
    out << "token";
    for (std::size_t j = 0; j < e.dim(); ++j) out << ",x" << j + 1;
    out << '\n';
    for (NodeId v = 0; v < g.node_count(); ++v) {
        out << g.token(v);
        for (std::size_t j = 0; j < e.dim(); ++j)
            out << ',' << fmt(e.coordinates(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(j)));
        out << '\n';
    }
}

int cmd_detect(const GlobalOptions& g, const std::string& truth_path, const std::string& truth_attr,
               std::ostream& out) {
    const Graph graph = load_input(g);
    std::optional<std::vector<std::size_t>> truth;
    if (!truth_path.empty()) truth = align_labels(graph, read_labels(fs::path(truth_path)));
    if (!truth_attr.empty()) {
        std::ifstream in(g.input);
        const std::vector<std::string> values = gml_node_attribute(in, truth_attr);
        LabelRecords records;
        for (NodeId v = 0; v < graph.node_count(); ++v) records.emplace_back(graph.token(v), values.at(v));
        truth = align_labels(graph, records);
    }

    const Detection det = detect(graph, pipeline_config(g));
    const Partition& part = det.partition();
    const fs::path dir = prepare_out_dir(g);

    ordered_json report;
    report["config"] = config_json(g, det.config);
    report["config"]["d_c"] = det.profile.d_c;
    report["k_star"] = det.sweep.k_star;
    ordered_json communities = ordered_json::object();
    for (NodeId v = 0; v < graph.node_count(); ++v) communities[graph.token(v)] = part[v];
    report["communities"] = communities;
    ordered_json sweep = ordered_json::array();
    for (const auto& e : det.sweep.entries) sweep.push_back({e.k, e.density});
    report["sweep"] = sweep;
    ordered_json metrics = ordered_json::object();
    if (truth) {
        metrics["nmi"] = nmi(*truth, part.labels());
        metrics["acc"] = accuracy(*truth, part.labels());
    }
    report["metrics"] = metrics;
    ordered_json timings = ordered_json::object();
    if (g.timings)
        for (const auto& [stage, ms] : det.timings_ms) timings[stage] = ms;
    report["timings_ms"] = timings;

    write_atomic(dir / "report.json", [&](std::ostream& o) { o << report.dump(2) << '\n'; });
    write_atomic(dir / "sweep.csv", [&](std::ostream& o) {
        o << "k,partition_density\n";
        for (const auto& e : det.sweep.entries) o << e.k << ',' << fmt(e.density) << '\n';
    });
    write_atomic(dir / "decision_graph.csv", [&](std::ostream& o) {
        const auto centers = top_centers(det.profile, det.sweep.k_star);
        const std::set<NodeId> center_set(centers.begin(), centers.end());
        o << "token,rho,delta,gamma,center,community\n";
        for (NodeId v = 0; v < graph.node_count(); ++v)
            o << graph.token(v) << ',' << det.profile.rho[v] << ',' << fmt(det.profile.delta[v]) << ','
              << fmt(det.profile.gamma[v]) << ',' << center_set.count(v) << ',' << part[v] << '\n';
    });
    write_atomic(dir / "embedding.csv", [&](std::ostream& o) { write_embedding_csv(o, graph, det.embedding); });

    out << "k_star=" << det.sweep.k_star << " partition_density=" << fmt(det.sweep.best().density);
    if (truth) out << " nmi=" << fmt(metrics["nmi"].get<double>()) << " acc=" << fmt(metrics["acc"].get<double>());
    out << '\n';
    return 0;
}

int cmd_embed(const GlobalOptions& g, const std::string& dim_sweep, std::ostream& out) {
    const Graph graph = load_input(g);
    const PipelineConfig config = pipeline_config(g);
    const fs::path dir = prepare_out_dir(g);
    GeodesicMatrix gd;
    const Embedding e = embed(graph, config, &gd);
    write_atomic(dir / "embedding.csv", [&](std::ostream& o) { write_embedding_csv(o, graph, e); });
    out << "dim=" << e.dim() << " residual_variance=" << fmt(residual_variance(gd, e)) << '\n';
    if (!dim_sweep.empty()) {
        std::vector<std::pair<std::size_t, double>> rows;
        for (double p : parse_range(dim_sweep)) {
            const auto dim = static_cast<std::size_t>(std::llround(p));
            if (dim < 1 || dim >= graph.node_count()) throw DomainError("dimension out of range: " + fmt(p));
            rows.emplace_back(dim, residual_variance(gd, classical_mds(gd, dim)));
        }
        write_atomic(dir / "residual_variance.csv", [&](std::ostream& o) {
            o << "dim,residual_variance\n";
            for (auto [dim, rv] : rows) o << dim << ',' << fmt(rv) << '\n';
        });
    }
    return 0;
}

struct BenchFlags {
    std::string suite = "gn";
    std::string zout = "1..8";
    std::string mu = "0.1..0.8";
    std::size_t trials = 10;
    std::string dc_sweep;
    std::string methods = "isofdp";
    std::size_t lfr_n = 1000;
};

int cmd_benchmark(const GlobalOptions& g, const BenchFlags& b, std::ostream& out) {
    BenchmarkOptions o;
    o.suite = parse_suite(b.suite);
    o.params = parse_range(o.suite == Suite::Gn ? b.zout : b.mu);
    o.trials = b.trials;
    o.seed = g.seed;
    o.pipeline = pipeline_config(g);
    if (!b.dc_sweep.empty()) o.dc_sweep = parse_range(b.dc_sweep);
    std::stringstream ms(b.methods);
    for (std::string m; std::getline(ms, m, ',');) {
        if (m == "isofdp") continue;
        if (m == "kmeans") o.kmeans = true;
        else if (m == "dbscan") o.dbscan = true;
        else throw DomainError("unknown method '" + m + "' (expected isofdp, kmeans or dbscan)");
    }
    o.lfr_n = b.lfr_n;
    o.workers = g.threads;

    const auto rows = run_benchmark(o);
    const fs::path dir = prepare_out_dir(g);
    const std::string stem = "benchmark_" + b.suite;
    write_atomic(dir / (stem + ".csv"), [&](std::ostream& s) { write_benchmark_csv(s, rows); });
    write_atomic(dir / (stem + "_summary.csv"), [&](std::ostream& s) { write_benchmark_summary(s, rows); });
    write_benchmark_summary(out, rows);
    return 0;
}

struct GenFlags {
    std::string kind = "gn";
    int zout = 1;
    LfrSpec lfr;
    std::string name;
};

int cmd_generate(const GlobalOptions& g, GenFlags f, std::ostream& out) {
    LabeledGraph data;
    std::string stem;
    if (f.kind == "gn") {
        data = generate_gn({f.zout, g.seed});
        stem = "gn_z" + std::to_string(f.zout) + "_s" + std::to_string(g.seed);
    } else if (f.kind == "lfr") {
        f.lfr.seed = g.seed;
        data = generate_lfr(f.lfr);
        stem = "lfr_mu" + fmt(f.lfr.mu) + "_s" + std::to_string(g.seed);
    } else {
        throw DomainError("unknown generator '" + f.kind + "' (expected gn or lfr)");
    }
    if (!f.name.empty()) stem = f.name;
    const fs::path dir = prepare_out_dir(g);
    write_atomic(dir / (stem + ".edges"), [&](std::ostream& o) { write_edge_list(o, data.graph); });
    write_atomic(dir / (stem + ".truth"), [&](std::ostream& o) { write_truth(o, data.graph, data.truth); });
    out << (dir / (stem + ".edges")).string() << " nodes=" << data.graph.node_count()
        << " edges=" << data.graph.edge_count() << " communities="
        << Partition::from_any(std::span<const std::size_t>(data.truth)).community_count()
        << " mixing=" << fmt(mixing_fraction(data.graph, data.truth)) << '\n';
    return 0;
}

int cmd_eval(const std::string& truth_path, const std::string& pred_path, std::ostream& out) {
    const auto [t, p] = align_label_pair(read_labels(fs::path(truth_path)), read_labels(fs::path(pred_path)));
    ordered_json j;
    j["nmi"] = nmi(t, p);
    j["acc"] = accuracy(t, p);
    out << j.dump() << '\n';
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Community detection by Isomap embedding and density peaks", "isofdp"};
    app.require_subcommand(1);

    GlobalOptions detect_opts, embed_opts, bench_opts, gen_opts;
    std::string truth_path, truth_attr, dim_sweep, eval_truth, eval_pred;
    BenchFlags bench;
    GenFlags gen;

    auto* detect_cmd = app.add_subcommand("detect", "detect communities in a graph");
    add_global_options(*detect_cmd, detect_opts);
    detect_cmd->add_option("--truth", truth_path, "ground-truth `token label` file");
    detect_cmd->add_option("--truth-attr", truth_attr, "GML node attribute holding ground truth");

    auto* embed_cmd = app.add_subcommand("embed", "write the Isomap embedding");
    add_global_options(*embed_cmd, embed_opts);
    embed_cmd->add_option("--dim-sweep", dim_sweep, "dimensions for a residual-variance table, e.g. 1..6");

    auto* bench_cmd = app.add_subcommand("benchmark", "run the GN or LFR benchmark suite");
    add_global_options(*bench_cmd, bench_opts);
    bench_cmd->add_option("--suite", bench.suite, "gn or lfr");
    bench_cmd->add_option("--zout", bench.zout, "Z_out values for gn");
    bench_cmd->add_option("--mu", bench.mu, "mixing values for lfr");
    bench_cmd->add_option("--trials", bench.trials, "instances per parameter value");
    bench_cmd->add_option("--dc-sweep", bench.dc_sweep, "d_c percentiles, e.g. 1..5");
    bench_cmd->add_option("--methods", bench.methods, "comma list of isofdp, kmeans, dbscan");
    bench_cmd->add_option("--lfr-n", bench.lfr_n, "LFR node count");

    auto* gen_cmd = app.add_subcommand("generate", "write a benchmark graph and its truth file");
    add_global_options(*gen_cmd, gen_opts);
    gen_cmd->add_option("kind", gen.kind, "gn or lfr");
    gen_cmd->add_option("--zout", gen.zout, "GN expected external degree");
    gen_cmd->add_option("--mu", gen.lfr.mu, "LFR mixing parameter");
    gen_cmd->add_option("--n", gen.lfr.n, "LFR node count");
    gen_cmd->add_option("--avg-degree", gen.lfr.avg_degree, "LFR average degree");
    gen_cmd->add_option("--max-degree", gen.lfr.max_degree, "LFR maximum degree");
    gen_cmd->add_option("--min-community", gen.lfr.min_community, "LFR smallest community");
    gen_cmd->add_option("--max-community", gen.lfr.max_community, "LFR largest community");
    gen_cmd->add_option("--name", gen.name, "output file stem");

    auto* eval_cmd = app.add_subcommand("eval", "score a predicted partition against the truth");
    eval_cmd->add_option("--truth", eval_truth, "ground-truth `token label` file")->required();
    eval_cmd->add_option("--pred", eval_pred, "predicted `token label` file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*detect_cmd) return cmd_detect(detect_opts, truth_path, truth_attr, out);
        if (*embed_cmd) return cmd_embed(embed_opts, dim_sweep, out);
        if (*bench_cmd) return cmd_benchmark(bench_opts, bench, out);
        if (*gen_cmd) return cmd_generate(gen_opts, gen, out);
        if (*eval_cmd) return cmd_eval(eval_truth, eval_pred, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 1;
    } catch (const DomainError& e) {
        err << "invalid configuration: " << e.what() << '\n';
        return 2;
    } catch (const InfeasibleError& e) {
        err << "infeasible: " << e.what() << '\n';
        return 2;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace isofdp
