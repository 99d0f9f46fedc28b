#include "isofdp/benchmark.hpp"

#include "isofdp/baselines.hpp"
#include "isofdp/errors.hpp"
#include "isofdp/generators.hpp"
#include "isofdp/metrics.hpp"
#include "isofdp/parallel.hpp"
#include "isofdp/random.hpp"

#include <cmath>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

namespace isofdp {

namespace {

double parse_number(const std::string& s) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(v)) throw DomainError("not a number: '" + s + "'");
    return v;
}

int decimals(const std::string& s) {
    const auto dot = s.find('.');
    return dot == std::string::npos ? 0 : static_cast<int>(s.size() - dot - 1);
}

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

struct Instance {
    LabeledGraph data;
    std::uint64_t seed;
};

Instance make_instance(const BenchmarkOptions& o, double param, std::size_t trial) {
    const std::uint64_t seed = instance_seed(o.seed, param, trial);
    if (o.suite == Suite::Gn) {
        const auto z = static_cast<int>(std::llround(param));
        if (std::abs(param - z) > 1e-9) throw DomainError("Z_out must be an integer, got " + format_double(param));
        return {generate_gn({z, seed}), seed};
    }
    LfrSpec spec;
    spec.n = o.lfr_n;
    spec.mu = param;
    spec.seed = seed;
    return {generate_lfr(spec), seed};
}

std::vector<BenchmarkRow> run_cell(const BenchmarkOptions& o, double param, std::size_t trial) {
    const Instance inst = make_instance(o, param, trial);
    const auto& truth = inst.data.truth;
    const std::size_t k_true = Partition::from_any(std::span<const std::size_t>(truth)).community_count();
    std::vector<BenchmarkRow> rows;
    auto add = [&](const std::string& method, double dc, const Partition& p) {
        rows.push_back({param, trial, inst.seed, method, dc, nmi(truth, p.labels()), accuracy(truth, p.labels()),
                        k_true, p.community_count()});
    };

    PipelineConfig config = o.pipeline;
    config.workers = 1;
    const std::vector<double> dcs = o.dc_sweep.empty() ? std::vector<double>{config.dc_percentile} : o.dc_sweep;
    const Graph& g = inst.data.graph;
    const ResolvedConfig r = resolve(config, g.node_count());
    const Embedding e = embed(g, config);
    for (double dc : dcs) {
        const DensityProfile profile = density_profile(e, select_dc(e, dc));
        add("isofdp", dc, select_k(g, profile, r.k_max).best().partition);
    }
    if (o.kmeans) {
        const KmeansResult km = kmeans(e, {k_true, derive_seed(inst.seed, 1), 10, 100});
        add("kmeans", 0, km.partition);
    }
    if (o.dbscan) {
        // Best of the parameter grid by NMI; earlier grid cells win ties.
        std::optional<Partition> best;
        double best_nmi = -1;
        for (const DbscanSpec& spec : dbscan_grid(e)) {
            Partition p = dbscan(e, spec).partition;
            const double score = nmi(truth, p.labels());
            if (score > best_nmi) {
                best_nmi = score;
                best = std::move(p);
            }
        }
        add("dbscan", 0, *best);
    }
    return rows;
}

}  // namespace

Suite parse_suite(const std::string& tag) {
    if (tag == "gn") return Suite::Gn;
    if (tag == "lfr") return Suite::Lfr;
    throw DomainError("unknown suite '" + tag + "' (expected gn or lfr)");
}

std::vector<double> parse_range(const std::string& text) {
    if (text.empty()) throw DomainError("empty range");
    std::vector<double> out;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_number(item));
        return out;
    }
    const auto dots = text.find("..");
    if (dots == std::string::npos) return {parse_number(text)};

    const std::string lo_text = text.substr(0, dots);
    std::string hi_text = text.substr(dots + 2);
    int places = std::max(decimals(lo_text), decimals(hi_text));
    double step = std::pow(10.0, -places);
    if (const auto colon = hi_text.find(':'); colon != std::string::npos) {
        const std::string step_text = hi_text.substr(colon + 1);
        hi_text = hi_text.substr(0, colon);
        step = parse_number(step_text);
        places = std::max({decimals(lo_text), decimals(hi_text), decimals(step_text)});
    }
    const double lo = parse_number(lo_text), hi = parse_number(hi_text);
    if (!(step > 0) || hi < lo) throw DomainError("bad range '" + text + "'");
    const double scale = std::pow(10.0, places);
    for (std::size_t i = 0;; ++i) {
        const double v = std::round((lo + static_cast<double>(i) * step) * scale) / scale;
        if (v > hi + 1e-9) break;
        out.push_back(v);
    }
    return out;
}

std::uint64_t instance_seed(std::uint64_t master, double param, std::size_t trial) {
    const auto key = static_cast<std::uint64_t>(std::llround(param * 1000.0));
    return derive_seed(derive_seed(master, key), trial);
}

std::vector<BenchmarkRow> run_benchmark(const BenchmarkOptions& o) {
    if (o.params.empty()) throw DomainError("benchmark needs at least one parameter value");
    if (o.trials == 0) throw DomainError("benchmark needs at least one trial");
    const std::size_t cells = o.params.size() * o.trials;
    std::vector<std::vector<BenchmarkRow>> buffered(cells);
    parallel_for(cells, o.workers, [&](std::size_t i) {
        buffered[i] = run_cell(o, o.params[i / o.trials], i % o.trials);
    });
    std::vector<BenchmarkRow> rows;
    for (auto& b : buffered) rows.insert(rows.end(), b.begin(), b.end());
    return rows;
}

void write_benchmark_csv(std::ostream& out, const std::vector<BenchmarkRow>& rows) {
    out << "param,trial,seed,method,dc_percentile,nmi,acc,k_true,k_detected\n";
    out.precision(17);
    for (const auto& r : rows)
        out << format_double(r.param) << ',' << r.trial << ',' << r.seed << ',' << r.method << ','
            << format_double(r.dc_percentile) << ',' << r.nmi << ',' << r.acc << ',' << r.k_true << ','
            << r.k_detected << '\n';
}

void write_benchmark_summary(std::ostream& out, const std::vector<BenchmarkRow>& rows) {
    struct Acc {
        double nmi = 0, acc = 0, k = 0;
        std::size_t count = 0;
    };
    std::vector<std::tuple<double, std::string, double>> order;
    std::map<std::tuple<double, std::string, double>, Acc> groups;
    for (const auto& r : rows) {
        const auto key = std::make_tuple(r.param, r.method, r.dc_percentile);
        auto [it, fresh] = groups.try_emplace(key);
        if (fresh) order.push_back(key);
        it->second.nmi += r.nmi;
        it->second.acc += r.acc;
        it->second.k += static_cast<double>(r.k_detected);
        ++it->second.count;
    }
    out << "param,method,dc_percentile,trials,mean_nmi,mean_acc,mean_k_detected\n";
    out.precision(17);
    for (const auto& key : order) {
        const Acc& a = groups.at(key);
        const auto c = static_cast<double>(a.count);
        out << format_double(std::get<0>(key)) << ',' << std::get<1>(key) << ',' << format_double(std::get<2>(key))
            << ',' << a.count << ',' << a.nmi / c << ',' << a.acc / c << ',' << a.k / c << '\n';
    }
}

}  // namespace isofdp
