#include "isofdp/pipeline.hpp"

#include "isofdp/errors.hpp"

#include <chrono>
#include <cmath>

namespace isofdp {

namespace {

class Stopwatch {
public:
    double lap() {
        const auto now = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
        last_ = now;
        return ms;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

void require_size(std::size_t n) {
    if (n < 4) throw InfeasibleError("graph too small: need at least 4 nodes, got " + std::to_string(n));
}

}  // namespace

std::size_t default_k_max(std::size_t n) {
    const auto k = static_cast<std::size_t>(std::ceil(2.0 * std::sqrt(static_cast<double>(n))));
    return std::min(k, n - 1);
}

ResolvedConfig resolve(const PipelineConfig& config, std::size_t n) {
    require_size(n);
    if (config.neighborhood < 1) throw DomainError("neighborhood size must be at least 1");
    if (config.dim < 1) throw DomainError("embedding dimension must be at least 1");
    ResolvedConfig r;
    r.measure = config.measure;
    r.neighborhood = std::min(config.neighborhood, n - 1);
    r.dim = std::min(config.dim, n - 1);
    r.dc_percentile = config.dc_percentile;
    r.k_max = config.k_max.value_or(default_k_max(n));
    if (r.k_max < 2 || r.k_max > n)
        throw DomainError("k_max must lie in [2, " + std::to_string(n) + "], got " + std::to_string(r.k_max));
    return r;
}

Embedding embed(const Graph& g, const PipelineConfig& config, GeodesicMatrix* geodesics) {
    const ResolvedConfig r = resolve(config, g.node_count());
    const DistanceMatrix d = to_distance(similarity_matrix(g, r.measure, config.workers));
    GeodesicMatrix gd = geodesic_distances(build_neighbor_graph(d, r.neighborhood), config.workers);
    Embedding e = classical_mds(gd, r.dim);
    if (geodesics) *geodesics = std::move(gd);
    return e;
}

Detection detect(const Graph& g, const PipelineConfig& config) {
    Detection out;
    out.config = resolve(config, g.node_count());
    const ResolvedConfig& r = out.config;
    Stopwatch clock;

    const DistanceMatrix d = to_distance(similarity_matrix(g, r.measure, config.workers));
    out.timings_ms["similarity"] = clock.lap();
    const NeighborGraph ng = build_neighbor_graph(d, r.neighborhood);
    out.timings_ms["neighbor_graph"] = clock.lap();
    const GeodesicMatrix gd = geodesic_distances(ng, config.workers);
    out.timings_ms["geodesics"] = clock.lap();
    out.embedding = classical_mds(gd, r.dim);
    out.timings_ms["mds"] = clock.lap();
    out.profile = density_profile(out.embedding, select_dc(out.embedding, r.dc_percentile));
    out.timings_ms["density_peaks"] = clock.lap();
    out.sweep = select_k(g, out.profile, r.k_max, config.workers);
    out.timings_ms["k_sweep"] = clock.lap();
    return out;
}

}  // namespace isofdp
