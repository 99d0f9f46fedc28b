#pragma once

#include "isofdp/density_peaks.hpp"
#include "isofdp/graph.hpp"
#include "isofdp/isomap.hpp"
#include "isofdp/partition_quality.hpp"
#include "isofdp/similarity.hpp"

#include <map>
#include <optional>
#include <string>

namespace isofdp {

inline constexpr std::size_t kDefaultNeighborhood = 50;
inline constexpr std::size_t kDefaultDim = 3;
inline constexpr double kDefaultDcPercentile = 2.0;

struct PipelineConfig {
    Measure measure = Measure::Structure;
    std::size_t neighborhood = kDefaultNeighborhood;  // λ, clamped to n - 1
    std::size_t dim = kDefaultDim;                    // p
    double dc_percentile = kDefaultDcPercentile;
    std::optional<std::size_t> k_max;                 // default min(ceil(2 sqrt n), n - 1)
    std::size_t workers = 1;
};

/// Parameters after resolving defaults against a graph of n nodes.
struct ResolvedConfig {
    Measure measure = Measure::Structure;
    std::size_t neighborhood = 0;
    std::size_t dim = 0;
    double dc_percentile = 0;
    std::size_t k_max = 0;
};

std::size_t default_k_max(std::size_t n);
ResolvedConfig resolve(const PipelineConfig& config, std::size_t n);

struct Detection {
    ResolvedConfig config;
    Embedding embedding;
    DensityProfile profile;
    SweepResult sweep;
    std::map<std::string, double> timings_ms;

    const Partition& partition() const { return sweep.best().partition; }
};

/// Similarity, Isomap embedding, density peaks and the k sweep on g.
/// Throws InfeasibleError when g has fewer than 4 nodes.
Detection detect(const Graph& g, const PipelineConfig& config);

/// Embedding only; shares the similarity and Isomap stages of detect().
Embedding embed(const Graph& g, const PipelineConfig& config, GeodesicMatrix* geodesics = nullptr);

}  // namespace isofdp
