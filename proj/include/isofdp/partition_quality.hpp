#pragma once

#include "isofdp/density_peaks.hpp"
#include "isofdp/graph.hpp"
#include "isofdp/partition.hpp"

#include <vector>

namespace isofdp {

/// Node and induced-edge counts per community, on the original graph.
struct CommunityStats {
    std::vector<std::size_t> nodes;  // n_c
    std::vector<std::size_t> edges;  // m_c
};

CommunityStats community_stats(const Graph& g, const Partition& part);

/// (m_c − (n_c − 1)) / (n_c(n_c − 1)/2 − (n_c − 1)); 0 when n_c ≤ 2.
/// Negative for communities whose induced subgraph is disconnected.
double local_partition_density(const Graph& g, const Partition& part, std::size_t community);

/// (2 / N) Σ_c n_c (m_c − (n_c − 1)) / ((n_c − 2)(n_c − 1)), with communities
/// of at most two nodes contributing 0. The penalized form further divides
/// by sqrt(k).
double partition_density(const Graph& g, const Partition& part, bool penalized);

struct SweepEntry {
    std::size_t k = 0;
    double density = 0;  // penalized
    Partition partition;
};

struct SweepResult {
    std::vector<SweepEntry> entries;  // k = 2, 3, .., k_max
    std::size_t k_star = 0;           // smallest k attaining the maximum

    const SweepEntry& best() const;
};

/// Evaluates k = 2..k_max: top-k gamma centers, higher-nearest assignment,
/// penalized partition density. Throws DomainError unless 2 ≤ k_max ≤ n.
SweepResult select_k(const Graph& g, const DensityProfile& profile, std::size_t k_max,
                     std::size_t workers = 1);

}  // namespace isofdp
