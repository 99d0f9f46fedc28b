#pragma once

#include "isofdp/isomap.hpp"
#include "isofdp/partition.hpp"

#include <cstdint>
#include <vector>

namespace isofdp {

struct KmeansSpec {
    std::size_t k = 2;
    std::uint64_t seed = 0;
    std::size_t restarts = 10;
    std::size_t max_iters = 100;
};

struct KmeansResult {
    Partition partition;
    double sse = 0;                  // within-cluster sum of squares of the best run
    std::vector<double> objective;   // per-iteration SSE of the best run
};

/// Lloyd's algorithm from k-means++ seeding; best of `restarts` runs by SSE.
/// Restart r draws from derive_seed(seed, r). A cluster that empties is
/// reseeded with the point farthest from its current centroid.
/// Throws DomainError unless 1 ≤ k ≤ n.
KmeansResult kmeans(const Embedding& e, const KmeansSpec& spec);

struct DbscanSpec {
    double eps = 1.0;
    std::size_t min_pts = 4;
};

struct DbscanResult {
    Partition partition;        // noise points as singleton communities
    std::size_t clusters = 0;   // clusters excluding noise singletons
    std::size_t noise = 0;
};

/// Classic DBSCAN with neighborhoods |{q : d(p, q) ≤ eps}| counting p itself;
/// p is core when that count reaches min_pts. Clusters are the connected
/// components of core points; a border point joins the cluster of its
/// nearest core neighbor.
DbscanResult dbscan(const Embedding& e, const DbscanSpec& spec);

/// Parameter grid for DBSCAN searches: eps at the 1st..10th percentile of
/// pairwise embedded distances × min_pts ∈ {2, 3, 4, 5, 6} (50 settings).
std::vector<DbscanSpec> dbscan_grid(const Embedding& e);

}  // namespace isofdp
