#pragma once

#include "isofdp/similarity.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <vector>

namespace isofdp {

struct WeightedEdge {
    NodeId u;
    NodeId v;
    double weight;

    friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Sparse symmetric neighbor graph used for geodesic distances.
struct NeighborGraph {
    std::size_t node_count = 0;
    std::size_t neighborhood = 0;     // λ
    std::vector<WeightedEdge> edges;  // u < v, sorted by (u, v)
    std::size_t bridges_added = 0;    // edges added by connectivity repair
};

/// Dense all-pairs shortest paths over a NeighborGraph. Always finite.
struct GeodesicMatrix {
    Eigen::MatrixXd values;
};

struct Embedding {
    Eigen::MatrixXd coordinates;  // n × p'
    Eigen::VectorXd eigenvalues;  // p' retained values, non-increasing, > 0
    std::size_t requested_dim = 0;
    bool truncated = false;       // p' < requested_dim

    std::size_t node_count() const { return static_cast<std::size_t>(coordinates.rows()); }
    std::size_t dim() const { return static_cast<std::size_t>(coordinates.cols()); }
};

/// Symmetric λ-nearest-neighbor graph over finite distances.
///
/// Edge (i, j) exists when j is among the λ closest finite partners of i
/// or i among those of j; ties go to the smaller index. If the result is
/// disconnected, the globally shortest finite edge joining two components
/// (ties: smallest (i, j)) is added until one component remains. Components
/// with no finite distance to each other at all are joined by one bridge
/// between their smallest node indices, weighted twice the largest finite
/// distance in `d`.
///
/// Throws DomainError unless 1 ≤ λ ≤ n − 1, and InfeasibleError naming the
/// node when some node has no finite-distance partner.
NeighborGraph build_neighbor_graph(const DistanceMatrix& d, std::size_t neighborhood);

/// Dijkstra (binary heap) from every source. Throws NumericalError if the
/// graph is disconnected or a weight is not positive and finite.
GeodesicMatrix geodesic_distances(const NeighborGraph& ng, std::size_t workers = 1);

/// Classical MDS of a distance matrix.
///
/// Forms B = -1/2 · X (D ∘ D) X with the centering matrix X = I − 11ᵀ/n,
/// keeps the top-`dim` eigenpairs whose eigenvalue exceeds 1e-10 times the
/// largest one, and returns coordinates v · sqrt(μ). Each eigenvector is
/// signed so its largest-magnitude entry (first one on ties) is positive.
/// Fewer columns than requested come back with `truncated` set.
/// Throws DomainError for dim = 0 or dim ≥ n, NumericalError when an
/// eigenpair misses the residual bound ‖Bv − μv‖ ≤ 1e-8 ‖B‖.
Embedding classical_mds(const Eigen::MatrixXd& distances, std::size_t dim);
inline Embedding classical_mds(const GeodesicMatrix& gd, std::size_t dim) {
    return classical_mds(gd.values, dim);
}

/// Full Isomap: neighbor graph, geodesics, classical MDS. Rejects n < 4.
Embedding isomap(const DistanceMatrix& d, std::size_t neighborhood, std::size_t dim,
                 std::size_t workers = 1);

/// Pairwise Euclidean distances between embedded points.
Eigen::MatrixXd embedded_distances(const Embedding& e);

/// 1 − R² between geodesic distances and embedded distances over all
/// pairs i < j; the usual Isomap dimensionality diagnostic.
double residual_variance(const GeodesicMatrix& gd, const Embedding& e);

}  // namespace isofdp
