#pragma once

#include "isofdp/isomap.hpp"
#include "isofdp/partition.hpp"

#include <Eigen/Core>

#include <optional>
#include <span>
#include <vector>

namespace isofdp {

// Density-peaks statistics over embedded points.
//
// Density rank is the strict total order "higher rho first, smaller index
// first on ties". Every function taking an Embedding has an overload taking
// the precomputed pairwise distance matrix (see embedded_distances()).

struct Separation {
    std::vector<double> delta;
    std::vector<std::optional<NodeId>> nearest_higher;  // empty only for the rank maximum
    std::vector<NodeId> density_order;                  // nodes by decreasing density rank
};

struct GammaScores {
    std::vector<double> gamma;     // rho · delta
    std::vector<NodeId> ranking;   // decreasing gamma, then decreasing delta, then index
};

struct DensityProfile {
    double d_c = 0;
    std::vector<std::size_t> rho;
    std::vector<double> delta;
    std::vector<double> gamma;
    std::vector<std::optional<NodeId>> nearest_higher;
    std::vector<NodeId> density_order;
    std::vector<NodeId> gamma_ranking;

    std::size_t node_count() const { return rho.size(); }
};

/// Nearest-rank percentile of the n(n-1)/2 pairwise distances:
/// the ⌈percentile/100 · M⌉-th smallest. percentile must lie in (0, 100].
double select_dc(const Eigen::MatrixXd& pairwise, double percentile);
double select_dc(const Embedding& e, double percentile);

/// rho_i = |{ j ≠ i : d_ij < d_c }|.
std::vector<std::size_t> local_density(const Eigen::MatrixXd& pairwise, double d_c);
std::vector<std::size_t> local_density(const Embedding& e, double d_c);

/// delta_i = distance to the closest node of higher density rank (ties to
/// the smaller index); the rank maximum gets its largest distance instead.
Separation separation(const Eigen::MatrixXd& pairwise, std::span<const std::size_t> rho);
Separation separation(const Embedding& e, std::span<const std::size_t> rho);

GammaScores gamma_scores(std::span<const std::size_t> rho, std::span<const double> delta);

DensityProfile density_profile(const Eigen::MatrixXd& pairwise, double d_c);
DensityProfile density_profile(const Embedding& e, double d_c);

/// The first k nodes of the gamma ranking.
std::vector<NodeId> top_centers(const DensityProfile& profile, std::size_t k);

/// Higher-nearest assignment. centers[c] gets label c; every other node, in
/// decreasing density rank, copies the label of its nearest_higher.
/// Throws DomainError on repeated or out-of-range centers, or when the
/// density maximum is neither a center nor reachable.
Partition assign(const DensityProfile& profile, std::span<const NodeId> centers);

}  // namespace isofdp
