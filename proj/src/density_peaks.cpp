#include "isofdp/density_peaks.hpp"

#include "isofdp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace isofdp {

double select_dc(const Eigen::MatrixXd& pairwise, double percentile) {
    if (!(percentile > 0 && percentile <= 100))
        throw DomainError("d_c percentile must lie in (0, 100], got " + std::to_string(percentile));
    const Eigen::Index n = pairwise.rows();
    if (n < 2) throw DomainError("d_c needs at least two points");
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) values.push_back(pairwise(i, j));
    const auto m = static_cast<double>(values.size());
    auto rank = static_cast<std::size_t>(std::ceil(percentile * m / 100.0));
    rank = std::clamp<std::size_t>(rank, 1, values.size());
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(rank - 1), values.end());
    return values[rank - 1];
}

double select_dc(const Embedding& e, double percentile) { return select_dc(embedded_distances(e), percentile); }

std::vector<std::size_t> local_density(const Eigen::MatrixXd& pairwise, double d_c) {
    const Eigen::Index n = pairwise.rows();
    std::vector<std::size_t> rho(static_cast<std::size_t>(n), 0);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            if (j != i && pairwise(i, j) < d_c) ++rho[static_cast<std::size_t>(i)];
    return rho;
}

std::vector<std::size_t> local_density(const Embedding& e, double d_c) {
    return local_density(embedded_distances(e), d_c);
}

Separation separation(const Eigen::MatrixXd& pairwise, std::span<const std::size_t> rho) {
    const std::size_t n = rho.size();
    if (static_cast<std::size_t>(pairwise.rows()) != n) throw DomainError("rho does not match the point count");
    auto d = [&](NodeId i, NodeId j) { return pairwise(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)); };

    Separation s;
    s.delta.assign(n, 0.0);
    s.nearest_higher.assign(n, std::nullopt);
    s.density_order.resize(n);
    std::iota(s.density_order.begin(), s.density_order.end(), NodeId{0});
    std::stable_sort(s.density_order.begin(), s.density_order.end(),
                     [&](NodeId a, NodeId b) { return rho[a] > rho[b]; });
    if (n == 0) return s;

    const NodeId top = s.density_order.front();
    for (NodeId j = 0; j < n; ++j) s.delta[top] = std::max(s.delta[top], d(top, j));

    for (std::size_t r = 1; r < n; ++r) {
        const NodeId i = s.density_order[r];
        NodeId best = s.density_order[0];
        for (std::size_t q = 1; q < r; ++q) {
            const NodeId j = s.density_order[q];
            if (d(i, j) < d(i, best) || (d(i, j) == d(i, best) && j < best)) best = j;
        }
        s.delta[i] = d(i, best);
        s.nearest_higher[i] = best;
    }
    return s;
}

Separation separation(const Embedding& e, std::span<const std::size_t> rho) {
    return separation(embedded_distances(e), rho);
}

GammaScores gamma_scores(std::span<const std::size_t> rho, std::span<const double> delta) {
    if (rho.size() != delta.size()) throw DomainError("rho and delta differ in length");
    GammaScores g;
    g.gamma.resize(rho.size());
    for (std::size_t i = 0; i < rho.size(); ++i) g.gamma[i] = static_cast<double>(rho[i]) * delta[i];
    g.ranking.resize(rho.size());
    std::iota(g.ranking.begin(), g.ranking.end(), NodeId{0});
    std::stable_sort(g.ranking.begin(), g.ranking.end(), [&](NodeId a, NodeId b) {
        if (g.gamma[a] != g.gamma[b]) return g.gamma[a] > g.gamma[b];
        return delta[a] > delta[b];
    });
    return g;
}

DensityProfile density_profile(const Eigen::MatrixXd& pairwise, double d_c) {
    if (!(d_c > 0)) throw DomainError("d_c must be positive");
    DensityProfile p;
    p.d_c = d_c;
    p.rho = local_density(pairwise, d_c);
    Separation s = separation(pairwise, p.rho);
    p.delta = std::move(s.delta);
    p.nearest_higher = std::move(s.nearest_higher);
    p.density_order = std::move(s.density_order);
    GammaScores g = gamma_scores(p.rho, p.delta);
    p.gamma = std::move(g.gamma);
    p.gamma_ranking = std::move(g.ranking);
    return p;
}

DensityProfile density_profile(const Embedding& e, double d_c) {
    return density_profile(embedded_distances(e), d_c);
}

std::vector<NodeId> top_centers(const DensityProfile& profile, std::size_t k) {
    if (k > profile.node_count()) throw DomainError("more centers requested than nodes");
    return {profile.gamma_ranking.begin(), profile.gamma_ranking.begin() + static_cast<std::ptrdiff_t>(k)};
}

Partition assign(const DensityProfile& profile, std::span<const NodeId> centers) {
    const std::size_t n = profile.node_count();
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(n, unset);
    for (std::size_t c = 0; c < centers.size(); ++c) {
        const NodeId v = centers[c];
        if (v >= n) throw DomainError("center index " + std::to_string(v) + " out of range");
        if (label[v] != unset) throw DomainError("centers must be distinct (node " + std::to_string(v) + ")");
        label[v] = c;
    }
    for (NodeId v : profile.density_order) {
        if (label[v] != unset) continue;
        const auto& up = profile.nearest_higher[v];
        if (!up) throw DomainError("density maximum " + std::to_string(v) + " must be a center");
        label[v] = label[*up];
    }
    return Partition(std::move(label));
}

}  // namespace isofdp
