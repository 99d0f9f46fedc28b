#include "isofdp/partition_quality.hpp"

#include "isofdp/errors.hpp"
#include "isofdp/parallel.hpp"

#include <cmath>

namespace isofdp {

CommunityStats community_stats(const Graph& g, const Partition& part) {
    if (part.node_count() != g.node_count()) throw DomainError("partition does not cover the graph");
    CommunityStats s{part.sizes(), std::vector<std::size_t>(part.community_count(), 0)};
    for (auto [u, v] : g.edges())
        if (part[u] == part[v]) ++s.edges[part[u]];
    return s;
}

namespace {

// Shared numerator over the (n_c - 1)-offset denominator of the summand.
double summand(std::size_t nodes, std::size_t edges) {
    if (nodes <= 2) return 0.0;
    const double n = static_cast<double>(nodes);
    const double m = static_cast<double>(edges);
    return n * (m - (n - 1)) / ((n - 2) * (n - 1));
}

}  // namespace

double local_partition_density(const Graph& g, const Partition& part, std::size_t community) {
    if (community >= part.community_count()) throw DomainError("community id out of range");
    const CommunityStats s = community_stats(g, part);
    const double n = static_cast<double>(s.nodes[community]);
    const double m = static_cast<double>(s.edges[community]);
    if (s.nodes[community] <= 2) return 0.0;
    return (m - (n - 1)) / (n * (n - 1) / 2 - (n - 1));
}

double partition_density(const Graph& g, const Partition& part, bool penalized) {
    const CommunityStats s = community_stats(g, part);
    double sum = 0;
    for (std::size_t c = 0; c < s.nodes.size(); ++c) sum += summand(s.nodes[c], s.edges[c]);
    double d = 2.0 / static_cast<double>(g.node_count()) * sum;
    if (penalized) d /= std::sqrt(static_cast<double>(part.community_count()));
    return d;
}

const SweepEntry& SweepResult::best() const {
    for (const auto& e : entries)
        if (e.k == k_star) return e;
    throw DomainError("empty sweep");
}

SweepResult select_k(const Graph& g, const DensityProfile& profile, std::size_t k_max, std::size_t workers) {
    const std::size_t n = g.node_count();
    if (profile.node_count() != n) throw DomainError("density profile does not match the graph");
    if (k_max < 2 || k_max > n)
        throw DomainError("k_max must lie in [2, n], got " + std::to_string(k_max));

    SweepResult out;
    out.entries.resize(k_max - 1);
    parallel_for(k_max - 1, workers, [&](std::size_t i) {
        SweepEntry& e = out.entries[i];
        e.k = i + 2;
        e.partition = assign(profile, top_centers(profile, e.k));
        e.density = partition_density(g, e.partition, true);
    });

    const SweepEntry* best = &out.entries.front();
    for (const auto& e : out.entries)
        if (e.density > best->density) best = &e;
    out.k_star = best->k;
    return out;
}

}  // namespace isofdp
