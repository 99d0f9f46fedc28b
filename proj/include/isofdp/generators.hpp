#pragma once

#include "isofdp/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace isofdp {

struct LabeledGraph {
    Graph graph;
    std::vector<std::size_t> truth;  // contiguous community ids
};

/// Girvan-Newman planted partition: 128 nodes in 4 blocks of 32 (nodes
/// 32b..32b+31 form block b), expected internal degree 16 − z_out and
/// expected external degree z_out.
struct GnSpec {
    int z_out = 1;
    std::uint64_t seed = 0;
};

/// Every pair is linked independently: intra-block with probability
/// (16 − z_out)/31, inter-block with z_out/96. Pairs are visited in
/// (i, j > i) order, one uniform draw each. Throws DomainError unless
/// 0 ≤ z_out ≤ 16.
LabeledGraph generate_gn(const GnSpec& spec);

/// Lancichinetti-Fortunato-Radicchi benchmark parameters. Defaults are the
/// setting used for the LFR experiments (N=1000, <k>=20, k_max=50,
/// t1=2, t2=1, community sizes 20..60).
struct LfrSpec {
    std::size_t n = 1000;
    double mu = 0.1;
    double avg_degree = 20;
    std::size_t max_degree = 50;
    double t1 = 2.0;  // degree exponent
    double t2 = 1.0;  // community-size exponent
    std::size_t min_community = 20;
    std::size_t max_community = 60;
    std::uint64_t seed = 0;
    std::size_t max_attempts = 20;
};

/// Lower degree bound x_min of the continuous power law p(x) ∝ x^-t on
/// [x_min, max_degree] whose mean is avg_degree (bisection).
double lfr_min_degree(double avg_degree, double max_degree, double t);

/// Builds an LFR graph:
///  1. degrees: continuous power law (exponent t1) on [x_min, max_degree]
///     with x_min from lfr_min_degree, rounded to integers;
///  2. community sizes: power law (exponent t2) on [min_c, max_c], drawn
///     until they cover n, then trimmed so they sum to n;
///  3. each node splits its degree into round((1 − mu)·deg) internal and
///     the rest external stubs and is placed, largest internal degree
///     first, in a random community with room for it;
///  4. internal and external stubs are matched by a configuration model,
///     then self-loops, multi-edges and (for external stubs) same-community
///     pairs are removed by random edge swaps.
/// Throws InfeasibleError after max_attempts failed placements.
LabeledGraph generate_lfr(const LfrSpec& spec);

/// Fraction of edge endpoints whose edge leaves the endpoint's community.
double mixing_fraction(const Graph& g, const std::vector<std::size_t>& truth);

/// `token<TAB>community` per node, in index order.
void write_truth(std::ostream& out, const Graph& g, const std::vector<std::size_t>& truth);

}  // namespace isofdp
