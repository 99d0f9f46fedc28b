#include "isofdp/errors.hpp"
#include "isofdp/generators.hpp"
#include "isofdp/isomap.hpp"
#include "isofdp/similarity.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace isofdp;

namespace {

DistanceMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
    const auto n = static_cast<Eigen::Index>(rows.size());
    DistanceMatrix d{Eigen::MatrixXd(n, n)};
    Eigen::Index i = 0;
    for (const auto& r : rows) {
        Eigen::Index j = 0;
        for (double v : r) d.values(i, j++) = v;
        ++i;
    }
    return d;
}

Eigen::MatrixXd euclidean(const Eigen::MatrixXd& pts) {
    Eigen::MatrixXd d(pts.rows(), pts.rows());
    for (Eigen::Index i = 0; i < pts.rows(); ++i)
        for (Eigen::Index j = 0; j < pts.rows(); ++j) d(i, j) = (pts.row(i) - pts.row(j)).norm();
    return d;
}

std::vector<std::tuple<NodeId, NodeId, double>> triples(const NeighborGraph& ng) {
    std::vector<std::tuple<NodeId, NodeId, double>> out;
    for (const auto& e : ng.edges) out.emplace_back(e.u, e.v, e.weight);
    return out;
}

NeighborGraph random_weighted(std::size_t n, Rng& rng, bool integer) {
    const Graph g = test::random_connected(n, 2 * n, rng);
    NeighborGraph ng;
    ng.node_count = n;
    for (auto [u, v] : g.edges())
        ng.edges.push_back({u, v, integer ? double(1 + rng.below(9)) : 0.01 + rng.uniform()});
    return ng;
}

}  // namespace

TEST(NeighborGraph, SymmetricOneNearest) {
    const auto ng = build_neighbor_graph(from_rows({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}), 1);
    ASSERT_EQ(ng.edges.size(), 2u);
    EXPECT_EQ(ng.edges[0], (WeightedEdge{0, 1, 1.0}));
    EXPECT_EQ(ng.edges[1], (WeightedEdge{1, 2, 1.0}));
    EXPECT_EQ(ng.bridges_added, 0u);
}

TEST(NeighborGraph, FullNeighborhoodIsComplete) {
    Rng rng(3);
    Eigen::MatrixXd pts = Eigen::MatrixXd::Random(8, 2);
    const auto ng = build_neighbor_graph({euclidean(pts)}, 7);
    EXPECT_EQ(ng.edges.size(), 28u);
}

TEST(NeighborGraph, TwoClumpsJoinedBySmallestCrossEdge) {
    const double far = 10;
    auto d = from_rows({{0, 1, 1, far, far, far},
                        {1, 0, 1, far, 7, far},
                        {1, 1, 0, far, far, far},
                        {far, far, far, 0, 1, 1},
                        {far, 7, far, 1, 0, 1},
                        {far, far, far, 1, 1, 0}});
    const auto ng = build_neighbor_graph(d, 1);
    EXPECT_EQ(ng.bridges_added, 1u);
    const auto bridge = std::find_if(ng.edges.begin(), ng.edges.end(), [](auto& e) { return e.u < 3 && e.v >= 3; });
    ASSERT_NE(bridge, ng.edges.end());
    EXPECT_EQ(*bridge, (WeightedEdge{1, 4, 7.0}));
    EXPECT_NO_THROW(geodesic_distances(ng));
}

TEST(NeighborGraph, IsolatedNodeNamed) {
    const double inf = kInfiniteDistance;
    auto d = from_rows({{0, 1, inf}, {1, 0, inf}, {inf, inf, 0}});
    try {
        build_neighbor_graph(d, 1);
        FAIL();
    } catch (const InfeasibleError& e) {
        EXPECT_NE(std::string(e.what()).find("node 2"), std::string::npos);
    }
}

TEST(NeighborGraph, NeighborhoodOutOfRange) {
    auto d = from_rows({{0, 1}, {1, 0}});
    EXPECT_THROW(build_neighbor_graph(d, 0), DomainError);
    EXPECT_THROW(build_neighbor_graph(d, 2), DomainError);
}

TEST(NeighborGraph, DisconnectedGraphsStillConnect) {
    // Two disjoint cliques have no finite cross distance at all.
    const Graph g = test::disjoint_cliques({4, 4});
    const auto ng = build_neighbor_graph(to_distance(similarity_matrix(g)), 2);
    EXPECT_EQ(ng.bridges_added, 1u);
    EXPECT_TRUE(geodesic_distances(ng).values.allFinite());
}

TEST(Geodesics, PathEnds) {
    NeighborGraph ng{3, 1, {{0, 1, 1.0}, {1, 2, 1.0}}, 0};
    EXPECT_EQ(geodesic_distances(ng).values(0, 2), 2.0);
}

TEST(Geodesics, IntegerWeightsExactlyMatchFloydWarshall) {
    Rng rng(50);
    const auto ng = random_weighted(50, rng, true);
    const auto gd = geodesic_distances(ng);
    EXPECT_EQ(gd.values, test::floyd_warshall(50, triples(ng)));
}

TEST(Geodesics, RealWeightsMatchFloydWarshall) {
    Rng rng(51);
    const auto ng = random_weighted(60, rng, false);
    const auto gd = geodesic_distances(ng, 4);
    EXPECT_LE((gd.values - test::floyd_warshall(60, triples(ng))).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Geodesics, TriangleInequality) {
    Rng rng(52);
    const auto gd = geodesic_distances(random_weighted(40, rng, false)).values;
    for (int t = 0; t < 2000; ++t) {
        const auto i = Eigen::Index(rng.below(40)), j = Eigen::Index(rng.below(40)), k = Eigen::Index(rng.below(40));
        EXPECT_LE(gd(i, k), gd(i, j) + gd(j, k) + 1e-12);
    }
}

TEST(Geodesics, WorkerCountIndependent) {
    Rng rng(53);
    const auto ng = random_weighted(80, rng, false);
    EXPECT_EQ(geodesic_distances(ng, 1).values, geodesic_distances(ng, 5).values);
}

TEST(Geodesics, DisconnectedRejected) {
    NeighborGraph ng{4, 1, {{0, 1, 1.0}, {2, 3, 1.0}}, 0};
    EXPECT_THROW(geodesic_distances(ng), NumericalError);
}

TEST(Mds, CollinearPoints) {
    Eigen::MatrixXd pts(3, 1);
    pts << 0, 1, 2;
    const auto e = classical_mds(euclidean(pts), 1);
    EXPECT_LE((embedded_distances(e) - euclidean(pts)).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Mds, EquilateralTriangle) {
    Eigen::MatrixXd d = Eigen::MatrixXd::Ones(3, 3) - Eigen::MatrixXd::Identity(3, 3);
    const auto e = classical_mds(d, 2);
    EXPECT_EQ(e.dim(), 2u);
    EXPECT_LE((embedded_distances(e) - d).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Mds, IdenticalPointsCollapse) {
    const auto e = classical_mds(Eigen::MatrixXd::Zero(4, 4), 2);
    EXPECT_TRUE(e.truncated);
    EXPECT_TRUE(e.coordinates.isZero());
    EXPECT_TRUE(embedded_distances(e).isZero());
}

TEST(Mds, TruncatesToPositiveSpectrum) {
    Eigen::MatrixXd pts(5, 1);
    pts << 0, 1, 3, 4, 9;
    const auto e = classical_mds(euclidean(pts), 3);
    EXPECT_EQ(e.dim(), 1u);
    EXPECT_TRUE(e.truncated);
    EXPECT_EQ(e.requested_dim, 3u);
}

TEST(Mds, ExactOnRandomEuclideanSets) {
    Rng rng(77);
    for (int trial = 0; trial < 20; ++trial) {
        const int p = 1 + trial % 3;
        Eigen::MatrixXd pts(10 + trial, p);
        for (Eigen::Index i = 0; i < pts.size(); ++i) pts(i) = 10 * rng.uniform() - 5;
        const auto d = euclidean(pts);
        const auto e = classical_mds(d, std::size_t(p));
        EXPECT_LE((embedded_distances(e) - d).cwiseAbs().maxCoeff(), 1e-9);
        EXPECT_LE(e.eigenvalues.size(), p);
        for (Eigen::Index k = 1; k < e.eigenvalues.size(); ++k) EXPECT_GE(e.eigenvalues(k - 1), e.eigenvalues(k));
    }
}

TEST(Mds, SignConvention) {
    Eigen::MatrixXd pts(4, 2);
    pts << 0, 0, 3, 0, 0, 1, 5, 2;
    const auto e = classical_mds(euclidean(pts), 2);
    for (Eigen::Index c = 0; c < e.coordinates.cols(); ++c) {
        Eigen::Index arg;
        e.coordinates.col(c).cwiseAbs().maxCoeff(&arg);
        EXPECT_GE(e.coordinates(arg, c), 0.0);
    }
}

TEST(Mds, DomainErrors) {
    EXPECT_THROW(classical_mds(Eigen::MatrixXd::Zero(3, 3), 0), DomainError);
    EXPECT_THROW(classical_mds(Eigen::MatrixXd::Zero(3, 3), 3), DomainError);
}

TEST(Isomap, LineOrderRecovered) {
    Eigen::MatrixXd pts(6, 1);
    pts << 0, 1, 2, 3, 4, 5;
    const auto e = isomap({euclidean(pts)}, 2, 1);
    const auto x = e.coordinates.col(0);
    const bool increasing = (x.tail(5) - x.head(5)).minCoeff() > 0;
    const bool decreasing = (x.tail(5) - x.head(5)).maxCoeff() < 0;
    EXPECT_TRUE(increasing || decreasing);
}

TEST(Isomap, GnCommunitiesSeparate) {
    const auto data = generate_gn({1, 4});
    const auto e = isomap(to_distance(similarity_matrix(data.graph)), 50, 3);
    const Eigen::MatrixXd d = embedded_distances(e);
    // Mean silhouette over planted labels.
    double total = 0;
    for (Eigen::Index i = 0; i < 128; ++i) {
        std::vector<double> sum(4, 0);
        for (Eigen::Index j = 0; j < 128; ++j)
            if (j != i) sum[data.truth[std::size_t(j)]] += d(i, j);
        const std::size_t own = data.truth[std::size_t(i)];
        const double a = sum[own] / 31;
        double b = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < 4; ++c)
            if (c != own) b = std::min(b, sum[c] / 32);
        total += (b - a) / std::max(a, b);
    }
    EXPECT_GT(total / 128, 0.5);
}

TEST(Isomap, TooSmall) {
    auto d = from_rows({{0, 1}, {1, 0}});
    EXPECT_THROW(isomap(d, 1, 1), InfeasibleError);
}

TEST(ResidualVariance, ZeroForExactEmbedding) {
    Eigen::MatrixXd pts(5, 2);
    pts << 0, 0, 1, 0, 0, 2, 3, 1, 2, 2;
    const GeodesicMatrix gd{euclidean(pts)};
    EXPECT_NEAR(residual_variance(gd, classical_mds(gd, 2)), 0.0, 1e-12);
    EXPECT_GT(residual_variance(gd, classical_mds(gd, 1)), 0.0);
}
