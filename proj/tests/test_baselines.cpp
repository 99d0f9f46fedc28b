#include "isofdp/baselines.hpp"
#include "isofdp/errors.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace isofdp;

namespace {

Embedding points(const Eigen::MatrixXd& x) {
    Embedding e;
    e.coordinates = x;
    e.eigenvalues = Eigen::VectorXd::Ones(x.cols());
    e.requested_dim = std::size_t(x.cols());
    return e;
}

Embedding two_blobs(std::uint64_t seed, std::vector<std::size_t>& truth) {
    Rng rng(seed);
    Eigen::MatrixXd x(30, 2);
    truth.clear();
    for (Eigen::Index i = 0; i < 30; ++i) {
        const bool right = i % 3 == 0;
        x(i, 0) = (right ? 100.0 : 0.0) + rng.uniform();
        x(i, 1) = rng.uniform();
        truth.push_back(right);
    }
    return points(x);
}

}  // namespace

TEST(Kmeans, SingleCluster) {
    std::vector<std::size_t> truth;
    const Embedding e = two_blobs(1, truth);
    const auto r = kmeans(e, {1, 3});
    EXPECT_EQ(r.partition.community_count(), 1u);
    const Eigen::RowVectorXd mean = e.coordinates.colwise().mean();
    EXPECT_NEAR(r.sse, (e.coordinates.rowwise() - mean).squaredNorm(), 1e-9);
}

TEST(Kmeans, OnePointPerCluster) {
    std::vector<std::size_t> truth;
    const Embedding e = two_blobs(2, truth);
    const auto r = kmeans(e, {30, 3});
    EXPECT_EQ(r.partition.community_count(), 30u);
    EXPECT_NEAR(r.sse, 0.0, 1e-12);
}

TEST(Kmeans, TwoBlobs) {
    std::vector<std::size_t> truth;
    const Embedding e = two_blobs(3, truth);
    EXPECT_TRUE(same_grouping(kmeans(e, {2, 8}).partition.labels(), truth));
}

TEST(Kmeans, ObjectiveNonIncreasing) {
    Rng rng(4);
    Eigen::MatrixXd x(200, 3);
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = rng.uniform();
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto r = kmeans(points(x), {7, seed, 1});
        for (std::size_t i = 1; i < r.objective.size(); ++i) EXPECT_LE(r.objective[i], r.objective[i - 1] + 1e-9);
    }
}

TEST(Kmeans, DeterministicAndValidated) {
    std::vector<std::size_t> truth;
    const Embedding e = two_blobs(5, truth);
    EXPECT_EQ(kmeans(e, {4, 11}).partition, kmeans(e, {4, 11}).partition);
    EXPECT_THROW(kmeans(e, {31, 0}), DomainError);
}

TEST(Dbscan, HugeRadiusOneCluster) {
    std::vector<std::size_t> truth;
    const auto r = dbscan(two_blobs(6, truth), {1000, 1});
    EXPECT_EQ(r.partition.community_count(), 1u);
    EXPECT_EQ(r.noise, 0u);
}

TEST(Dbscan, TinyRadiusAllNoise) {
    std::vector<std::size_t> truth;
    const auto r = dbscan(two_blobs(7, truth), {1e-9, 2});
    EXPECT_EQ(r.partition.community_count(), 30u);
    EXPECT_EQ(r.noise, 30u);
    EXPECT_EQ(r.clusters, 0u);
}

TEST(Dbscan, TwoBlobs) {
    std::vector<std::size_t> truth;
    const auto r = dbscan(two_blobs(8, truth), {5, 3});
    EXPECT_EQ(r.clusters, 2u);
    EXPECT_TRUE(same_grouping(r.partition.labels(), truth));
}

TEST(Dbscan, OrderIndependent) {
    Rng rng(9);
    Eigen::MatrixXd x(60, 2);
    for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = 10 * rng.uniform();
    for (const DbscanSpec spec : {DbscanSpec{0.8, 3}, DbscanSpec{1.2, 4}, DbscanSpec{2.0, 6}}) {
        const auto base = dbscan(points(x), spec).partition.labels();
        for (int t = 0; t < 5; ++t) {
            std::vector<std::size_t> perm(60);
            std::iota(perm.begin(), perm.end(), 0);
            rng.shuffle(perm);
            Eigen::MatrixXd y(60, 2);
            for (std::size_t i = 0; i < 60; ++i) y.row(Eigen::Index(i)) = x.row(Eigen::Index(perm[i]));
            const auto shuffled = dbscan(points(y), spec).partition.labels();
            std::vector<std::size_t> back(60);
            for (std::size_t i = 0; i < 60; ++i) back[perm[i]] = shuffled[i];
            EXPECT_TRUE(same_grouping(back, base));
        }
    }
}

TEST(Dbscan, GridHasFiftySettings) {
    std::vector<std::size_t> truth;
    const auto grid = dbscan_grid(two_blobs(10, truth));
    ASSERT_EQ(grid.size(), 50u);
    EXPECT_EQ(grid.front().min_pts, 2u);
    EXPECT_EQ(grid.back().min_pts, 6u);
    EXPECT_LE(grid.front().eps, grid.back().eps);
}
