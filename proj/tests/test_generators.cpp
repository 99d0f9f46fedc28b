#include "isofdp/errors.hpp"
#include "isofdp/generators.hpp"
#include "isofdp/partition.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace isofdp;

TEST(Gn, Shape) {
    const auto d = generate_gn({5, 123});
    EXPECT_EQ(d.graph.node_count(), 128u);
    EXPECT_EQ(d.truth, test::block_labels({32, 32, 32, 32}));
}

TEST(Gn, NoExternalEdgesAtZero) {
    const auto d = generate_gn({0, 9});
    EXPECT_EQ(mixing_fraction(d.graph, d.truth), 0.0);
}

TEST(Gn, MeanDegreeSixteen) {
    double total = 0;
    for (std::uint64_t s = 0; s < 10; ++s) total += 2.0 * double(generate_gn({8, s}).graph.edge_count()) / 128;
    EXPECT_NEAR(total / 10, 16.0, 1.0);
}

TEST(Gn, EdgeProbabilitiesChiSquare) {
    // Pooled over seeds, internal and external edge counts against their binomial expectation.
    const int z = 6;
    double internal = 0, external = 0;
    const int seeds = 40;
    for (int s = 0; s < seeds; ++s) {
        const auto d = generate_gn({z, std::uint64_t(s)});
        for (auto [u, v] : d.graph.edges()) (d.truth[u] == d.truth[v] ? internal : external) += 1;
    }
    const double pairs_in = seeds * 4 * 32 * 31 / 2.0, pairs_out = seeds * 6 * 32 * 32.0;
    const double p_in = (16.0 - z) / 31, p_out = z / 96.0;
    auto chi = [](double obs, double n, double p) {
        const double e = n * p;
        return (obs - e) * (obs - e) / (e * (1 - p));
    };
    // 99.9% quantile of chi-square with 1 degree of freedom is 10.83.
    EXPECT_LT(chi(internal, pairs_in, p_in), 10.83);
    EXPECT_LT(chi(external, pairs_out, p_out), 10.83);
}

TEST(Gn, Deterministic) {
    EXPECT_EQ(generate_gn({4, 77}).graph, generate_gn({4, 77}).graph);
    EXPECT_FALSE(generate_gn({4, 77}).graph == generate_gn({4, 78}).graph);
}

TEST(Gn, OutOfRange) {
    EXPECT_THROW(generate_gn({17, 0}), DomainError);
    EXPECT_THROW(generate_gn({-1, 0}), DomainError);
}

TEST(Lfr, MinimumDegreeGivesRequestedMean) {
    const double lo = lfr_min_degree(20, 50, 2);
    // Mean of p(x) ~ x^-2 on [lo, 50] is ln(50/lo) / (1/lo - 1/50).
    EXPECT_NEAR(std::log(50 / lo) / (1 / lo - 1.0 / 50), 20.0, 1e-9);
}

TEST(Lfr, DefaultParameterStatistics) {
    for (double mu : {0.1, 0.3, 0.5, 0.8}) {
        LfrSpec spec;
        spec.mu = mu;
        spec.seed = 1000 + std::uint64_t(mu * 10);
        const auto d = generate_lfr(spec);
        ASSERT_EQ(d.graph.node_count(), 1000u);
        const auto sizes = Partition::from_any(std::span<const std::size_t>(d.truth)).sizes();
        for (auto s : sizes) {
            EXPECT_GE(s, 20u);
            EXPECT_LE(s, 60u);
        }
        std::size_t max_degree = 0;
        for (NodeId v = 0; v < 1000; ++v) max_degree = std::max(max_degree, d.graph.degree(v));
        EXPECT_LE(max_degree, 50u);
        EXPECT_NEAR(mixing_fraction(d.graph, d.truth), mu, 0.03) << "mu " << mu;
        EXPECT_NEAR(2.0 * double(d.graph.edge_count()) / 1000, 20.0, 2.0);
    }
}

TEST(Lfr, Deterministic) {
    LfrSpec spec;
    spec.n = 300;
    spec.seed = 5;
    const auto a = generate_lfr(spec), b = generate_lfr(spec);
    EXPECT_EQ(a.graph, b.graph);
    EXPECT_EQ(a.truth, b.truth);
}

TEST(Lfr, InfeasibleSpec) {
    LfrSpec spec;
    spec.n = 200;
    spec.avg_degree = 40;
    spec.max_degree = 50;
    spec.min_community = 5;
    spec.max_community = 10;
    spec.mu = 0.1;
    spec.max_attempts = 3;
    EXPECT_THROW(generate_lfr(spec), InfeasibleError);
}

TEST(Lfr, TruthSidecar) {
    const auto d = generate_gn({2, 1});
    std::ostringstream out;
    write_truth(out, d.graph, d.truth);
    EXPECT_EQ(out.str().substr(0, 4), "0\t0\n");
}
