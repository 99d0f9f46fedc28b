#pragma once

#include "isofdp/graph.hpp"
#include "isofdp/random.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

namespace isofdp::test {

inline std::filesystem::path data_dir() { return ISOFDP_DATA_DIR; }
inline std::filesystem::path fixture_dir() { return ISOFDP_FIXTURE_DIR; }

inline Graph parse_edges(const std::string& text) {
    std::istringstream in(text);
    return load_edge_list(in);
}

inline Graph disjoint_cliques(const std::vector<std::size_t>& sizes) {
    std::vector<Edge> edges;
    std::size_t base = 0;
    for (std::size_t s : sizes) {
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = i + 1; j < s; ++j) edges.emplace_back(base + i, base + j);
        base += s;
    }
    return Graph(base, edges);
}

inline std::vector<std::size_t> block_labels(const std::vector<std::size_t>& sizes) {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < sizes.size(); ++c) out.insert(out.end(), sizes[c], c);
    return out;
}

// Random tree plus extra random edges: connected by construction.
inline Graph random_connected(std::size_t n, std::size_t extra, Rng& rng) {
    std::vector<Edge> edges;
    for (NodeId v = 1; v < n; ++v) edges.emplace_back(rng.below(v), v);
    for (std::size_t i = 0; i < extra; ++i) {
        const NodeId a = rng.below(n), b = rng.below(n);
        if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    return Graph(n, edges);
}

inline Eigen::MatrixXd floyd_warshall(std::size_t n, const std::vector<std::tuple<NodeId, NodeId, double>>& edges) {
    const double inf = std::numeric_limits<double>::infinity();
    Eigen::MatrixXd d = Eigen::MatrixXd::Constant(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n), inf);
    for (Eigen::Index i = 0; i < d.rows(); ++i) d(i, i) = 0;
    for (auto [u, v, w] : edges) {
        const auto a = static_cast<Eigen::Index>(u), b = static_cast<Eigen::Index>(v);
        d(a, b) = std::min(d(a, b), w);
        d(b, a) = std::min(d(b, a), w);
    }
    for (Eigen::Index k = 0; k < d.rows(); ++k)
        for (Eigen::Index i = 0; i < d.rows(); ++i)
            for (Eigen::Index j = 0; j < d.rows(); ++j) d(i, j) = std::min(d(i, j), d(i, k) + d(k, j));
    return d;
}

// Best agreement over every injective map of predicted labels into true labels
// (true labels padded with unmatched dummies when k_pred > k_true).
inline double brute_force_accuracy(const std::vector<std::size_t>& truth, const std::vector<std::size_t>& pred) {
    const std::size_t kt = *std::max_element(truth.begin(), truth.end()) + 1;
    const std::size_t kp = *std::max_element(pred.begin(), pred.end()) + 1;
    std::vector<std::size_t> targets(std::max(kt, kp));
    std::iota(targets.begin(), targets.end(), 0);
    std::size_t best = 0;
    do {
        std::size_t hits = 0;
        for (std::size_t i = 0; i < truth.size(); ++i) hits += targets[pred[i]] == truth[i];
        best = std::max(best, hits);
    } while (std::next_permutation(targets.begin(), targets.end()));
    return static_cast<double>(best) / static_cast<double>(truth.size());
}

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace isofdp::test
