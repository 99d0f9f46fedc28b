#include "isofdp/isomap.hpp"

#include "isofdp/errors.hpp"
#include "isofdp/parallel.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>
#include <tuple>

namespace isofdp {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }

    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent_[b] = a;  // root is always the smallest member
        ++merges_;
        return true;
    }

    std::size_t components() const { return parent_.size() - merges_; }

private:
    std::vector<std::size_t> parent_;
    std::size_t merges_ = 0;
};

}  // namespace

NeighborGraph build_neighbor_graph(const DistanceMatrix& d, std::size_t neighborhood) {
    const auto& m = d.values;
    const auto n = static_cast<std::size_t>(m.rows());
    if (static_cast<std::size_t>(m.cols()) != n) throw DomainError("distance matrix must be square");
    if (neighborhood < 1 || neighborhood + 1 > n)
        throw DomainError("neighborhood size must lie in [1, n-1], got " + std::to_string(neighborhood) +
                          " for n = " + std::to_string(n));
    auto at = [&](std::size_t i, std::size_t j) {
        return m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    };

    std::set<std::pair<NodeId, NodeId>> chosen;
    std::vector<NodeId> candidates;
    for (NodeId i = 0; i < n; ++i) {
        candidates.clear();
        for (NodeId j = 0; j < n; ++j)
            if (j != i && std::isfinite(at(i, j))) candidates.push_back(j);
        if (candidates.empty())
            throw InfeasibleError("node " + std::to_string(i) + " has no finite-distance partner");
        const std::size_t take = std::min(neighborhood, candidates.size());
        auto closer = [&](NodeId a, NodeId b) { return std::pair(at(i, a), a) < std::pair(at(i, b), b); };
        std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(take),
                          candidates.end(), closer);
        for (std::size_t k = 0; k < take; ++k)
            chosen.emplace(std::min(i, candidates[k]), std::max(i, candidates[k]));
    }

    NeighborGraph ng;
    ng.node_count = n;
    ng.neighborhood = neighborhood;
    DisjointSets sets(n);
    for (auto [u, v] : chosen) {
        ng.edges.push_back({u, v, at(u, v)});
        sets.unite(u, v);
    }

    if (sets.components() > 1) {
        // Repeatedly taking the globally shortest joining edge is Kruskal's
        // order over all finite pairs, skipping pairs already connected.
        struct Candidate {
            double w;
            NodeId u, v;
        };
        std::vector<Candidate> pairs;
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v = u + 1; v < n; ++v)
                if (std::isfinite(at(u, v)) && sets.find(u) != sets.find(v)) pairs.push_back({at(u, v), u, v});
        std::sort(pairs.begin(), pairs.end(), [](const Candidate& a, const Candidate& b) {
            return std::tie(a.w, a.u, a.v) < std::tie(b.w, b.u, b.v);
        });
        for (const auto& c : pairs) {
            if (sets.components() == 1) break;
            if (sets.unite(c.u, c.v)) {
                ng.edges.push_back({c.u, c.v, c.w});
                ++ng.bridges_added;
            }
        }
    }

    if (sets.components() > 1) {
        double largest = 0;
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v = u + 1; v < n; ++v)
                if (std::isfinite(at(u, v))) largest = std::max(largest, at(u, v));
        const NodeId hub = 0;  // smallest index of the first component
        for (NodeId v = 1; v < n; ++v) {
            // v is the smallest index of its component exactly when it is the root
            if (sets.find(v) == v && sets.unite(hub, v)) {
                ng.edges.push_back({hub, v, 2 * largest});
                ++ng.bridges_added;
            }
        }
    }

    std::sort(ng.edges.begin(), ng.edges.end(),
              [](const WeightedEdge& a, const WeightedEdge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    return ng;
}

GeodesicMatrix geodesic_distances(const NeighborGraph& ng, std::size_t workers) {
    const std::size_t n = ng.node_count;
    std::vector<std::vector<std::pair<NodeId, double>>> adj(n);
    for (const auto& e : ng.edges) {
        if (e.u >= n || e.v >= n) throw DomainError("neighbor graph edge out of range");
        if (!(e.weight > 0) || !std::isfinite(e.weight))
            throw NumericalError("neighbor graph edge weights must be positive and finite");
        adj[e.u].emplace_back(e.v, e.weight);
        adj[e.v].emplace_back(e.u, e.weight);
    }

    GeodesicMatrix out{Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n))};
    std::vector<std::vector<double>> rows(n);
    parallel_for(n, workers, [&](std::size_t source) {
        std::vector<double> dist(n, kInfiniteDistance);
        using Item = std::pair<double, NodeId>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        dist[source] = 0;
        heap.emplace(0.0, source);
        while (!heap.empty()) {
            auto [du, u] = heap.top();
            heap.pop();
            if (du > dist[u]) continue;
            for (auto [v, w] : adj[u]) {
                const double alt = du + w;
                if (alt < dist[v]) {
                    dist[v] = alt;
                    heap.emplace(alt, v);
                }
            }
        }
        rows[source] = std::move(dist);
    });

    // Row i supplies entries (i, j > i) so the result is exactly symmetric.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = rows[i][j];
            if (!std::isfinite(v))
                throw NumericalError("neighbor graph is disconnected (no path " + std::to_string(i) + " -> " +
                                     std::to_string(j) + ")");
            out.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
            out.values(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = v;
        }
    }
    return out;
}

Embedding classical_mds(const Eigen::MatrixXd& distances, std::size_t dim) {
    const Eigen::Index n = distances.rows();
    if (distances.cols() != n) throw DomainError("distance matrix must be square");
    if (dim == 0) throw DomainError("embedding dimension must be positive");
    if (static_cast<Eigen::Index>(dim) >= n)
        throw DomainError("embedding dimension must be below n = " + std::to_string(n));
    if (!distances.allFinite()) throw NumericalError("classical MDS needs finite distances");

    // B = -1/2 X (D∘D) X, expanded through row, column and grand means.
    const Eigen::MatrixXd squared = distances.cwiseProduct(distances);
    const Eigen::VectorXd row_mean = squared.rowwise().mean();
    const Eigen::VectorXd col_mean = squared.colwise().mean().transpose();
    const double grand_mean = squared.mean();
    Eigen::MatrixXd b(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index i = 0; i < n; ++i)
            b(i, j) = -0.5 * (squared(i, j) - row_mean(i) - col_mean(j) + grand_mean);
    b = 0.5 * (b + b.transpose()).eval();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
    if (solver.info() != Eigen::Success) throw NumericalError("eigendecomposition did not converge");
    const Eigen::VectorXd& values = solver.eigenvalues();  // ascending
    const Eigen::MatrixXd& vectors = solver.eigenvectors();

    const double top = values(n - 1);
    const double tolerance = 1e-10 * top;
    std::vector<Eigen::Index> keep;
    for (Eigen::Index k = n - 1; k >= 0 && keep.size() < dim; --k) {
        if (!(top > 0) || !(values(k) > tolerance)) break;
        keep.push_back(k);
    }

    const double b_norm = values.cwiseAbs().maxCoeff();
    Embedding e;
    e.requested_dim = dim;
    e.truncated = keep.size() < dim;
    e.coordinates.resize(n, static_cast<Eigen::Index>(keep.size()));
    e.eigenvalues.resize(static_cast<Eigen::Index>(keep.size()));
    for (std::size_t c = 0; c < keep.size(); ++c) {
        const auto col = static_cast<Eigen::Index>(c);
        Eigen::VectorXd v = vectors.col(keep[c]);
        const double mu = values(keep[c]);
        if ((b * v - mu * v).norm() > 1e-8 * b_norm)
            throw NumericalError("eigenpair residual above tolerance");
        Eigen::Index pivot = 0;
        v.cwiseAbs().maxCoeff(&pivot);  // first index on ties
        if (v(pivot) < 0) v = -v;
        e.eigenvalues(col) = mu;
        e.coordinates.col(col) = v * std::sqrt(mu);
    }
    return e;
}

Embedding isomap(const DistanceMatrix& d, std::size_t neighborhood, std::size_t dim, std::size_t workers) {
    if (d.values.rows() < 4)
        throw InfeasibleError("graph too small: need at least 4 nodes, got " + std::to_string(d.values.rows()));
    const NeighborGraph ng = build_neighbor_graph(d, neighborhood);
    const GeodesicMatrix gd = geodesic_distances(ng, workers);
    return classical_mds(gd, dim);
}

Eigen::MatrixXd embedded_distances(const Embedding& e) {
    const Eigen::Index n = e.coordinates.rows();
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double v = (e.coordinates.row(i) - e.coordinates.row(j)).norm();
            out(i, j) = v;
            out(j, i) = v;
        }
    }
    return out;
}

double residual_variance(const GeodesicMatrix& gd, const Embedding& e) {
    const Eigen::MatrixXd emb = embedded_distances(e);
    const Eigen::Index n = emb.rows();
    double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0, count = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double x = gd.values(i, j), y = emb(i, j);
            sx += x;
            sy += y;
            sxx += x * x;
            syy += y * y;
            sxy += x * y;
            count += 1;
        }
    }
    const double cov = sxy - sx * sy / count;
    const double vx = sxx - sx * sx / count;
    const double vy = syy - sy * sy / count;
    if (vx <= 0 || vy <= 0) return 1.0;
    return 1.0 - cov * cov / (vx * vy);
}

}  // namespace isofdp
