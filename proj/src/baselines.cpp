#include "isofdp/baselines.hpp"

#include "isofdp/density_peaks.hpp"
#include "isofdp/errors.hpp"
#include "isofdp/random.hpp"

#include <limits>
#include <queue>

namespace isofdp {

namespace {

struct LloydRun {
    std::vector<std::size_t> labels;
    double sse = 0;
    std::vector<double> objective;
};

Eigen::MatrixXd plus_plus_seeding(const Eigen::MatrixXd& x, std::size_t k, Rng& rng) {
    const Eigen::Index n = x.rows();
    Eigen::MatrixXd centers(static_cast<Eigen::Index>(k), x.cols());
    centers.row(0) = x.row(static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(n))));
    Eigen::VectorXd nearest = (x.rowwise() - centers.row(0)).rowwise().squaredNorm();
    for (std::size_t c = 1; c < k; ++c) {
        const double total = nearest.sum();
        Eigen::Index pick = 0;
        if (total > 0) {
            double target = rng.uniform() * total;
            for (pick = 0; pick < n - 1; ++pick) {
                target -= nearest(pick);
                if (target < 0) break;
            }
        } else {
            pick = static_cast<Eigen::Index>(rng.below(static_cast<std::uint64_t>(n)));
        }
        centers.row(static_cast<Eigen::Index>(c)) = x.row(pick);
        nearest = nearest.cwiseMin((x.rowwise() - x.row(pick)).rowwise().squaredNorm());
    }
    return centers;
}

LloydRun lloyd(const Eigen::MatrixXd& x, std::size_t k, std::size_t max_iters, Rng& rng) {
    const Eigen::Index n = x.rows();
    const auto kk = static_cast<Eigen::Index>(k);
    Eigen::MatrixXd centers = plus_plus_seeding(x, k, rng);
    LloydRun run;
    run.labels.assign(static_cast<std::size_t>(n), 0);

    auto assign_points = [&] {
        double sse = 0;
        bool changed = false;
        for (Eigen::Index i = 0; i < n; ++i) {
            Eigen::Index best = 0;
            double best_d = std::numeric_limits<double>::infinity();
            for (Eigen::Index c = 0; c < kk; ++c) {
                const double d = (x.row(i) - centers.row(c)).squaredNorm();
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
            auto& l = run.labels[static_cast<std::size_t>(i)];
            changed |= l != static_cast<std::size_t>(best);
            l = static_cast<std::size_t>(best);
            sse += best_d;
        }
        return std::pair{sse, changed};
    };

    auto [sse, changed] = assign_points();
    run.objective.push_back(sse);
    for (std::size_t it = 0; it < max_iters; ++it) {
        Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(kk, x.cols());
        std::vector<std::size_t> count(k, 0);
        for (Eigen::Index i = 0; i < n; ++i) {
            sums.row(static_cast<Eigen::Index>(run.labels[static_cast<std::size_t>(i)])) += x.row(i);
            ++count[run.labels[static_cast<std::size_t>(i)]];
        }
        for (std::size_t c = 0; c < k; ++c) {
            const auto cc = static_cast<Eigen::Index>(c);
            if (count[c] > 0) {
                centers.row(cc) = sums.row(cc) / static_cast<double>(count[c]);
                continue;
            }
            // Empty cluster: move it onto the point farthest from its centroid.
            Eigen::Index far = 0;
            double far_d = -1;
            for (Eigen::Index i = 0; i < n; ++i) {
                const auto own = static_cast<Eigen::Index>(run.labels[static_cast<std::size_t>(i)]);
                const double d = (x.row(i) - centers.row(own)).squaredNorm();
                if (d > far_d) {
                    far_d = d;
                    far = i;
                }
            }
            centers.row(cc) = x.row(far);
            run.labels[static_cast<std::size_t>(far)] = c;
        }
        std::tie(sse, changed) = assign_points();
        run.objective.push_back(sse);
        if (!changed) break;
    }
    run.sse = run.objective.back();
    return run;
}

}  // namespace

KmeansResult kmeans(const Embedding& e, const KmeansSpec& spec) {
    const std::size_t n = e.node_count();
    if (spec.k < 1 || spec.k > n)
        throw DomainError("k-means needs 1 <= k <= n, got k = " + std::to_string(spec.k));
    const std::size_t restarts = std::max<std::size_t>(1, spec.restarts);
    LloydRun best;
    for (std::size_t r = 0; r < restarts; ++r) {
        Rng rng(derive_seed(spec.seed, r));
        LloydRun run = lloyd(e.coordinates, spec.k, spec.max_iters, rng);
        if (r == 0 || run.sse < best.sse) best = std::move(run);
    }
    return {Partition::from_any(std::span<const std::size_t>(best.labels)), best.sse, std::move(best.objective)};
}

DbscanResult dbscan(const Embedding& e, const DbscanSpec& spec) {
    if (!(spec.eps > 0)) throw DomainError("eps must be positive");
    if (spec.min_pts < 1) throw DomainError("min_pts must be at least 1");
    const Eigen::MatrixXd d = embedded_distances(e);
    const std::size_t n = e.node_count();
    auto dist = [&](std::size_t a, std::size_t b) {
        return d(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
    };

    std::vector<std::vector<std::size_t>> neighborhood(n);
    std::vector<bool> core(n);
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = 0; q < n; ++q)
            if (dist(p, q) <= spec.eps) neighborhood[p].push_back(q);
        core[p] = neighborhood[p].size() >= spec.min_pts;
    }

    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> cluster(n, unset);
    DbscanResult out;
    for (std::size_t s = 0; s < n; ++s) {
        if (!core[s] || cluster[s] != unset) continue;
        const std::size_t id = out.clusters++;
        std::queue<std::size_t> frontier;
        cluster[s] = id;
        frontier.push(s);
        while (!frontier.empty()) {
            const std::size_t p = frontier.front();
            frontier.pop();
            for (std::size_t q : neighborhood[p]) {
                if (core[q] && cluster[q] == unset) {
                    cluster[q] = id;
                    frontier.push(q);
                }
            }
        }
    }
    std::vector<std::size_t> labels(n);
    std::size_t next_singleton = out.clusters;
    for (std::size_t p = 0; p < n; ++p) {
        if (core[p]) {
            labels[p] = cluster[p];
            continue;
        }
        std::size_t nearest = unset;
        for (std::size_t q : neighborhood[p])
            if (core[q] && (nearest == unset || dist(p, q) < dist(p, nearest))) nearest = q;
        if (nearest != unset) {
            labels[p] = cluster[nearest];
        } else {
            labels[p] = next_singleton++;
            ++out.noise;
        }
    }
    out.partition = Partition::from_any(std::span<const std::size_t>(labels));
    return out;
}

std::vector<DbscanSpec> dbscan_grid(const Embedding& e) {
    const Eigen::MatrixXd d = embedded_distances(e);
    std::vector<DbscanSpec> grid;
    for (int pct = 1; pct <= 10; ++pct) {
        const double eps = select_dc(d, pct);
        for (std::size_t min_pts = 2; min_pts <= 6; ++min_pts) grid.push_back({eps > 0 ? eps : 1e-12, min_pts});
    }
    return grid;
}

}  // namespace isofdp
