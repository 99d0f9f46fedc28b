#include "isofdp/generators.hpp"

#include "isofdp/errors.hpp"
#include "isofdp/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <set>

namespace isofdp {

LabeledGraph generate_gn(const GnSpec& spec) {
    if (spec.z_out < 0 || spec.z_out > 16)
        throw DomainError("z_out must lie in [0, 16], got " + std::to_string(spec.z_out));
    constexpr std::size_t n = 128, block = 32;
    const double p_in = (16.0 - spec.z_out) / 31.0;
    const double p_out = spec.z_out / 96.0;

    Rng rng(spec.seed);
    std::vector<Edge> edges;
    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = i + 1; j < n; ++j) {
            const double p = (i / block == j / block) ? p_in : p_out;
            if (rng.uniform() < p) edges.emplace_back(i, j);
        }
    }
    std::vector<std::size_t> truth(n);
    for (NodeId i = 0; i < n; ++i) truth[i] = i / block;
    return {Graph(n, edges), std::move(truth)};
}

namespace {

double power_law_mean(double a, double b, double t) {
    if (std::abs(t - 1.0) < 1e-12) return (b - a) / std::log(b / a);
    if (std::abs(t - 2.0) < 1e-12) return std::log(b / a) / (1.0 / a - 1.0 / b);
    return (1.0 - t) / (2.0 - t) * (std::pow(b, 2.0 - t) - std::pow(a, 2.0 - t)) /
           (std::pow(b, 1.0 - t) - std::pow(a, 1.0 - t));
}

// Inverse-CDF draw from p(x) ∝ x^-t on [a, b].
double power_law_draw(Rng& rng, double a, double b, double t) {
    const double u = rng.uniform();
    if (std::abs(t - 1.0) < 1e-12) return a * std::pow(b / a, u);
    const double lo = std::pow(a, 1.0 - t), hi = std::pow(b, 1.0 - t);
    return std::pow(lo + u * (hi - lo), 1.0 / (1.0 - t));
}

std::vector<std::size_t> draw_degrees(Rng& rng, const LfrSpec& spec) {
    const double lo = lfr_min_degree(spec.avg_degree, static_cast<double>(spec.max_degree), spec.t1);
    std::vector<std::size_t> deg(spec.n);
    for (auto& d : deg) {
        const auto x = std::llround(power_law_draw(rng, lo, static_cast<double>(spec.max_degree), spec.t1));
        d = static_cast<std::size_t>(std::clamp<long long>(x, 1, static_cast<long long>(spec.max_degree)));
    }
    if (std::accumulate(deg.begin(), deg.end(), std::size_t{0}) % 2 == 1) {
        for (;;) {
            auto& d = deg[rng.below(spec.n)];
            if (d < spec.max_degree) {
                ++d;
                break;
            }
        }
    }
    return deg;
}

std::vector<std::size_t> draw_sizes(Rng& rng, const LfrSpec& spec) {
    const auto lo = static_cast<double>(spec.min_community);
    const auto hi = static_cast<double>(spec.max_community);
    auto draw = [&] {
        const auto x = std::llround(power_law_draw(rng, lo, hi, spec.t2));
        return static_cast<std::size_t>(std::clamp<long long>(x, static_cast<long long>(spec.min_community),
                                                              static_cast<long long>(spec.max_community)));
    };
    std::vector<std::size_t> sizes;
    std::size_t total = 0;
    while (total < spec.n) {
        sizes.push_back(draw());
        total += sizes.back();
    }
    // Trim the overshoot from communities above the minimum; if none can
    // shrink, drop the last community and grow the others instead.
    while (total != spec.n) {
        std::vector<std::size_t> order(sizes.size());
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(order);
        bool changed = false;
        for (std::size_t c : order) {
            if (total > spec.n && sizes[c] > spec.min_community) {
                --sizes[c];
                --total;
                changed = true;
            } else if (total < spec.n && sizes[c] < spec.max_community) {
                ++sizes[c];
                ++total;
                changed = true;
            }
            if (total == spec.n) break;
        }
        if (!changed) {
            if (total > spec.n && sizes.size() > 1) {
                total -= sizes.back();
                sizes.pop_back();
            } else {
                throw InfeasibleError("community sizes in [" + std::to_string(spec.min_community) + ", " +
                                      std::to_string(spec.max_community) + "] cannot sum to n = " +
                                      std::to_string(spec.n));
            }
        }
    }
    return sizes;
}

struct EdgePool {
    std::set<Edge> present;

    static Edge key(NodeId a, NodeId b) { return {std::min(a, b), std::max(a, b)}; }
    bool has(NodeId a, NodeId b) const { return present.count(key(a, b)) != 0; }
};

// Pairs up `stubs` at random and repairs invalid pairs by double-edge swaps
// with already accepted edges of this pass. `allowed(a, b)` adds
// constraints beyond simplicity. Unrepairable pairs are dropped.
template <class Allowed>
void wire(Rng& rng, std::vector<NodeId> stubs, EdgePool& pool, Allowed allowed) {
    rng.shuffle(stubs);
    std::vector<Edge> accepted;
    std::vector<Edge> rejected;
    auto ok = [&](NodeId a, NodeId b) { return a != b && allowed(a, b) && !pool.has(a, b); };
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
        const NodeId a = stubs[i], b = stubs[i + 1];
        if (ok(a, b)) {
            pool.present.insert(EdgePool::key(a, b));
            accepted.emplace_back(a, b);
        } else {
            rejected.emplace_back(a, b);
        }
    }
    constexpr int kSwapTries = 200;
    for (auto [a, b] : rejected) {
        for (int t = 0; t < kSwapTries && !accepted.empty(); ++t) {
            const std::size_t idx = rng.below(accepted.size());
            auto [c, d] = accepted[idx];
            if (rng.below(2)) std::swap(c, d);
            // replace {a,b} + {c,d} by {a,c} + {b,d}
            if (a == c || b == d || EdgePool::key(a, c) == EdgePool::key(b, d)) continue;
            pool.present.erase(EdgePool::key(c, d));
            if (ok(a, c) && ok(b, d)) {
                pool.present.insert(EdgePool::key(a, c));
                pool.present.insert(EdgePool::key(b, d));
                accepted[idx] = {a, c};
                accepted.emplace_back(b, d);
                break;
            }
            pool.present.insert(EdgePool::key(c, d));
        }
    }
}

}  // namespace

double lfr_min_degree(double avg_degree, double max_degree, double t) {
    if (!(avg_degree >= 1 && avg_degree <= max_degree))
        throw DomainError("average degree must lie in [1, max_degree]");
    double lo = 1.0, hi = max_degree;
    if (power_law_mean(lo, hi, t) > avg_degree)
        throw InfeasibleError("average degree too small for exponent and maximum degree");
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (power_law_mean(mid, max_degree, t) < avg_degree ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

LabeledGraph generate_lfr(const LfrSpec& spec) {
    if (!(spec.mu >= 0 && spec.mu <= 1)) throw DomainError("mu must lie in [0, 1]");
    if (spec.min_community < 2 || spec.min_community > spec.max_community || spec.max_community > spec.n)
        throw DomainError("need 2 <= min_community <= max_community <= n");
    if (spec.avg_degree > static_cast<double>(spec.max_degree) || spec.max_degree >= spec.n)
        throw DomainError("need avg_degree <= max_degree < n");

    Rng rng(spec.seed);
    for (std::size_t attempt = 0; attempt < spec.max_attempts; ++attempt) {
        const std::vector<std::size_t> degree = draw_degrees(rng, spec);
        const std::vector<std::size_t> sizes = draw_sizes(rng, spec);

        std::vector<std::size_t> internal(spec.n), external(spec.n);
        for (NodeId v = 0; v < spec.n; ++v) {
            internal[v] = static_cast<std::size_t>(std::llround((1.0 - spec.mu) * static_cast<double>(degree[v])));
            external[v] = degree[v] - internal[v];
        }

        // Largest internal demand first; random order within equal demand.
        std::vector<NodeId> order(spec.n);
        std::iota(order.begin(), order.end(), NodeId{0});
        rng.shuffle(order);
        std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return internal[a] > internal[b]; });

        std::vector<std::size_t> free_slots = sizes;
        std::vector<std::size_t> community(spec.n);
        bool placed_all = true;
        for (NodeId v : order) {
            std::size_t room = 0;
            for (std::size_t c = 0; c < sizes.size(); ++c)
                if (free_slots[c] > 0 && sizes[c] - 1 >= internal[v] && spec.n - sizes[c] >= external[v])
                    room += free_slots[c];
            if (room == 0) {
                placed_all = false;
                break;
            }
            // Pick a community with probability proportional to its free slots.
            std::size_t ticket = rng.below(room);
            for (std::size_t c = 0; c < sizes.size(); ++c) {
                if (free_slots[c] > 0 && sizes[c] - 1 >= internal[v] && spec.n - sizes[c] >= external[v]) {
                    if (ticket < free_slots[c]) {
                        community[v] = c;
                        --free_slots[c];
                        break;
                    }
                    ticket -= free_slots[c];
                }
            }
        }
        if (!placed_all) continue;

        std::vector<std::vector<NodeId>> members(sizes.size());
        for (NodeId v = 0; v < spec.n; ++v) members[community[v]].push_back(v);

        // Internal stub count per community must be even; move one stub of a
        // member between its internal and external budget.
        for (std::size_t c = 0; c < sizes.size(); ++c) {
            std::size_t total = 0;
            for (NodeId v : members[c]) total += internal[v];
            if (total % 2 == 0) continue;
            bool fixed = false;
            for (NodeId v : members[c]) {
                if (external[v] > 0 && internal[v] + 1 <= sizes[c] - 1) {
                    ++internal[v];
                    --external[v];
                    fixed = true;
                    break;
                }
            }
            for (auto it = members[c].begin(); !fixed && it != members[c].end(); ++it) {
                if (internal[*it] > 0) {
                    --internal[*it];
                    ++external[*it];
                    fixed = true;
                }
            }
        }

        EdgePool pool;
        for (std::size_t c = 0; c < sizes.size(); ++c) {
            std::vector<NodeId> stubs;
            for (NodeId v : members[c]) stubs.insert(stubs.end(), internal[v], v);
            wire(rng, std::move(stubs), pool, [](NodeId, NodeId) { return true; });
        }
        std::vector<NodeId> stubs;
        for (NodeId v = 0; v < spec.n; ++v) stubs.insert(stubs.end(), external[v], v);
        wire(rng, std::move(stubs), pool, [&](NodeId a, NodeId b) { return community[a] != community[b]; });

        std::vector<Edge> edges(pool.present.begin(), pool.present.end());
        return {Graph(spec.n, edges), std::move(community)};
    }
    throw InfeasibleError("LFR generation failed after " + std::to_string(spec.max_attempts) +
                          " attempts: no community can host some node's internal degree");
}

double mixing_fraction(const Graph& g, const std::vector<std::size_t>& truth) {
    if (truth.size() != g.node_count()) throw DomainError("truth does not cover the graph");
    if (g.edge_count() == 0) return 0.0;
    std::size_t inter = 0;
    for (auto [u, v] : g.edges())
        if (truth[u] != truth[v]) ++inter;
    return static_cast<double>(inter) / static_cast<double>(g.edge_count());
}

void write_truth(std::ostream& out, const Graph& g, const std::vector<std::size_t>& truth) {
    for (NodeId v = 0; v < g.node_count(); ++v) out << g.token(v) << '\t' << truth[v] << '\n';
}

}  // namespace isofdp
