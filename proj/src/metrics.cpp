#include "isofdp/metrics.hpp"

#include "isofdp/errors.hpp"
#include "isofdp/partition.hpp"

#include <cmath>
#include <limits>

namespace isofdp {

ContingencyTable ContingencyTable::build(std::span<const std::size_t> truth, std::span<const std::size_t> pred) {
    if (truth.size() != pred.size())
        throw DomainError("labelings differ in length (" + std::to_string(truth.size()) + " vs " +
                          std::to_string(pred.size()) + ")");
    if (truth.empty()) throw DomainError("labelings must be nonempty");
    const Partition t = Partition::from_any(truth);
    const Partition p = Partition::from_any(pred);
    ContingencyTable table;
    table.counts.assign(t.community_count(), std::vector<std::size_t>(p.community_count(), 0));
    for (std::size_t i = 0; i < truth.size(); ++i) ++table.counts[t[i]][p[i]];
    table.truth_sizes = t.sizes();
    table.pred_sizes = p.sizes();
    table.total = truth.size();
    return table;
}

double nmi(std::span<const std::size_t> truth, std::span<const std::size_t> pred) {
    const ContingencyTable table = ContingencyTable::build(truth, pred);
    if (table.truth_sizes.size() == 1 || table.pred_sizes.size() == 1)
        return same_grouping(truth, pred) ? 1.0 : 0.0;

    const double n = static_cast<double>(table.total);
    double mutual = 0;
    for (std::size_t i = 0; i < table.truth_sizes.size(); ++i) {
        for (std::size_t j = 0; j < table.pred_sizes.size(); ++j) {
            const double nij = static_cast<double>(table.counts[i][j]);
            if (nij == 0) continue;
            mutual += nij * std::log(nij * n / (static_cast<double>(table.truth_sizes[i]) *
                                                static_cast<double>(table.pred_sizes[j])));
        }
    }
    auto entropy_sum = [n](const std::vector<std::size_t>& sizes) {
        double s = 0;
        for (auto c : sizes) s += static_cast<double>(c) * std::log(static_cast<double>(c) / n);
        return s;
    };
    return mutual / std::sqrt(entropy_sum(table.truth_sizes) * entropy_sum(table.pred_sizes));
}

Assignment max_weight_matching(const std::vector<std::vector<double>>& weights) {
    const std::size_t rows = weights.size();
    if (rows == 0) throw DomainError("weight matrix needs at least one row");
    const std::size_t cols = weights.front().size();
    if (cols == 0) throw DomainError("weight matrix needs at least one column");
    for (const auto& r : weights)
        if (r.size() != cols) throw DomainError("weight matrix rows differ in length");

    // Minimum-cost assignment on cost = -weight, padded with zero-weight
    // dummy rows/columns. Potentials u, v; 1-based with column 0 as sentinel.
    const std::size_t n = std::max(rows, cols);
    auto cost = [&](std::size_t i, std::size_t j) {
        return (i < rows && j < cols) ? -weights[i][j] : 0.0;
    };
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0), v(n + 1, 0), minv(n + 1);
    std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
    std::vector<bool> used(n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
        match[0] = i;
        std::size_t j0 = 0;
        std::fill(minv.begin(), minv.end(), inf);
        std::fill(used.begin(), used.end(), false);
        do {
            used[j0] = true;
            const std::size_t i0 = match[j0];
            double delta = inf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    Assignment out;
    out.column_of_row.assign(rows, std::nullopt);
    for (std::size_t j = 1; j <= n; ++j) {
        const std::size_t i = match[j] - 1;
        if (i < rows && j - 1 < cols) {
            out.column_of_row[i] = j - 1;
            out.total += weights[i][j - 1];
        }
    }
    return out;
}

double accuracy(std::span<const std::size_t> truth, std::span<const std::size_t> pred) {
    const ContingencyTable table = ContingencyTable::build(truth, pred);
    // Rows are predicted communities so that PM maps each one to a true community.
    std::vector<std::vector<double>> w(table.pred_sizes.size(), std::vector<double>(table.truth_sizes.size()));
    for (std::size_t i = 0; i < table.truth_sizes.size(); ++i)
        for (std::size_t j = 0; j < table.pred_sizes.size(); ++j) w[j][i] = static_cast<double>(table.counts[i][j]);
    return max_weight_matching(w).total / static_cast<double>(table.total);
}

}  // namespace isofdp
