#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace isofdp {

/// Counts n_ij of nodes in true community i and predicted community j.
/// Labels of either side are compacted to 0..k-1 in order of first appearance.
struct ContingencyTable {
    std::vector<std::vector<std::size_t>> counts;  // rows: truth, cols: prediction
    std::vector<std::size_t> truth_sizes;
    std::vector<std::size_t> pred_sizes;
    std::size_t total = 0;

    static ContingencyTable build(std::span<const std::size_t> truth, std::span<const std::size_t> pred);
};

/// Normalized mutual information with the sqrt(H(C) H(C')) normalization and
/// natural logs. When either side has a single community the value is 1 if
/// both induce the same set partition and 0 otherwise.
/// Throws DomainError on length mismatch or empty input.
double nmi(std::span<const std::size_t> truth, std::span<const std::size_t> pred);

struct Assignment {
    std::vector<std::optional<std::size_t>> column_of_row;  // empty: row left unmatched
    double total = 0;
};

/// Maximum-weight assignment of rows to distinct columns for a rectangular
/// nonnegative matrix (Hungarian method on a zero-padded square matrix).
Assignment max_weight_matching(const std::vector<std::vector<double>>& weights);

/// Fraction of nodes whose predicted community maps onto their true one
/// under the best one-to-one mapping of predicted to true communities.
double accuracy(std::span<const std::size_t> truth, std::span<const std::size_t> pred);

}  // namespace isofdp
