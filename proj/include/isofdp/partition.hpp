#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace isofdp {

/// Node → community labeling with contiguous, non-empty labels 0..k-1.
class Partition {
public:
    Partition() = default;

    /// Throws DomainError unless the labels are exactly {0, .., k-1}.
    explicit Partition(std::vector<std::size_t> labels);

    /// Relabels arbitrary integer labels to 0..k-1 in order of first appearance.
    static Partition from_any(std::span<const long long> labels);
    static Partition from_any(std::span<const std::size_t> labels);

    std::size_t node_count() const noexcept { return labels_.size(); }
    std::size_t community_count() const noexcept { return k_; }
    std::size_t operator[](std::size_t node) const { return labels_[node]; }
    const std::vector<std::size_t>& labels() const noexcept { return labels_; }

    /// Node count per community.
    std::vector<std::size_t> sizes() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<std::size_t> labels_;
    std::size_t k_ = 0;
};

/// True when both labelings induce the same set partition.
bool same_grouping(std::span<const std::size_t> a, std::span<const std::size_t> b);

}  // namespace isofdp
