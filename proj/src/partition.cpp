#include "isofdp/partition.hpp"

#include "isofdp/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace isofdp {

Partition::Partition(std::vector<std::size_t> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) return;
    k_ = *std::max_element(labels_.begin(), labels_.end()) + 1;
    std::vector<bool> seen(k_, false);
    for (auto l : labels_) seen[l] = true;
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw DomainError("partition labels must be contiguous 0..k-1 (k = " + std::to_string(k_) + ")");
}

namespace {

template <class T>
Partition relabel(std::span<const T> labels) {
    std::map<T, std::size_t> remap;
    std::vector<std::size_t> out;
    out.reserve(labels.size());
    for (const T& l : labels) out.push_back(remap.emplace(l, remap.size()).first->second);
    return Partition(std::move(out));
}

}  // namespace

Partition Partition::from_any(std::span<const long long> labels) { return relabel(labels); }
Partition Partition::from_any(std::span<const std::size_t> labels) { return relabel(labels); }

std::vector<std::size_t> Partition::sizes() const {
    std::vector<std::size_t> out(k_, 0);
    for (auto l : labels_) ++out[l];
    return out;
}

bool same_grouping(std::span<const std::size_t> a, std::span<const std::size_t> b) {
    if (a.size() != b.size()) return false;
    return Partition::from_any(a) == Partition::from_any(b);
}

}  // namespace isofdp
