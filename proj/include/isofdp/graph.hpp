#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace isofdp {

using NodeId = std::size_t;
using Edge = std::pair<NodeId, NodeId>;

/// Undirected simple graph over dense node indices 0..n-1.
///
/// Every node carries the token it had in the source file; all algorithms
/// work on the dense indices and outputs map back through token(). Edges are
/// stored once as (u, v) with u < v, sorted; self-loops and duplicates never
/// survive construction. Immutable after construction.
class Graph {
public:
    Graph() = default;

    /// Nodes are named "0".."n-1". Self-loops and duplicate edges are dropped.
    Graph(std::size_t node_count, std::span<const Edge> edges);

    /// Tokens must be unique; edge endpoints index into `tokens`.
    Graph(std::vector<std::string> tokens, std::span<const Edge> edges);

    std::size_t node_count() const noexcept { return tokens_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Sorted open neighborhood of `v`.
    std::span<const NodeId> neighbors(NodeId v) const;
    std::size_t degree(NodeId v) const { return neighbors(v).size(); }
    bool has_edge(NodeId u, NodeId v) const;

    const std::string& token(NodeId v) const { return tokens_.at(v); }
    const std::vector<std::string>& tokens() const noexcept { return tokens_; }

    /// Dense index for a source token; throws std::out_of_range if unknown.
    NodeId index_of(const std::string& token) const { return index_.at(token); }
    bool contains(const std::string& token) const { return index_.count(token) != 0; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.tokens_ == b.tokens_ && a.edges_ == b.edges_;
    }

private:
    void build(std::span<const Edge> edges);

    std::vector<std::string> tokens_;
    std::unordered_map<std::string, NodeId> index_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> adjacency_;
};

/// Counters gathered while normalizing an input file.
struct LoadStats {
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_dropped = 0;
};

/// Whitespace-separated edge list, one edge per line. Lines starting with
/// `#` or `%` are comments. Tokens map to indices in first-seen order.
Graph load_edge_list(std::istream& in, LoadStats* stats = nullptr);

/// The `graph [ node [ id .. ] edge [ source .. target .. ] ]` subset of GML.
/// Node tokens are the GML ids, in declaration order.
Graph load_gml(std::istream& in, LoadStats* stats = nullptr);

/// Scalar value of `key` inside each `node [ ... ]` record, in declaration
/// order; empty string where absent. Useful for ground truth stored in the
/// dataset itself (e.g. a `value` attribute).
std::vector<std::string> gml_node_attribute(std::istream& in, const std::string& key);

void write_edge_list(std::ostream& out, const Graph& g);
void write_gml(std::ostream& out, const Graph& g);

/// `{"nodes":[tokens...],"edges":[[u,v],...]}` with dense indices.
std::string to_json(const Graph& g);

/// True when both graphs have the same token set and the same edges once
/// endpoints are expressed as tokens. Index order may differ.
bool same_structure(const Graph& a, const Graph& b);

/// Component label per node: 0-based, contiguous, numbered in order of the
/// smallest node index each component contains.
std::vector<std::size_t> connected_components(const Graph& g);

}  // namespace isofdp
