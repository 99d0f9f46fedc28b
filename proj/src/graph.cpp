#include "isofdp/graph.hpp"

#include "isofdp/errors.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace isofdp {

namespace {

std::vector<std::string> numbered_tokens(std::size_t n) {
    std::vector<std::string> tokens;
    tokens.reserve(n);
    for (std::size_t i = 0; i < n; ++i) tokens.push_back(std::to_string(i));
    return tokens;
}

}  // namespace

Graph::Graph(std::size_t node_count, std::span<const Edge> edges)
    : Graph(numbered_tokens(node_count), edges) {}

Graph::Graph(std::vector<std::string> tokens, std::span<const Edge> edges)
    : tokens_(std::move(tokens)) {
    index_.reserve(tokens_.size());
    for (NodeId i = 0; i < tokens_.size(); ++i) {
        if (!index_.emplace(tokens_[i], i).second)
            throw DomainError("duplicate node token '" + tokens_[i] + "'");
    }
    build(edges);
}

void Graph::build(std::span<const Edge> edges) {
    const std::size_t n = tokens_.size();
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw DomainError("edge endpoint out of range (" + std::to_string(u) + ", " +
                              std::to_string(v) + ") for n = " + std::to_string(n));
        if (u == v) continue;
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    std::vector<std::size_t> degree(n, 0);
    for (auto [u, v] : edges_) {
        ++degree[u];
        ++degree[v];
    }
    offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + degree[i];
    adjacency_.assign(offsets_[n], 0);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (auto [u, v] : edges_) {
        adjacency_[cursor[u]++] = v;
        adjacency_[cursor[v]++] = u;
    }
    for (std::size_t i = 0; i < n; ++i)
        std::sort(adjacency_.begin() + offsets_[i], adjacency_.begin() + offsets_[i + 1]);
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
    if (v >= node_count()) throw DomainError("node index " + std::to_string(v) + " out of range");
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph load_edge_list(std::istream& in, LoadStats* stats) {
    std::vector<std::string> tokens;
    std::unordered_map<std::string, NodeId> index;
    std::vector<Edge> edges;
    LoadStats local;

    auto intern = [&](const std::string& tok) {
        auto [it, inserted] = index.emplace(tok, tokens.size());
        if (inserted) tokens.push_back(tok);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#' || line[first] == '%') continue;

        std::istringstream fields(line);
        std::vector<std::string> parts;
        for (std::string f; fields >> f;) parts.push_back(f);
        if (parts.size() != 2)
            throw ParseError("expected 2 node tokens, found " + std::to_string(parts.size()),
                             line_no);
        if (parts[0] == parts[1]) {
            intern(parts[0]);
            ++local.self_loops_dropped;
            continue;
        }
        const NodeId u = intern(parts[0]);
        const NodeId v = intern(parts[1]);
        edges.emplace_back(u, v);
    }

    Graph g(std::move(tokens), edges);
    local.duplicates_dropped = edges.size() - g.edge_count();
    if (stats) *stats = local;
    return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    for (auto [u, v] : g.edges()) out << g.token(u) << ' ' << g.token(v) << '\n';
}

std::string to_json(const Graph& g) {
    nlohmann::json j;
    j["nodes"] = g.tokens();
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j.dump();
}

bool same_structure(const Graph& a, const Graph& b) {
    if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return false;
    std::set<std::string> ta(a.tokens().begin(), a.tokens().end());
    std::set<std::string> tb(b.tokens().begin(), b.tokens().end());
    if (ta != tb) return false;
    using TokenEdge = std::pair<std::string, std::string>;
    auto token_edges = [](const Graph& g) {
        std::set<TokenEdge> out;
        for (auto [u, v] : g.edges()) {
            auto s = g.token(u), t = g.token(v);
            if (t < s) std::swap(s, t);
            out.emplace(std::move(s), std::move(t));
        }
        return out;
    };
    return token_edges(a) == token_edges(b);
}

std::vector<std::size_t> connected_components(const Graph& g) {
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> label(g.node_count(), unset);
    std::size_t next = 0;
    std::queue<NodeId> frontier;
    for (NodeId s = 0; s < g.node_count(); ++s) {
        if (label[s] != unset) continue;
        label[s] = next;
        frontier.push(s);
        while (!frontier.empty()) {
            NodeId v = frontier.front();
            frontier.pop();
            for (NodeId w : g.neighbors(v)) {
                if (label[w] == unset) {
                    label[w] = next;
                    frontier.push(w);
                }
            }
        }
        ++next;
    }
    return label;
}

}  // namespace isofdp
