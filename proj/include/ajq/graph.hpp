#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace ajq {

/// Simple digraph: node and edge sets, no multiplicity. Deterministic
/// iteration order (ordered containers) so derived output is reproducible.
template <typename Node>
struct Digraph {
    std::set<Node> nodes;
    std::set<std::pair<Node, Node>> edges;

    void add_node(const Node& n) { nodes.insert(n); }

    void add_edge(const Node& from, const Node& to) {
        nodes.insert(from);
        nodes.insert(to);
        edges.emplace(from, to);
    }

    bool has_edge(const Node& from, const Node& to) const {
        return edges.count({from, to}) != 0;
    }

    bool operator==(const Digraph&) const = default;
};

/// Kahn's algorithm. Returns a topological ordering if the graph is acyclic
/// (self-loops count as cycles), otherwise nullopt. Ties among ready nodes
/// are broken by taking the smallest node.
template <typename Node>
std::optional<std::vector<Node>> topological_order(const Digraph<Node>& graph) {
    std::map<Node, std::size_t> in_degree;
    std::map<Node, std::vector<Node>> successors;
    for (const auto& n : graph.nodes)
        in_degree[n] = 0;
    for (const auto& [from, to] : graph.edges) {
        ++in_degree[to];
        successors[from].push_back(to);
    }

    std::set<Node> ready;
    for (const auto& [n, deg] : in_degree)
        if (deg == 0)
            ready.insert(n);

    std::vector<Node> order;
    order.reserve(graph.nodes.size());
    while (!ready.empty()) {
        Node n = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(n);
        for (const auto& next : successors[n])
            if (--in_degree[next] == 0)
                ready.insert(next);
    }
    if (order.size() != graph.nodes.size())
        return std::nullopt;
    return order;
}

} // namespace ajq
