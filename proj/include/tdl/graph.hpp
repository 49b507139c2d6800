// graph.hpp - simple undirected graph with sorted adjacency lists.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tdl {

using Vertex = std::size_t;
using Label = std::int64_t;

/// Raised when a parameter falls outside the domain an operation accepts.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Edge {
    Vertex u;
    Vertex v;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 0..n-1.
///
/// Adjacency lists are kept sorted and symmetric; self-loops and parallel
/// edges are rejected when edges are added.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t vertex_count) : adj_(vertex_count) {}

    /// Builds a graph from an edge list. Throws ParameterError on self-loops,
    /// duplicate edges or out-of-range endpoints.
    static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

    void add_edge(Vertex u, Vertex v);
    /// Returns false instead of throwing when the edge already exists.
    bool try_add_edge(Vertex u, Vertex v);

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    bool empty() const { return adj_.empty(); }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
    std::size_t max_degree() const;
    bool adjacent(Vertex u, Vertex v) const;

    /// All edges with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    /// Induced subgraph on `keep` (renumbered in the given order).
    Graph induced(std::span<const Vertex> keep) const;

    /// True iff every edge of *this is an edge of `other` (same vertex numbering).
    bool is_edge_subgraph_of(const Graph& other) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

/// Unweighted shortest-path distances from `source`; unreachable vertices
/// are std::nullopt.
std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, Vertex source);

/// Maximum eccentricity. std::nullopt means infinite (disconnected graph).
/// Throws ParameterError for the empty graph.
std::optional<std::size_t> diameter(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

}  // namespace tdl
