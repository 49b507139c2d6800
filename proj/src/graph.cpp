#include "tdl/graph.hpp"

#include <algorithm>
#include <queue>

namespace tdl {

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
    Graph g(vertex_count);
    for (const auto& e : edges) g.add_edge(e.u, e.v);
    return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
    if (!try_add_edge(u, v))
        throw ParameterError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
}

bool Graph::try_add_edge(Vertex u, Vertex v) {
    const auto n = adj_.size();
    if (u >= n || v >= n)
        throw ParameterError("edge endpoint out of range: " + std::to_string(u) + " " +
                             std::to_string(v) + " (vertex count " + std::to_string(n) + ")");
    if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return false;
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edge_count_;
    return true;
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& a : adj_) best = std::max(best, a.size());
    return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& au = adj_.at(u);
    return std::binary_search(au.begin(), au.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.push_back({u, v});
    return out;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
    std::vector<std::optional<Vertex>> index(adj_.size());
    for (Vertex i = 0; i < keep.size(); ++i) {
        if (keep[i] >= adj_.size()) throw ParameterError("induced: vertex out of range");
        index[keep[i]] = i;
    }
    Graph out(keep.size());
    for (Vertex i = 0; i < keep.size(); ++i)
        for (Vertex w : adj_[keep[i]])
            if (index[w] && i < *index[w]) out.add_edge(i, *index[w]);
    return out;
}

bool Graph::is_edge_subgraph_of(const Graph& other) const {
    if (adj_.size() > other.vertex_count()) return false;
    for (const auto& e : edges())
        if (!other.adjacent(e.u, e.v)) return false;
    return true;
}

std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, Vertex source) {
    std::vector<std::optional<std::size_t>> dist(g.vertex_count());
    std::queue<Vertex> q;
    dist.at(source) = 0;
    q.push(source);
    while (!q.empty()) {
        auto u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u)) {
            if (dist[w]) continue;
            dist[w] = *dist[u] + 1;
            q.push(w);
        }
    }
    return dist;
}

std::optional<std::size_t> diameter(const Graph& g) {
    if (g.empty()) throw ParameterError("diameter of the empty graph is undefined");
    std::size_t best = 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        for (const auto& d : bfs_distances(g, s)) {
            if (!d) return std::nullopt;
            best = std::max(best, *d);
        }
    }
    return best;
}

bool is_connected(const Graph& g) {
    if (g.empty()) return true;
    auto d = bfs_distances(g, 0);
    return std::all_of(d.begin(), d.end(), [](const auto& x) { return x.has_value(); });
}

bool is_tree(const Graph& g) {
    return !g.empty() && g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

}  // namespace tdl
