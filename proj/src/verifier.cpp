#include "tdl/verifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace tdl {

Label Labeling::max_label() const {
    return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end());
}

void check_labeling_shape(const Graph& g, const Labeling& labeling) {
    if (labeling.size() != g.vertex_count())
        throw std::invalid_argument("labeling has " + std::to_string(labeling.size()) +
                                    " labels for a graph with " +
                                    std::to_string(g.vertex_count()) + " vertices");
    for (std::size_t v = 0; v < labeling.size(); ++v)
        if (labeling[v] < 1)
            throw std::invalid_argument("label of vertex " + std::to_string(v) +
                                        " is not a positive integer");
}

std::vector<EdgeLabel> induced_edge_labels(const Graph& g, const Labeling& labeling) {
    check_labeling_shape(g, labeling);
    std::vector<EdgeLabel> out;
    for (const auto& e : g.edges()) out.push_back({e, std::abs(labeling[e.u] - labeling[e.v])});
    return out;
}

std::string to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::Improper: return "improper";
        case ViolationKind::Double: return "double";
        case ViolationKind::Triple: return "triple";
    }
    return "?";
}

std::size_t ViolationReport::count(ViolationKind kind) const {
    return static_cast<std::size_t>(std::count_if(
        violations.begin(), violations.end(), [kind](const auto& v) { return v.kind == kind; }));
}

ViolationReport find_violations(const Graph& g, const Labeling& labeling) {
    check_labeling_shape(g, labeling);
    ViolationReport report;
    for (const auto& [u, v] : g.edges()) {
        const Label a = labeling[u], b = labeling[v];
        if (a == b)
            report.violations.push_back({ViolationKind::Improper, {u, v}, {a, b}});
        else if (a == 2 * b)
            report.violations.push_back({ViolationKind::Double, {u, v}, {a, b}});
        else if (b == 2 * a)
            report.violations.push_back({ViolationKind::Double, {v, u}, {b, a}});
    }
    // Triples: two neighbours of the same centre at equal distance.
    for (Vertex c = 0; c < g.vertex_count(); ++c) {
        const Label lc = labeling[c];
        std::map<Label, std::vector<Vertex>> by_distance;
        for (Vertex w : g.neighbors(c)) by_distance[std::abs(labeling[w] - lc)].push_back(w);
        for (const auto& [dist, group] : by_distance) {
            for (std::size_t i = 0; i < group.size(); ++i)
                for (std::size_t j = i + 1; j < group.size(); ++j) {
                    const Vertex a = group[i], b = group[j];  // a < b: neighbours are sorted
                    report.violations.push_back(
                        {ViolationKind::Triple, {a, c, b}, {labeling[a], lc, labeling[b]}});
                }
        }
    }
    return report;
}

Label total_max_label(const Graph& g, const Labeling& labeling) {
    Label best = labeling.max_label();
    for (const auto& e : induced_edge_labels(g, labeling)) best = std::max(best, e.label);
    return best;
}

bool is_k_tdl(const Graph& g, const Labeling& labeling, Label k) {
    return find_violations(g, labeling).empty() && total_max_label(g, labeling) <= k;
}

bool definitional_check(const Graph& g, const Labeling& labeling) {
    const auto edges = induced_edge_labels(g, labeling);
    for (const auto& [e, label] : edges) {
        // f maps into the positive integers
        if (label < 1) return false;
        // adjacent vertices
        if (labeling[e.u] == labeling[e.v]) return false;
        // an edge and its incident vertices
        if (label == labeling[e.u] || label == labeling[e.v]) return false;
    }
    // incident edges
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto& e = edges[i].edge;
            const auto& f = edges[j].edge;
            const bool incident = e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v;
            if (incident && edges[i].label == edges[j].label) return false;
        }
    return true;
}

bool locally_consistent(const Graph& g, const std::vector<Label>& partial, Vertex v) {
    const Label x = partial.at(v);
    if (x == 0) return true;
    std::vector<Label> seen;
    for (Vertex u : g.neighbors(v)) {
        const Label lu = partial[u];
        if (lu == 0) continue;
        if (lu == x || lu == 2 * x || x == 2 * lu) return false;
        const Label d = std::abs(x - lu);
        if (std::find(seen.begin(), seen.end(), d) != seen.end()) return false;
        seen.push_back(d);
        for (Vertex w : g.neighbors(u))
            if (w != v && partial[w] != 0 && std::abs(partial[w] - lu) == d) return false;
    }
    return true;
}

Labeling power_of_three_labeling(std::size_t vertex_count) {
    if (vertex_count > 40)
        throw ParameterError("3^(n-1) overflows a 64-bit label for n = " +
                             std::to_string(vertex_count) + " (limit 40)");
    Labeling out;
    Label p = 1;
    for (std::size_t i = 0; i < vertex_count; ++i) {
        if (i > 0) p *= 3;
        out.labels.push_back(p);
    }
    return out;
}

}  // namespace tdl
