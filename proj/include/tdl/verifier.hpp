// verifier.hpp - checks vertex labelings against the total difference rules.
//
// A vertex labeling induces edge labels |L(u) - L(v)|. The induced total
// labeling is proper exactly when the vertex labeling is proper and contains
// no double (adjacent u, v with L(u) = 2 L(v)) and no triple (path u-v-w with
// |L(u) - L(v)| = |L(v) - L(w)|). find_violations() works from that local
// criterion; definitional_check() re-derives the answer from the induced
// total labeling directly and serves as its oracle.
#pragma once

#include "tdl/graph.hpp"

#include <string>
#include <vector>

namespace tdl {

struct Labeling {
    std::vector<Label> labels;

    Labeling() = default;
    explicit Labeling(std::vector<Label> l) : labels(std::move(l)) {}
    Labeling(std::initializer_list<Label> l) : labels(l) {}

    std::size_t size() const { return labels.size(); }
    Label operator[](Vertex v) const { return labels[v]; }
    Label& operator[](Vertex v) { return labels[v]; }
    Label max_label() const;

    friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// Throws std::invalid_argument if the labeling length does not match the
/// graph or a label is not positive.
void check_labeling_shape(const Graph& g, const Labeling& labeling);

struct EdgeLabel {
    Edge edge;
    Label label;
};

/// Edge labels in the order of g.edges(). Improper pairs produce 0.
std::vector<EdgeLabel> induced_edge_labels(const Graph& g, const Labeling& labeling);

enum class ViolationKind { Improper, Double, Triple };

std::string to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    /// Improper: (u, v) with u < v. Double: (big, small) with big = 2 small.
    /// Triple: (lower endpoint, centre, higher endpoint).
    std::vector<Vertex> vertices;
    std::vector<Label> labels;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ViolationReport {
    std::vector<Violation> violations;

    bool empty() const { return violations.empty(); }
    std::size_t count(ViolationKind kind) const;
};

ViolationReport find_violations(const Graph& g, const Labeling& labeling);

/// Largest vertex or induced edge label.
Label total_max_label(const Graph& g, const Labeling& labeling);

bool is_k_tdl(const Graph& g, const Labeling& labeling, Label k);

/// Checks the three total-labeling conditions on the induced edge labels
/// without going through doubles and triples.
bool definitional_check(const Graph& g, const Labeling& labeling);

/// Checks every rule that involves vertex v against the labelled vertices of a
/// partial labeling (0 = unlabelled): properness and doubles on edges at v,
/// triples centred at v, and triples centred at a neighbour of v.
bool locally_consistent(const Graph& g, const std::vector<Label>& partial, Vertex v);

/// Label vertex i with 3^i. Throws ParameterError when 3^(n-1) does not fit
/// in a Label (n > 40).
Labeling power_of_three_labeling(std::size_t vertex_count);

}  // namespace tdl
