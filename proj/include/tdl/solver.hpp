// solver.hpp - exact search for total difference labelings.
#pragma once

#include "tdl/graph.hpp"
#include "tdl/verifier.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tdl {

enum class VertexOrder {
    /// Breadth-first from a maximum-degree vertex (ties by index, neighbours
    /// expanded by decreasing degree), with pendant and isolated vertices moved
    /// to the end.
    DegreeBfs,
    InputOrder,
};

struct SearchOptions {
    std::optional<Label> max_k;
    std::optional<std::uint64_t> node_limit;
    std::optional<std::chrono::milliseconds> time_limit;
    VertexOrder order = VertexOrder::DegreeBfs;
};

enum class Outcome { Found, None, Indeterminate };

std::string to_string(Outcome outcome);

struct DecisionResult {
    Outcome outcome = Outcome::Indeterminate;
    std::optional<Labeling> witness;
    std::uint64_t nodes = 0;
};

struct BoundsResult {
    Label lower = 1;
    Label upper = 1;
    std::optional<Label> exact;
    std::optional<Labeling> witness;
    /// Theorem name, "search" or "oracle".
    std::string provenance;
};

std::vector<Vertex> search_order(const Graph& g, VertexOrder order);

/// Decides whether g admits a k-total difference labeling (all vertex labels
/// in [1, k]). The witness, when found, is the lexicographically least one
/// under the search order.
DecisionResult has_k_tdl(const Graph& g, Label k, const SearchOptions& opts = {});

/// Same search with some vertices pinned. `partial[v] == 0` marks a free
/// vertex; free vertices are tried in `order` (defaults to the search order
/// restricted to free vertices), smallest label first.
DecisionResult complete_labeling(const Graph& g, const std::vector<Label>& partial, Label k,
                                 const SearchOptions& opts = {},
                                 std::optional<std::vector<Vertex>> order = std::nullopt);

/// Number of distinct edge labels a vertex labelled `label` can carry when
/// every label lies in [1, k]. A vertex of degree d can only take labels with
/// at least d usable differences.
Label usable_differences(Label label, Label k);

/// max(Delta + 1, n when diam(g) <= 2, 1).
Label lower_bound(const Graph& g);

/// 3^(n-1), saturating at the largest Label for n > 40.
Label power_of_three_bound(std::size_t vertex_count);

/// Iterative deepening on k from lower_bound(g). Budget exhaustion (or
/// reaching opts.max_k) leaves `exact` empty with the best bounds known.
BoundsResult chi_td(const Graph& g, const SearchOptions& opts = {});

/// Independent oracle: plain enumeration of [1, k]^n for k = 1..cap checked
/// with the definitional rules. Requires n <= 8.
std::optional<Label> brute_force_chi(const Graph& g, Label cap);

}  // namespace tdl
