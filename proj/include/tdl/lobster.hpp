// lobster.hpp - greedy tertiary labels and the maximal-lobster construction.
//
// The central path of a maximal lobster is labelled with the caterpillar
// pattern (1, D1+3, D1+2, ...), so a primary vertex carries a label r in
// R = {1, D1+2, D1+3}; its secondary neighbours take labels s in
// S = [2, D1+1]. m(D1, D2, r, s) is the largest label the greedy rule needs
// for the D2-1 tertiary leaves below an s-labelled secondary vertex.
#pragma once

#include "tdl/constructions.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace tdl {

struct LobsterContext {
    std::size_t delta1;
    std::size_t delta2;

    LobsterContext(std::size_t d1, std::size_t d2);

    std::array<Label, 3> primary_labels() const;
    Label secondary_min() const { return 2; }
    Label secondary_max() const { return static_cast<Label>(delta1) + 1; }
};

enum class PairIssue { None, Double, Triple };

std::string to_string(PairIssue issue);

struct PairCheck {
    bool valid;
    PairIssue reason;
};

/// Whether an r-labelled primary can have an s-labelled secondary neighbour.
/// Throws ParameterError for r outside R or s outside S.
PairCheck pair_valid(std::size_t delta1, Label r, Label s);

/// Greedy tertiary labels for one secondary vertex, in the order chosen:
/// ascending, skipping s, r, 2s, s/2 and any x whose difference |s - x| is
/// already present at the secondary vertex (the primary's included).
std::vector<Label> tertiary_labels(std::size_t delta1, std::size_t delta2, Label r, Label s);

/// Largest greedy tertiary label. Throws ParameterError for invalid pairs.
Label m_value(std::size_t delta1, std::size_t delta2, Label r, Label s);

struct MTableCell {
    Label r;
    Label s;
    std::optional<Label> value;
    PairIssue issue;
};

struct MTable {
    std::size_t delta1;
    std::size_t delta2;
    std::vector<Label> rows;     // r values, ascending
    std::vector<Label> columns;  // s values, ascending
    std::vector<MTableCell> cells;  // row-major

    const MTableCell& at(Label r, Label s) const;
    /// Aligned grid, rows r and columns s; invalid cells are blank.
    std::string render_text() const;
    /// Same grid as CSV; invalid cells are empty fields.
    std::string render_csv() const;
};

MTable m_table(std::size_t delta1, std::size_t delta2);

/// Least D2 from which every unit increase of D2 raises m by exactly one.
std::size_t stabilization_point(std::size_t delta1, Label r, Label s);

/// The least D1 - 2 valid secondary labels for an r-labelled primary.
std::vector<Label> secondary_labels(std::size_t delta1, Label r);

/// [Delta + 1, D1 + D2 + 1] with Delta = max(D1, D2).
BoundsResult lobster_bounds(std::size_t delta1, std::size_t delta2);
/// As above, with the lower bound sharpened by lower_bound(g).
BoundsResult lobster_bounds(std::size_t delta1, std::size_t delta2, const Graph& g);

ConstructionResult label_maximal_lobster(std::size_t n, std::size_t delta1, std::size_t delta2);

}  // namespace tdl
