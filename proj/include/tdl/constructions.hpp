// constructions.hpp - explicit labelings and closed-form values per family.
//
// Every labeling is expressed in the vertex numbering of build() (see
// families.hpp) and is checked with the verifier before it is returned.
#pragma once

#include "tdl/families.hpp"
#include "tdl/solver.hpp"
#include "tdl/verifier.hpp"

#include <string>
#include <vector>

namespace tdl {

struct ConstructionResult {
    Labeling labeling;
    Label claimed_k = 0;
    std::string provenance;
    /// claimed_k equals the family's known chromatic value
    bool tight = false;
    /// the textbook construction failed verification and was fixed by search
    bool repaired = false;
};

ConstructionResult label_path(std::size_t n);
ConstructionResult label_cycle(std::size_t n);
ConstructionResult label_star(std::size_t m);

/// Labels the centre of K_{1,m} can take in some (m + r)-total difference
/// labeling (largest label exactly m + r), for 1 <= r <= m. Sorted ascending.
std::vector<Label> feasible_center_labels(std::size_t m, std::size_t r);

ConstructionResult label_wheel(std::size_t n);
ConstructionResult label_gear(std::size_t n);
ConstructionResult label_helm(std::size_t n);

/// The Delta + 3 spine pattern (1, Delta+3, Delta+2, ...) with leaves filled
/// from the per-label safe ranges. Delta <= 2 delegates to label_path and a
/// single spine vertex to label_star.
ConstructionResult label_caterpillar(const std::vector<std::size_t>& spine_degrees);

/// Delta + 1, Delta + 2 or Delta + 3 by the caterpillar classification.
/// Requires Delta >= 3.
Label chi_td_caterpillar(const std::vector<std::size_t>& spine_degrees);

ConstructionResult label_uniform_tree(std::size_t delta, std::size_t h);

/// floor((3 Delta + 3) / 2).
Label chi_td_uniform_tree_h2(std::size_t delta);

/// Dispatches to the family's construction (lobsters included).
ConstructionResult construct(const FamilySpec& spec);

/// Known value or bounds for the family, with the theorem used as provenance.
BoundsResult closed_form(const FamilySpec& spec);

}  // namespace tdl
