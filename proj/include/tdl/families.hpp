// families.hpp - parameterised generators for the labelled graph families.
//
// Vertex numbering is part of the contract; constructions address vertices
// by position:
//   Path(n)         v_1..v_n -> 0..n-1
//   Cycle(n)        v_1..v_n -> 0..n-1 in cyclic order
//   Star(m)         hub 0, leaves 1..m
//   Wheel(n)        hub 0, rim 1..n-1 in cyclic order
//   Gear(n)         hub 0, rim 1..2n-2 in cyclic order; odd indices are the
//                   degree-3 rim vertices (adjacent to the hub)
//   Helm(n)         Wheel(n) numbering, then the leaf of rim vertex i is n-1+i
//   Caterpillar     spine 0..p-1, then the leaves of spine vertex 0, 1, ...
//   MaximalLobster  primary path 0..n-1, then secondaries grouped by primary,
//                   then tertiaries grouped by secondary
//   UniformTree     breadth-first numbering from the root 0
#pragma once

#include "tdl/graph.hpp"

#include <string>
#include <variant>
#include <vector>

namespace tdl {

namespace family {
struct Path { std::size_t n; };
struct Cycle { std::size_t n; };
struct Star { std::size_t m; };
struct Wheel { std::size_t n; };
struct Gear { std::size_t n; };
struct Helm { std::size_t n; };
struct Caterpillar { std::vector<std::size_t> spine_degrees; };
struct MaximalLobster { std::size_t n; std::size_t delta1; std::size_t delta2; };
struct UniformTree { std::size_t delta; std::size_t h; };
}  // namespace family

using FamilySpec = std::variant<family::Path, family::Cycle, family::Star, family::Wheel,
                                family::Gear, family::Helm, family::Caterpillar,
                                family::MaximalLobster, family::UniformTree>;

enum class VertexRole { Hub, Cycle, Spine, Secondary, Tertiary, Leaf, Root, Internal };

std::string to_string(VertexRole role);

/// Human-readable form, e.g. "wheel(n=7)" or "caterpillar(1,3,3,3,1)".
std::string describe(const FamilySpec& spec);

/// Throws ParameterError naming the violated bound.
void validate(const FamilySpec& spec);

struct FamilyGraph {
    Graph graph;
    std::vector<VertexRole> roles;
};

FamilyGraph build(const FamilySpec& spec);

/// Number of spine neighbours of spine vertex i in a caterpillar with p spine vertices.
std::size_t caterpillar_spine_neighbors(std::size_t i, std::size_t p);

/// Maximum degree of the caterpillar described by `spine_degrees` (leaves have degree 1).
std::size_t caterpillar_max_degree(const std::vector<std::size_t>& spine_degrees);

}  // namespace tdl
