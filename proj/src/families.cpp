#include "tdl/families.hpp"

#include <algorithm>
#include <sstream>

namespace tdl {

namespace {

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr std::size_t kMaxGeneratedVertices = 10'000'000;

void require(bool ok, const std::string& what) {
    if (!ok) throw ParameterError(what);
}

// Adds `count` pendant vertices to `parent`, numbered consecutively from `next`.
void attach_leaves(Graph& g, std::vector<VertexRole>& roles, Vertex parent, std::size_t count,
                   Vertex& next, VertexRole role) {
    for (std::size_t i = 0; i < count; ++i) {
        g.add_edge(parent, next);
        roles[next] = role;
        ++next;
    }
}

FamilyGraph make_wheel(std::size_t n) {
    FamilyGraph out{Graph(n), std::vector<VertexRole>(n, VertexRole::Cycle)};
    out.roles[0] = VertexRole::Hub;
    const std::size_t rim = n - 1;
    for (Vertex i = 1; i <= rim; ++i) {
        out.graph.add_edge(0, i);
        out.graph.add_edge(i, i % rim + 1);
    }
    return out;
}

std::size_t uniform_tree_size(std::size_t delta, std::size_t h) {
    std::size_t total = 1, level = delta;
    for (std::size_t d = 1; d <= h; ++d) {
        total += level;
        require(total <= kMaxGeneratedVertices, "uniform tree too large");
        level *= (delta - 1);
    }
    return total;
}

}  // namespace

std::string to_string(VertexRole role) {
    switch (role) {
        case VertexRole::Hub: return "hub";
        case VertexRole::Cycle: return "cycle";
        case VertexRole::Spine: return "spine";
        case VertexRole::Secondary: return "secondary";
        case VertexRole::Tertiary: return "tertiary";
        case VertexRole::Leaf: return "leaf";
        case VertexRole::Root: return "root";
        case VertexRole::Internal: return "internal";
    }
    return "?";
}

std::size_t caterpillar_spine_neighbors(std::size_t i, std::size_t p) {
    if (p <= 1) return 0;
    return (i == 0 || i + 1 == p) ? 1 : 2;
}

std::size_t caterpillar_max_degree(const std::vector<std::size_t>& spine_degrees) {
    std::size_t best = 0;
    for (auto d : spine_degrees) best = std::max(best, d);
    // leaves hang off some spine vertex
    for (std::size_t i = 0; i < spine_degrees.size(); ++i)
        if (spine_degrees[i] > caterpillar_spine_neighbors(i, spine_degrees.size()))
            best = std::max<std::size_t>(best, 1);
    return best;
}

std::string describe(const FamilySpec& spec) {
    std::ostringstream os;
    std::visit(overloaded{
                   [&](const family::Path& s) { os << "path(n=" << s.n << ")"; },
                   [&](const family::Cycle& s) { os << "cycle(n=" << s.n << ")"; },
                   [&](const family::Star& s) { os << "star(m=" << s.m << ")"; },
                   [&](const family::Wheel& s) { os << "wheel(n=" << s.n << ")"; },
                   [&](const family::Gear& s) { os << "gear(n=" << s.n << ")"; },
                   [&](const family::Helm& s) { os << "helm(n=" << s.n << ")"; },
                   [&](const family::Caterpillar& s) {
                       os << "caterpillar(";
                       for (std::size_t i = 0; i < s.spine_degrees.size(); ++i)
                           os << (i ? "," : "") << s.spine_degrees[i];
                       os << ")";
                   },
                   [&](const family::MaximalLobster& s) {
                       os << "lobster(n=" << s.n << ",delta1=" << s.delta1
                          << ",delta2=" << s.delta2 << ")";
                   },
                   [&](const family::UniformTree& s) {
                       os << "uniform-tree(delta=" << s.delta << ",h=" << s.h << ")";
                   },
               },
               spec);
    return os.str();
}

void validate(const FamilySpec& spec) {
    std::visit(overloaded{
                   [](const family::Path& s) { require(s.n >= 1, "path requires n >= 1"); },
                   [](const family::Cycle& s) { require(s.n >= 3, "cycle requires n >= 3"); },
                   [](const family::Star& s) { require(s.m >= 1, "star requires m >= 1"); },
                   [](const family::Wheel& s) { require(s.n >= 4, "wheel requires n >= 4"); },
                   [](const family::Gear& s) { require(s.n >= 4, "gear requires n >= 4"); },
                   [](const family::Helm& s) { require(s.n >= 4, "helm requires n >= 4"); },
                   [](const family::Caterpillar& s) {
                       const auto p = s.spine_degrees.size();
                       require(p >= 1, "caterpillar requires at least one spine vertex");
                       for (std::size_t i = 0; i < p; ++i) {
                           const auto need = caterpillar_spine_neighbors(i, p);
                           require(s.spine_degrees[i] >= need,
                                   "caterpillar spine degree d_" + std::to_string(i + 1) +
                                       " must be >= " + std::to_string(need) +
                                       " (its spine neighbours)");
                       }
                   },
                   [](const family::MaximalLobster& s) {
                       require(s.n >= 2, "lobster requires n >= 2");
                       require(s.delta1 >= 3, "lobster requires delta1 >= 3");
                       require(s.delta2 >= 2, "lobster requires delta2 >= 2");
                   },
                   [](const family::UniformTree& s) {
                       require(s.delta >= 2, "uniform tree requires delta >= 2");
                       require(s.h >= 1, "uniform tree requires h >= 1");
                       uniform_tree_size(s.delta, s.h);
                   },
               },
               spec);
}

FamilyGraph build(const FamilySpec& spec) {
    validate(spec);
    return std::visit(
        overloaded{
            [](const family::Path& s) {
                FamilyGraph out{Graph(s.n), std::vector<VertexRole>(s.n, VertexRole::Spine)};
                for (Vertex i = 0; i + 1 < s.n; ++i) out.graph.add_edge(i, i + 1);
                return out;
            },
            [](const family::Cycle& s) {
                FamilyGraph out{Graph(s.n), std::vector<VertexRole>(s.n, VertexRole::Cycle)};
                for (Vertex i = 0; i < s.n; ++i) out.graph.add_edge(i, (i + 1) % s.n);
                return out;
            },
            [](const family::Star& s) {
                FamilyGraph out{Graph(s.m + 1), std::vector<VertexRole>(s.m + 1, VertexRole::Leaf)};
                out.roles[0] = VertexRole::Hub;
                for (Vertex i = 1; i <= s.m; ++i) out.graph.add_edge(0, i);
                return out;
            },
            [](const family::Wheel& s) { return make_wheel(s.n); },
            [](const family::Gear& s) {
                const std::size_t rim = 2 * (s.n - 1);
                FamilyGraph out{Graph(rim + 1), std::vector<VertexRole>(rim + 1, VertexRole::Cycle)};
                out.roles[0] = VertexRole::Hub;
                for (Vertex i = 1; i <= rim; ++i) {
                    if (i % 2 == 1) out.graph.add_edge(0, i);
                    out.graph.add_edge(i, i % rim + 1);
                }
                return out;
            },
            [](const family::Helm& s) {
                auto wheel = make_wheel(s.n);
                const std::size_t total = 2 * s.n - 1;
                FamilyGraph out{Graph(total), std::vector<VertexRole>(total, VertexRole::Leaf)};
                for (const auto& e : wheel.graph.edges()) out.graph.add_edge(e.u, e.v);
                for (Vertex i = 0; i < s.n; ++i) out.roles[i] = wheel.roles[i];
                for (Vertex i = 1; i < s.n; ++i) out.graph.add_edge(i, s.n - 1 + i);
                return out;
            },
            [](const family::Caterpillar& s) {
                const auto p = s.spine_degrees.size();
                std::size_t total = p;
                for (std::size_t i = 0; i < p; ++i)
                    total += s.spine_degrees[i] - caterpillar_spine_neighbors(i, p);
                FamilyGraph out{Graph(total), std::vector<VertexRole>(total, VertexRole::Leaf)};
                for (Vertex i = 0; i < p; ++i) {
                    out.roles[i] = VertexRole::Spine;
                    if (i + 1 < p) out.graph.add_edge(i, i + 1);
                }
                Vertex next = p;
                for (Vertex i = 0; i < p; ++i)
                    attach_leaves(out.graph, out.roles, i,
                                  s.spine_degrees[i] - caterpillar_spine_neighbors(i, p), next,
                                  VertexRole::Leaf);
                return out;
            },
            [](const family::MaximalLobster& s) {
                const std::size_t interior = s.n >= 2 ? s.n - 2 : 0;
                const std::size_t secondaries = interior * (s.delta1 - 2);
                const std::size_t total = s.n + secondaries * s.delta2;
                require(total <= kMaxGeneratedVertices, "lobster too large");
                FamilyGraph out{Graph(total), std::vector<VertexRole>(total, VertexRole::Tertiary)};
                for (Vertex i = 0; i < s.n; ++i) {
                    out.roles[i] = VertexRole::Spine;
                    if (i + 1 < s.n) out.graph.add_edge(i, i + 1);
                }
                Vertex next = s.n;
                for (Vertex i = 1; i + 1 < s.n; ++i)
                    attach_leaves(out.graph, out.roles, i, s.delta1 - 2, next, VertexRole::Secondary);
                const Vertex first_secondary = s.n;
                for (Vertex j = 0; j < secondaries; ++j)
                    attach_leaves(out.graph, out.roles, first_secondary + j, s.delta2 - 1, next,
                                  VertexRole::Tertiary);
                return out;
            },
            [](const family::UniformTree& s) {
                const auto total = uniform_tree_size(s.delta, s.h);
                FamilyGraph out{Graph(total), std::vector<VertexRole>(total, VertexRole::Internal)};
                out.roles[0] = VertexRole::Root;
                Vertex next = 1;
                std::vector<Vertex> frontier{0};
                for (std::size_t depth = 1; depth <= s.h; ++depth) {
                    std::vector<Vertex> level;
                    for (Vertex parent : frontier) {
                        const auto kids = parent == 0 ? s.delta : s.delta - 1;
                        for (std::size_t c = 0; c < kids; ++c) {
                            out.graph.add_edge(parent, next);
                            if (depth == s.h) out.roles[next] = VertexRole::Leaf;
                            level.push_back(next++);
                        }
                    }
                    frontier = std::move(level);
                }
                return out;
            },
        },
        spec);
}

}  // namespace tdl
