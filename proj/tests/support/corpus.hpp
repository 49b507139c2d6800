// Seeded generators and family enumerations shared by the unit tests and the
// acceptance suite.
#pragma once

#include "tdl/constructions.hpp"
#include "tdl/families.hpp"
#include "tdl/graph.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace tdl::testing {

using Rng = std::mt19937_64;

// Bernoulli edge draws from a 53-bit uniform, so the result does not depend on
// the standard library's distribution implementations.
inline double unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline std::size_t below(Rng& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

inline Graph random_graph(Rng& rng, std::size_t n, double p) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (unit(rng) < p) g.add_edge(u, v);
    return g;
}

inline std::vector<Label> random_labels(Rng& rng, std::size_t n, Label max_label) {
    std::vector<Label> out(n);
    for (auto& x : out) x = 1 + static_cast<Label>(below(rng, static_cast<std::size_t>(max_label)));
    return out;
}

/// Random spanning subgraph: keeps each edge of g with probability p.
inline Graph random_edge_subgraph(Rng& rng, const Graph& g, double p) {
    Graph h(g.vertex_count());
    for (const auto& e : g.edges())
        if (unit(rng) < p) h.add_edge(e.u, e.v);
    return h;
}

inline std::size_t vertex_count(const FamilySpec& spec) {
    try {
        return build(spec).graph.vertex_count();
    } catch (const ParameterError&) {
        return 0;
    }
}

/// Every spine degree sequence of length 1..max_len whose caterpillar has
/// maximum degree in [min_delta, max_delta].
inline std::vector<std::vector<std::size_t>> spine_sequences(std::size_t max_len, std::size_t min_delta,
                                                             std::size_t max_delta) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t p = 1; p <= max_len; ++p) {
        std::vector<std::size_t> d(p);
        for (std::size_t i = 0; i < p; ++i) d[i] = std::max<std::size_t>(1, caterpillar_spine_neighbors(i, p));
        while (true) {
            const auto delta = caterpillar_max_degree(d);
            if (delta >= min_delta && delta <= max_delta) out.push_back(d);
            std::size_t i = p;
            while (i > 0 && d[i - 1] == max_delta) {
                --i;
                d[i] = std::max<std::size_t>(1, caterpillar_spine_neighbors(i, p));
            }
            if (i == 0) break;
            ++d[i - 1];
        }
    }
    return out;
}

/// Family instances with at most max_n vertices (generous parameter ranges,
/// filtered by size).
inline std::vector<FamilySpec> small_family_instances(std::size_t max_n) {
    std::vector<FamilySpec> out;
    auto keep = [&](FamilySpec s) {
        const auto n = vertex_count(s);
        if (n >= 1 && n <= max_n) out.push_back(std::move(s));
    };
    for (std::size_t n = 1; n <= max_n; ++n) keep(family::Path{n});
    for (std::size_t n = 3; n <= max_n; ++n) keep(family::Cycle{n});
    for (std::size_t m = 1; m < max_n; ++m) keep(family::Star{m});
    for (std::size_t n = 4; n <= max_n; ++n) {
        keep(family::Wheel{n});
        keep(family::Gear{n});
        keep(family::Helm{n});
    }
    for (const auto& d : spine_sequences(std::min<std::size_t>(max_n, 5), 1, max_n)) keep(family::Caterpillar{d});
    for (std::size_t n = 2; n <= max_n; ++n)
        for (std::size_t d1 = 3; d1 <= max_n; ++d1)
            for (std::size_t d2 = 2; d2 <= max_n; ++d2) keep(family::MaximalLobster{n, d1, d2});
    for (std::size_t delta = 2; delta <= max_n; ++delta)
        for (std::size_t h = 1; h <= max_n; ++h) keep(family::UniformTree{delta, h});
    return out;
}

}  // namespace tdl::testing
