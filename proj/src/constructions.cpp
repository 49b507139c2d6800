#include "tdl/constructions.hpp"

#include "tdl/lobster.hpp"

#include <algorithm>
#include <stdexcept>

namespace tdl {

namespace {

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr std::uint64_t kRepairNodeBudget = 200'000'000;

Label L(std::size_t x) { return static_cast<Label>(x); }

bool fully_labelled(const std::vector<Label>& labels) {
    return std::all_of(labels.begin(), labels.end(), [](Label x) { return x >= 1; });
}

// Re-labels `relabel` (in that order) keeping the rest fixed; if that fails,
// searches the whole graph at the claimed k.
void repair(const Graph& g, ConstructionResult& result, const std::vector<Vertex>& relabel) {
    SearchOptions opts;
    opts.node_limit = kRepairNodeBudget;
    if (!relabel.empty()) {
        auto partial = result.labeling.labels;
        partial.resize(g.vertex_count(), 0);
        for (Vertex v : relabel) partial[v] = 0;
        auto r = complete_labeling(g, partial, result.claimed_k, opts, relabel);
        if (r.outcome == Outcome::Found) {
            result.labeling = std::move(*r.witness);
            result.repaired = true;
            return;
        }
    }
    auto r = has_k_tdl(g, result.claimed_k, opts);
    if (r.outcome != Outcome::Found)
        throw std::logic_error("no " + std::to_string(result.claimed_k) +
                               "-total difference labeling found for " + result.provenance);
    result.labeling = std::move(*r.witness);
    result.repaired = true;
}

ConstructionResult finish(const Graph& g, std::vector<Label> labels, Label k,
                          std::string provenance, bool tight,
                          const std::vector<Vertex>& relabel_first = {}) {
    ConstructionResult out;
    out.claimed_k = k;
    out.provenance = std::move(provenance);
    out.tight = tight;
    const bool complete = labels.size() == g.vertex_count() && fully_labelled(labels);
    out.labeling = Labeling(std::move(labels));
    if (!complete || !is_k_tdl(g, out.labeling, k)) repair(g, out, relabel_first);
    return out;
}

std::vector<Label> repeat_143(std::size_t n) {
    static constexpr Label pattern[3] = {1, 4, 3};
    std::vector<Label> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = pattern[i % 3];
    return out;
}

Label path_value(std::size_t n) {
    if (n == 1) return 1;
    if (n <= 3) return 3;
    return 4;
}

Label cycle_value(std::size_t n) { return n % 3 == 0 ? 4 : 5; }

Label star_value(std::size_t m) { return m % 2 == 0 ? L(m) + 1 : L(m) + 2; }

Label wheel_value(std::size_t n) {
    if (n == 4) return 8;
    if (n == 5) return 7;
    return n % 2 == 0 ? L(n) + 1 : L(n);
}

Label gear_value(std::size_t n) {
    if (n <= 5) return 6;
    return n % 2 == 0 ? L(n) + 1 : L(n);
}

Label helm_value(std::size_t n) {
    if (n == 6 || n == 7) return 8;
    return wheel_value(n);
}

// Smallest label in `candidates`, then in [1, k], that keeps vertex v locally valid.
bool assign_smallest(const Graph& g, std::vector<Label>& labels, Vertex v,
                     const std::vector<Label>& candidates, Label k) {
    auto attempt = [&](Label x) {
        labels[v] = x;
        if (locally_consistent(g, labels, v)) return true;
        labels[v] = 0;
        return false;
    };
    for (Label x : candidates)
        if (attempt(x)) return true;
    for (Label x = 1; x <= k; ++x)
        if (std::find(candidates.begin(), candidates.end(), x) == candidates.end() && attempt(x))
            return true;
    return false;
}

// Walk a path-shaped graph from its lowest-numbered end.
std::vector<Vertex> path_walk(const Graph& g) {
    Vertex start = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) <= 1) { start = v; break; }
    std::vector<Vertex> walk{start};
    std::vector<char> seen(g.vertex_count(), 0);
    seen[start] = 1;
    while (walk.size() < g.vertex_count()) {
        bool moved = false;
        for (Vertex w : g.neighbors(walk.back()))
            if (!seen[w]) {
                seen[w] = 1;
                walk.push_back(w);
                moved = true;
                break;
            }
        if (!moved) throw std::logic_error("graph is not a path");
    }
    return walk;
}

std::vector<Label> range_labels(Label lo, Label hi, std::optional<Label> skip = std::nullopt) {
    std::vector<Label> out;
    for (Label x = lo; x <= hi; ++x)
        if (!skip || x != *skip) out.push_back(x);
    return out;
}

std::size_t caterpillar_vertex_count(const std::vector<std::size_t>& d) {
    std::size_t total = d.size();
    for (std::size_t i = 0; i < d.size(); ++i) total += d[i] - caterpillar_spine_neighbors(i, d.size());
    return total;
}

}  // namespace

ConstructionResult label_path(std::size_t n) {
    validate(family::Path{n});
    const auto g = build(family::Path{n}).graph;
    std::vector<Label> labels;
    std::string provenance = "path theorem";
    if (n == 1) {
        labels = {1};
        provenance = "path (single vertex)";
    } else if (n == 2) {
        labels = {1, 3};
        provenance = "path (small case)";
    } else if (n == 3) {
        labels = {1, 3, 2};
        provenance = "path (small case)";
    } else {
        labels = repeat_143(n);
    }
    return finish(g, std::move(labels), path_value(n), provenance, true);
}

ConstructionResult label_cycle(std::size_t n) {
    validate(family::Cycle{n});
    const auto g = build(family::Cycle{n}).graph;
    std::vector<Label> labels;
    if (n == 3) {
        labels = {1, 4, 3};
    } else if (n % 3 == 0) {
        labels = repeat_143(n);
    } else if (n % 3 == 1) {
        labels = repeat_143(n - 1);
        labels.push_back(5);
    } else {
        labels = repeat_143(n - 5);
        for (Label x : {5, 1, 4, 3, 5}) labels.push_back(x);
    }
    return finish(g, std::move(labels), cycle_value(n), "cycle theorem", true);
}

ConstructionResult label_star(std::size_t m) {
    validate(family::Star{m});
    const auto g = build(family::Star{m}).graph;
    std::vector<Label> labels(m + 1);
    labels[0] = star_value(m);
    for (std::size_t i = 1; i <= m; ++i) labels[i] = L(i);
    return finish(g, std::move(labels), star_value(m), "star theorem", true);
}

std::vector<Label> feasible_center_labels(std::size_t m, std::size_t r) {
    if (r < 1 || r > m)
        throw ParameterError("feasible_center_labels requires 1 <= r <= m (got m=" +
                             std::to_string(m) + ", r=" + std::to_string(r) + ")");
    std::vector<Label> out;
    for (std::size_t x = 1; x + 1 <= r; ++x) out.push_back(L(x));
    if (m % 2 == 0 || 2 * r == m + 3) out.push_back(L(m) + 1);
    for (std::size_t x = m + 2; x <= m + r; ++x) out.push_back(L(x));
    return out;
}

ConstructionResult label_wheel(std::size_t n) {
    validate(family::Wheel{n});
    const auto g = build(family::Wheel{n}).graph;
    const Label k = wheel_value(n);
    std::vector<Label> labels;
    switch (n) {
        case 4: labels = {8, 1, 7, 5}; break;
        case 5: labels = {7, 1, 3, 2, 5}; break;
        case 6: labels = {1, 3, 4, 6, 5, 7}; break;
        case 7: labels = {7, 3, 1, 5, 4, 6, 2}; break;
        default: {
            labels.assign(n, 0);
            std::vector<Label> odd_positions, even_positions;
            if (n % 2 == 1) {
                labels[0] = L(n);
                for (Label x = 1; x <= L(n) - 2; x += 2) odd_positions.push_back(x);
                even_positions.push_back(L(n) - 1);
                for (Label x = 2; x <= L(n) - 3; x += 2) even_positions.push_back(x);
            } else {
                labels[0] = L(n) + 1;
                for (Label x = 1; x <= L(n) - 1; x += 2) odd_positions.push_back(x);
                even_positions.push_back(L(n) - 2);
                for (Label x = 2; x <= L(n) - 4; x += 2) even_positions.push_back(x);
            }
            for (std::size_t i = 0; i < odd_positions.size(); ++i) labels[1 + 2 * i] = odd_positions[i];
            for (std::size_t i = 0; i < even_positions.size(); ++i) labels[2 + 2 * i] = even_positions[i];
        }
    }
    return finish(g, std::move(labels), k, n <= 7 ? "wheel theorem (small case)" : "wheel theorem",
                  true);
}

ConstructionResult label_gear(std::size_t n) {
    validate(family::Gear{n});
    const auto g = build(family::Gear{n}).graph;
    const Label k = gear_value(n);
    std::vector<Label> labels;
    switch (n) {
        case 4: labels = {6, 2, 5, 4, 1, 5, 3}; break;
        case 5: labels = {6, 1, 5, 2, 3, 5, 1, 4, 3}; break;
        case 6: labels = {7, 1, 3, 2, 6, 5, 2, 3, 1, 6, 4}; break;
        case 7: labels = {7, 5, 6, 4, 5, 2, 3, 1, 5, 3, 4, 6, 2}; break;
        default: {
            labels.assign(2 * n - 1, 0);
            labels[0] = n % 2 == 0 ? L(n) + 1 : L(n);
            for (std::size_t i = 1; i < n; ++i) labels[2 * i - 1] = L(i);
            std::vector<Label> subdivision{L(n) - 2, L(n) - 1};
            for (Label x = 5; x <= L(n) - 1; ++x) subdivision.push_back(x);
            subdivision.push_back(2);
            subdivision.push_back(3);
            for (std::size_t i = 0; i < subdivision.size(); ++i) labels[2 * i + 2] = subdivision[i];
        }
    }
    std::vector<Vertex> subdivision_vertices;
    for (Vertex v = 2; v < 2 * n - 1; v += 2) subdivision_vertices.push_back(v);
    return finish(g, std::move(labels), k, n <= 7 ? "gear theorem (small case)" : "gear theorem",
                  true, subdivision_vertices);
}

ConstructionResult label_helm(std::size_t n) {
    validate(family::Helm{n});
    const auto g = build(family::Helm{n}).graph;
    const Label k = helm_value(n);
    auto wheel = label_wheel(n);
    std::vector<Label> partial = wheel.labeling.labels;
    partial.resize(2 * n - 1, 0);
    std::vector<Vertex> leaves;
    for (Vertex v = n; v < 2 * n - 1; ++v) leaves.push_back(v);

    ConstructionResult out;
    out.claimed_k = k;
    out.tight = true;
    out.provenance = "helm theorem (wheel labeling with leaf completion)";
    out.repaired = wheel.repaired;
    SearchOptions opts;
    opts.node_limit = kRepairNodeBudget;
    auto completed = complete_labeling(g, partial, k, opts, leaves);
    if (completed.outcome == Outcome::Found) {
        out.labeling = std::move(*completed.witness);
    } else {
        out.labeling = Labeling(std::move(partial));
        repair(g, out, {});
    }
    if (!is_k_tdl(g, out.labeling, k)) throw std::logic_error("helm construction failed to verify");
    return out;
}

ConstructionResult label_caterpillar(const std::vector<std::size_t>& spine_degrees) {
    const family::Caterpillar spec{spine_degrees};
    validate(spec);
    const auto g = build(spec).graph;
    const std::size_t delta = caterpillar_max_degree(spine_degrees);
    const std::size_t p = spine_degrees.size();

    if (delta <= 2) {
        const auto walk = path_walk(g);
        const auto path = label_path(walk.size());
        std::vector<Label> labels(g.vertex_count());
        for (std::size_t i = 0; i < walk.size(); ++i) labels[walk[i]] = path.labeling[i];
        return finish(g, std::move(labels), path.claimed_k, path.provenance, path.tight);
    }
    if (p == 1) return label_star(spine_degrees[0]);

    const Label D = L(delta);
    const Label pattern[3] = {1, D + 3, D + 2};
    std::vector<Label> labels(g.vertex_count(), 0);
    for (std::size_t i = 0; i < p; ++i) labels[i] = pattern[i % 3];

    auto safe_leaf_labels = [&](Label spine_label) {
        if (spine_label == 1) return range_labels(3, D + 1);
        if (spine_label == D + 3)
            return range_labels(2, D + 1, (D + 3) % 2 == 0 ? std::optional<Label>((D + 3) / 2) : std::nullopt);
        return range_labels(2, D, (D + 2) % 2 == 0 ? std::optional<Label>((D + 2) / 2) : std::nullopt);
    };

    std::vector<Vertex> leaves;
    Vertex next = p;
    for (std::size_t i = 0; i < p; ++i) {
        const auto candidates = safe_leaf_labels(labels[i]);
        const auto count = spine_degrees[i] - caterpillar_spine_neighbors(i, p);
        for (std::size_t j = 0; j < count; ++j, ++next) {
            leaves.push_back(next);
            assign_smallest(g, labels, next, candidates, D + 3);
        }
    }
    const bool tight = chi_td_caterpillar(spine_degrees) == D + 3;
    return finish(g, std::move(labels), D + 3, "caterpillar upper-bound construction", tight,
                  leaves);
}

Label chi_td_caterpillar(const std::vector<std::size_t>& spine_degrees) {
    validate(family::Caterpillar{spine_degrees});
    const std::size_t delta = caterpillar_max_degree(spine_degrees);
    if (delta < 3) throw ParameterError("caterpillar classification requires Delta >= 3");
    const auto& d = spine_degrees;
    const std::size_t p = d.size();
    const Label D = L(delta);

    bool spaced = true;  // degree-Delta vertices pairwise at spine distance >= 3
    std::optional<std::size_t> last_max;
    for (std::size_t i = 0; i < p; ++i) {
        if (d[i] != delta) continue;
        if (last_max && i - *last_max < 3) spaced = false;
        last_max = i;
    }
    bool three_heavy = false;  // three consecutive with degree >= Delta - 1
    bool three_max = false;    // three consecutive with degree Delta
    for (std::size_t i = 0; i + 2 < p; ++i) {
        if (d[i] + 1 >= delta && d[i + 1] + 1 >= delta && d[i + 2] + 1 >= delta) three_heavy = true;
        if (d[i] == delta && d[i + 1] == delta && d[i + 2] == delta) three_max = true;
    }
    bool five_pattern = false;  // Delta, Delta-1, *, Delta-1, Delta
    for (std::size_t i = 0; i + 4 < p; ++i)
        if (d[i] == delta && d[i + 1] == delta - 1 && d[i + 3] == delta - 1 && d[i + 4] == delta)
            five_pattern = true;

    if (delta % 2 == 0 && spaced && !three_heavy && !five_pattern) return D + 1;
    if (delta % 2 == 1 && three_max) return D + 3;
    return D + 2;
}

Label chi_td_uniform_tree_h2(std::size_t delta) {
    if (delta < 2) throw ParameterError("uniform tree requires delta >= 2");
    return (3 * L(delta) + 3) / 2;
}

ConstructionResult label_uniform_tree(std::size_t delta, std::size_t h) {
    const family::UniformTree spec{delta, h};
    validate(spec);
    if (h == 1) {
        auto star = label_star(delta);
        star.provenance = "uniform tree of height 1 (star theorem)";
        return star;
    }
    const auto g = build(spec).graph;
    const Label D = L(delta);
    std::vector<Label> labels(g.vertex_count(), 0);

    if (delta == 2) {
        const auto walk = path_walk(g);
        const auto path = label_path(walk.size());
        for (std::size_t i = 0; i < walk.size(); ++i) labels[walk[i]] = path.labeling[i];
        return finish(g, std::move(labels), path.claimed_k, "uniform tree with delta 2 (path theorem)",
                      true);
    }
    if (h == 2) {
        const Label k = chi_td_uniform_tree_h2(delta);
        const auto r = static_cast<std::size_t>(k - D);
        labels[0] = k;
        const auto centres = feasible_center_labels(delta, r);
        // children of the root are vertices 1..delta; each must still be able
        // to carry delta distinct edge labels within [1, k]
        for (Vertex c = 1; c <= delta; ++c) {
            for (Label x : centres) {
                if (usable_differences(x, k) < D) continue;
                labels[c] = x;
                if (locally_consistent(g, labels, c)) break;
                labels[c] = 0;
            }
        }
        for (Vertex v = delta + 1; v < g.vertex_count(); ++v) assign_smallest(g, labels, v, {}, k);
        return finish(g, std::move(labels), k, "uniform tree height-2 lemma", true);
    }

    const Label k = 2 * D + 1;
    labels[0] = 1;
    for (Vertex v = 1; v < g.vertex_count(); ++v) assign_smallest(g, labels, v, {}, k);
    return finish(g, std::move(labels), k, "uniform tree greedy bound", false);
}

ConstructionResult construct(const FamilySpec& spec) {
    return std::visit(
        overloaded{
            [](const family::Path& s) { return label_path(s.n); },
            [](const family::Cycle& s) { return label_cycle(s.n); },
            [](const family::Star& s) { return label_star(s.m); },
            [](const family::Wheel& s) { return label_wheel(s.n); },
            [](const family::Gear& s) { return label_gear(s.n); },
            [](const family::Helm& s) { return label_helm(s.n); },
            [](const family::Caterpillar& s) { return label_caterpillar(s.spine_degrees); },
            [](const family::MaximalLobster& s) {
                return label_maximal_lobster(s.n, s.delta1, s.delta2);
            },
            [](const family::UniformTree& s) { return label_uniform_tree(s.delta, s.h); },
        },
        spec);
}

BoundsResult closed_form(const FamilySpec& spec) {
    validate(spec);
    auto exact = [](Label value, std::string provenance) {
        BoundsResult b;
        b.lower = b.upper = value;
        b.exact = value;
        b.provenance = std::move(provenance);
        return b;
    };
    return std::visit(
        overloaded{
            [&](const family::Path& s) { return exact(path_value(s.n), "path theorem"); },
            [&](const family::Cycle& s) { return exact(cycle_value(s.n), "cycle theorem"); },
            [&](const family::Star& s) { return exact(star_value(s.m), "star theorem"); },
            [&](const family::Wheel& s) { return exact(wheel_value(s.n), "wheel theorem"); },
            [&](const family::Gear& s) { return exact(gear_value(s.n), "gear theorem"); },
            [&](const family::Helm& s) { return exact(helm_value(s.n), "helm theorem"); },
            [&](const family::Caterpillar& s) {
                if (caterpillar_max_degree(s.spine_degrees) <= 2)
                    return exact(path_value(caterpillar_vertex_count(s.spine_degrees)),
                                 "path theorem");
                return exact(chi_td_caterpillar(s.spine_degrees), "caterpillar classification");
            },
            [&](const family::MaximalLobster& s) {
                if (s.n == 2) return exact(path_value(2), "path theorem");
                return lobster_bounds(s.delta1, s.delta2);
            },
            [&](const family::UniformTree& s) {
                if (s.h == 1) return exact(star_value(s.delta), "star theorem");
                if (s.delta == 2) return exact(path_value(2 * s.h + 1), "path theorem");
                if (s.h == 2)
                    return exact(chi_td_uniform_tree_h2(s.delta), "uniform tree height-2 lemma");
                BoundsResult b;
                b.lower = chi_td_uniform_tree_h2(s.delta);
                b.upper = 2 * L(s.delta) + 1;
                b.provenance = "uniform tree bounds";
                return b;
            },
        },
        spec);
}

}  // namespace tdl
