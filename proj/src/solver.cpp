#include "tdl/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <queue>

namespace tdl {

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
    std::optional<std::uint64_t> nodes;
    std::optional<Clock::time_point> deadline;
};

class LabelSearch {
public:
    LabelSearch(const Graph& g, Label k, Budget budget)
        : g_(g),
          k_(k),
          stride_(static_cast<std::size_t>(k) + 1),
          budget_(budget),
          label_(g.vertex_count(), 0),
          used_(g.vertex_count() * stride_, 0),
          capacity_(stride_, 0) {
        for (Label x = 1; x <= k; ++x) capacity_[x] = usable_differences(x, k);
    }

    DecisionResult run(const std::vector<Label>& partial, const std::vector<Vertex>& order) {
        DecisionResult out;
        for (Vertex v = 0; v < partial.size(); ++v) {
            const Label x = partial[v];
            if (x == 0) continue;
            if (x < 1 || x > k_ || !admissible(v, x) || !try_assign(v, x)) {
                out.outcome = Outcome::None;
                return out;
            }
        }
        order_ = &order;
        const bool found = dfs(0);
        out.nodes = nodes_;
        if (found) {
            out.outcome = Outcome::Found;
            out.witness = Labeling(label_);
        } else {
            out.outcome = aborted_ ? Outcome::Indeterminate : Outcome::None;
        }
        return out;
    }

private:
    bool admissible(Vertex v, Label x) const {
        return capacity_[x] >= static_cast<Label>(g_.degree(v));
    }

    char& used(Vertex v, Label d) { return used_[v * stride_ + static_cast<std::size_t>(d)]; }

    bool try_assign(Vertex v, Label x) {
        std::size_t marked = 0;
        bool ok = true;
        for (Vertex u : g_.neighbors(v)) {
            const Label lu = label_[u];
            if (lu == 0) continue;
            if (lu == x || lu == 2 * x || x == 2 * lu) { ok = false; break; }
            const Label d = std::abs(x - lu);
            // triple centred at u, or at v
            if (used(u, d) || used(v, d)) { ok = false; break; }
            used(v, d) = 1;
            ++marked;
        }
        if (!ok) {
            for (Vertex u : g_.neighbors(v)) {
                if (marked == 0) break;
                if (label_[u] == 0) continue;
                used(v, std::abs(x - label_[u])) = 0;
                --marked;
            }
            return false;
        }
        for (Vertex u : g_.neighbors(v))
            if (label_[u] != 0) used(u, std::abs(x - label_[u])) = 1;
        label_[v] = x;
        return true;
    }

    void unassign(Vertex v) {
        const Label x = label_[v];
        for (Vertex u : g_.neighbors(v)) {
            if (label_[u] == 0) continue;
            const Label d = std::abs(x - label_[u]);
            used(u, d) = 0;
            used(v, d) = 0;
        }
        label_[v] = 0;
    }

    bool out_of_budget() {
        if (budget_.nodes && nodes_ > *budget_.nodes) return true;
        if (budget_.deadline && (nodes_ & 0xfff) == 0 && Clock::now() > *budget_.deadline)
            return true;
        return false;
    }

    bool dfs(std::size_t idx) {
        if (idx == order_->size()) return true;
        ++nodes_;
        if (out_of_budget()) {
            aborted_ = true;
            return false;
        }
        const Vertex v = (*order_)[idx];
        for (Label x = 1; x <= k_; ++x) {
            if (!admissible(v, x) || !try_assign(v, x)) continue;
            if (dfs(idx + 1)) return true;
            unassign(v);
            if (aborted_) return false;
        }
        return false;
    }

    const Graph& g_;
    Label k_;
    std::size_t stride_;
    Budget budget_;
    std::vector<Label> label_;
    std::vector<char> used_;  // used_[v * stride + d]: some assigned neighbour of v sits at distance d
    std::vector<Label> capacity_;
    const std::vector<Vertex>* order_ = nullptr;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

DecisionResult run_search(const Graph& g, Label k, const std::vector<Label>& partial,
                          const std::vector<Vertex>& order, Budget budget) {
    if (k < 1) throw ParameterError("k must be a positive integer");
    LabelSearch search(g, k, budget);
    return search.run(partial, order);
}

Budget budget_from(const SearchOptions& opts) {
    Budget b;
    b.nodes = opts.node_limit;
    if (opts.time_limit) b.deadline = Clock::now() + *opts.time_limit;
    return b;
}

}  // namespace

// An edge label d at a vertex labelled `label` needs d != label (else the far
// end is 2*label), and a far end label +-d in range that is not d itself.
Label usable_differences(Label label, Label k) {
    Label count = 0;
    for (Label d = 1; d < k; ++d) {
        if (d == label) continue;
        const bool up = label + d <= k;
        const bool down = label - d >= 1 && label - d != d;
        if (up || down) ++count;
    }
    return count;
}

std::string to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::Found: return "found";
        case Outcome::None: return "none";
        case Outcome::Indeterminate: return "indeterminate";
    }
    return "?";
}

std::vector<Vertex> search_order(const Graph& g, VertexOrder order) {
    const auto n = g.vertex_count();
    std::vector<Vertex> out;
    out.reserve(n);
    if (order == VertexOrder::InputOrder) {
        out.resize(n);
        std::iota(out.begin(), out.end(), Vertex{0});
        return out;
    }
    std::vector<char> seen(n, 0);
    auto by_degree = [&](Vertex a, Vertex b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    };
    while (out.size() < n) {
        Vertex start = n;
        for (Vertex v = 0; v < n; ++v)
            if (!seen[v] && (start == n || g.degree(v) > g.degree(start))) start = v;
        std::queue<Vertex> q;
        q.push(start);
        seen[start] = 1;
        while (!q.empty()) {
            const Vertex u = q.front();
            q.pop();
            out.push_back(u);
            std::vector<Vertex> next;
            for (Vertex w : g.neighbors(u))
                if (!seen[w]) next.push_back(w);
            std::sort(next.begin(), next.end(), by_degree);
            for (Vertex w : next) {
                seen[w] = 1;
                q.push(w);
            }
        }
    }
    std::stable_partition(out.begin(), out.end(), [&](Vertex v) { return g.degree(v) >= 2; });
    return out;
}

DecisionResult has_k_tdl(const Graph& g, Label k, const SearchOptions& opts) {
    return run_search(g, k, std::vector<Label>(g.vertex_count(), 0), search_order(g, opts.order),
                      budget_from(opts));
}

DecisionResult complete_labeling(const Graph& g, const std::vector<Label>& partial, Label k,
                                 const SearchOptions& opts,
                                 std::optional<std::vector<Vertex>> order) {
    if (partial.size() != g.vertex_count())
        throw std::invalid_argument("partial labeling length does not match the graph");
    std::vector<Vertex> free_order;
    if (order) {
        free_order = std::move(*order);
        for (Vertex v : free_order)
            if (v >= g.vertex_count() || partial[v] != 0)
                throw std::invalid_argument("completion order must list free vertices only");
        std::vector<Vertex> sorted = free_order;
        std::sort(sorted.begin(), sorted.end());
        const auto free_count = static_cast<std::size_t>(
            std::count(partial.begin(), partial.end(), Label{0}));
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
            sorted.size() != free_count)
            throw std::invalid_argument("completion order must list every free vertex once");
    } else {
        for (Vertex v : search_order(g, opts.order))
            if (partial[v] == 0) free_order.push_back(v);
    }
    return run_search(g, k, partial, free_order, budget_from(opts));
}

Label lower_bound(const Graph& g) {
    if (g.empty()) return 1;
    Label bound = std::max<Label>(1, static_cast<Label>(g.max_degree()) + 1);
    const auto diam = diameter(g);
    if (diam && *diam <= 2) bound = std::max<Label>(bound, static_cast<Label>(g.vertex_count()));
    return bound;
}

Label power_of_three_bound(std::size_t vertex_count) {
    if (vertex_count > 40) return std::numeric_limits<Label>::max();
    Label p = 1;
    for (std::size_t i = 1; i < vertex_count; ++i) p *= 3;
    return p;
}

BoundsResult chi_td(const Graph& g, const SearchOptions& opts) {
    if (g.empty()) throw ParameterError("chi_td requires a nonempty graph");
    BoundsResult result;
    result.provenance = "search";
    result.lower = lower_bound(g);
    result.upper = power_of_three_bound(g.vertex_count());
    const Label cap = opts.max_k ? std::min(*opts.max_k, result.upper) : result.upper;

    Budget budget = budget_from(opts);
    const auto order = search_order(g, opts.order);
    const std::vector<Label> free(g.vertex_count(), 0);
    for (Label k = result.lower; k <= cap; ++k) {
        auto r = run_search(g, k, free, order, budget);
        if (budget.nodes) *budget.nodes -= std::min(*budget.nodes, r.nodes);
        if (r.outcome == Outcome::Found) {
            result.lower = result.upper = k;
            result.exact = k;
            result.witness = std::move(r.witness);
            return result;
        }
        if (r.outcome == Outcome::Indeterminate) return result;
        result.lower = k + 1;
    }
    return result;
}

std::optional<Label> brute_force_chi(const Graph& g, Label cap) {
    const auto n = g.vertex_count();
    if (n == 0) throw ParameterError("brute_force_chi requires a nonempty graph");
    if (n > 8) throw ParameterError("brute_force_chi is limited to 8 vertices");

    const auto edges = g.edges();
    // earlier[i]: indices j < i of edges sharing an endpoint with edge i
    std::vector<std::vector<std::size_t>> earlier(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            const auto& e = edges[i];
            const auto& f = edges[j];
            if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) earlier[i].push_back(j);
        }

    std::vector<Label> c(n);
    std::vector<Label> edge_label(edges.size());
    auto valid = [&] {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const Label a = c[edges[i].u], b = c[edges[i].v];
            const Label d = std::abs(a - b);
            if (d == 0 || d == a || d == b) return false;
            for (std::size_t j : earlier[i])
                if (edge_label[j] == d) return false;
            edge_label[i] = d;
        }
        return true;
    };

    for (Label k = 1; k <= cap; ++k) {
        std::fill(c.begin(), c.end(), Label{1});
        while (true) {
            if (valid()) return k;
            std::size_t i = n;
            while (i > 0 && c[i - 1] == k) c[--i] = 1;
            if (i == 0) break;
            ++c[i - 1];
        }
    }
    return std::nullopt;
}

}  // namespace tdl
