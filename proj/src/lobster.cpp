#include "tdl/lobster.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace tdl {

namespace {

Label L(std::size_t x) { return static_cast<Label>(x); }

void check_deltas(std::size_t d1, std::size_t d2) {
    if (d1 < 3) throw ParameterError("lobster requires delta1 >= 3 (got " + std::to_string(d1) + ")");
    if (d2 < 2) throw ParameterError("lobster requires delta2 >= 2 (got " + std::to_string(d2) + ")");
}

void check_pair_domain(std::size_t d1, Label r, Label s) {
    const LobsterContext ctx(d1, 2);
    const auto R = ctx.primary_labels();
    if (std::find(R.begin(), R.end(), r) == R.end())
        throw ParameterError("r=" + std::to_string(r) + " is not a primary label for delta1=" +
                             std::to_string(d1));
    if (s < ctx.secondary_min() || s > ctx.secondary_max())
        throw ParameterError("s=" + std::to_string(s) + " is outside [2, " +
                             std::to_string(ctx.secondary_max()) + "]");
}

void require_valid(std::size_t d1, Label r, Label s) {
    const auto check = pair_valid(d1, r, s);
    if (!check.valid)
        throw ParameterError("(r=" + std::to_string(r) + ", s=" + std::to_string(s) +
                             ") is not a valid pair (" + to_string(check.reason) + ")");
}

}  // namespace

LobsterContext::LobsterContext(std::size_t d1, std::size_t d2) : delta1(d1), delta2(d2) {
    check_deltas(d1, d2);
}

std::array<Label, 3> LobsterContext::primary_labels() const {
    return {1, L(delta1) + 2, L(delta1) + 3};
}

std::string to_string(PairIssue issue) {
    switch (issue) {
        case PairIssue::None: return "none";
        case PairIssue::Double: return "double";
        case PairIssue::Triple: return "triple";
    }
    return "?";
}

PairCheck pair_valid(std::size_t delta1, Label r, Label s) {
    check_pair_domain(delta1, r, s);
    if (s == 2 * r || r == 2 * s) return {false, PairIssue::Double};
    // s = D1+1 next to a (D1+2)-primary: edge label 1, which a neighbouring
    // primary (1 or D1+3) already puts on that vertex
    if (r == L(delta1) + 2 && s == L(delta1) + 1) return {false, PairIssue::Triple};
    return {true, PairIssue::None};
}

std::vector<Label> tertiary_labels(std::size_t delta1, std::size_t delta2, Label r, Label s) {
    check_deltas(delta1, delta2);
    require_valid(delta1, r, s);
    std::vector<Label> used{std::abs(r - s)};
    std::vector<Label> out;
    for (Label x = 1; out.size() + 1 < delta2; ++x) {
        if (x == s || x == r || x == 2 * s || 2 * x == s) continue;
        const Label d = std::abs(x - s);
        if (std::find(used.begin(), used.end(), d) != used.end()) continue;
        used.push_back(d);
        out.push_back(x);
    }
    return out;
}

Label m_value(std::size_t delta1, std::size_t delta2, Label r, Label s) {
    const auto labels = tertiary_labels(delta1, delta2, r, s);
    return labels.empty() ? 0 : labels.back();
}

const MTableCell& MTable::at(Label r, Label s) const {
    const auto ri = std::find(rows.begin(), rows.end(), r);
    const auto si = std::find(columns.begin(), columns.end(), s);
    if (ri == rows.end() || si == columns.end())
        throw ParameterError("no table cell for (r=" + std::to_string(r) + ", s=" +
                             std::to_string(s) + ")");
    return cells[static_cast<std::size_t>(ri - rows.begin()) * columns.size() +
                 static_cast<std::size_t>(si - columns.begin())];
}

std::string MTable::render_text() const {
    std::size_t width = 3;
    for (const auto& c : cells)
        if (c.value) width = std::max(width, std::to_string(*c.value).size() + 1);
    for (Label r : rows) width = std::max(width, std::to_string(r).size() + 1);
    const auto w = static_cast<int>(width);

    std::ostringstream out;
    out << std::setw(w) << "r\\s";
    for (Label s : columns) out << std::setw(w) << s;
    out << '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out << std::setw(w) << rows[i];
        for (std::size_t j = 0; j < columns.size(); ++j) {
            const auto& c = cells[i * columns.size() + j];
            if (c.value)
                out << std::setw(w) << *c.value;
            else
                out << std::setw(w) << "";
        }
        out << '\n';
    }
    return out.str();
}

std::string MTable::render_csv() const {
    std::ostringstream out;
    out << "r";
    for (Label s : columns) out << ',' << s;
    out << '\n';
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out << rows[i];
        for (std::size_t j = 0; j < columns.size(); ++j) {
            out << ',';
            const auto& c = cells[i * columns.size() + j];
            if (c.value) out << *c.value;
        }
        out << '\n';
    }
    return out.str();
}

MTable m_table(std::size_t delta1, std::size_t delta2) {
    const LobsterContext ctx(delta1, delta2);
    MTable t;
    t.delta1 = delta1;
    t.delta2 = delta2;
    const auto R = ctx.primary_labels();
    t.rows.assign(R.begin(), R.end());
    for (Label s = ctx.secondary_min(); s <= ctx.secondary_max(); ++s) t.columns.push_back(s);
    for (Label r : t.rows)
        for (Label s : t.columns) {
            const auto check = pair_valid(delta1, r, s);
            MTableCell cell{r, s, std::nullopt, check.reason};
            if (check.valid) cell.value = m_value(delta1, delta2, r, s);
            t.cells.push_back(cell);
        }
    return t;
}

std::size_t stabilization_point(std::size_t delta1, Label r, Label s) {
    check_deltas(delta1, 2);
    require_valid(delta1, r, s);
    const std::size_t cap = 2 * delta1 + 4;
    // m for delta2 = 2 .. cap + 1
    std::vector<Label> m;
    for (std::size_t d2 = 2; d2 <= cap + 1; ++d2) m.push_back(m_value(delta1, d2, r, s));
    std::size_t point = cap;
    for (std::size_t d2 = cap; d2 >= 2; --d2) {
        if (m[d2 + 1 - 2] != m[d2 - 2] + 1) break;
        point = d2;
    }
    return point;
}

std::vector<Label> secondary_labels(std::size_t delta1, Label r) {
    const LobsterContext ctx(delta1, 2);
    std::vector<Label> out;
    for (Label s = ctx.secondary_min(); s <= L(delta1) && out.size() < delta1 - 2; ++s)
        if (pair_valid(delta1, r, s).valid) out.push_back(s);
    if (out.size() < delta1 - 2)
        throw ParameterError("only " + std::to_string(out.size()) +
                             " valid secondary labels for r=" + std::to_string(r));
    return out;
}

BoundsResult lobster_bounds(std::size_t delta1, std::size_t delta2) {
    check_deltas(delta1, delta2);
    BoundsResult b;
    b.lower = L(std::max(delta1, delta2)) + 1;
    b.upper = L(delta1 + delta2) + 1;
    b.provenance = "lobster theorem";
    return b;
}

BoundsResult lobster_bounds(std::size_t delta1, std::size_t delta2, const Graph& g) {
    auto b = lobster_bounds(delta1, delta2);
    b.lower = std::max(b.lower, lower_bound(g));
    return b;
}

ConstructionResult label_maximal_lobster(std::size_t n, std::size_t delta1, std::size_t delta2) {
    const family::MaximalLobster spec{n, delta1, delta2};
    validate(spec);
    const auto g = build(spec).graph;
    const Label D1 = L(delta1);
    std::vector<Label> labels(g.vertex_count(), 0);
    const Label pattern[3] = {1, D1 + 3, D1 + 2};
    for (std::size_t i = 0; i < n; ++i) labels[i] = pattern[i % 3];

    // secondaries of primary i (1 <= i <= n-2) occupy a contiguous block
    Vertex next = n;
    std::vector<std::pair<Vertex, Vertex>> secondaries;  // (secondary, primary)
    for (Vertex p = 1; p + 1 < n; ++p) {
        const auto choices = secondary_labels(delta1, labels[p]);
        for (Label s : choices) {
            labels[next] = s;
            secondaries.emplace_back(next++, p);
        }
    }
    for (const auto& [sec, prim] : secondaries) {
        const auto tert = tertiary_labels(delta1, delta2, labels[prim], labels[sec]);
        for (Label x : tert) labels[next++] = x;
    }

    ConstructionResult out;
    out.claimed_k = L(delta1 + delta2) + 1;
    out.provenance = "lobster upper-bound construction";
    out.tight = false;
    out.labeling = Labeling(std::move(labels));
    if (n == 2) {
        // no interior primaries: the lobster degenerates to a single edge
        out.claimed_k = 3;
        out.labeling = Labeling(std::vector<Label>{1, 3});
        out.provenance = "path (small case)";
        out.tight = true;
    }
    if (!is_k_tdl(g, out.labeling, out.claimed_k))
        throw std::logic_error("lobster construction failed to verify");
    return out;
}

}  // namespace tdl
