#include <doctest.h>

#include "tdl/lobster.hpp"

using namespace tdl;

TEST_CASE("pair validity") {
    CHECK(pair_valid(8, 1, 2).reason == PairIssue::Double);
    CHECK(pair_valid(8, 10, 5).reason == PairIssue::Double);
    CHECK(pair_valid(8, 11, 4).valid);
    CHECK(pair_valid(8, 10, 9).reason == PairIssue::Triple);
    CHECK(pair_valid(8, 11, 9).valid);
    CHECK_THROWS_AS(pair_valid(8, 2, 3), ParameterError);
    CHECK_THROWS_AS(pair_valid(8, 1, 10), ParameterError);
    CHECK_THROWS_AS(pair_valid(8, 1, 1), ParameterError);
    for (std::size_t d1 = 3; d1 <= 12; ++d1) CHECK_FALSE(pair_valid(d1, 1, 2).valid);
}

TEST_CASE("m values") {
    CHECK(m_value(8, 7, 1, 3) == 11);
    CHECK(m_value(8, 7, 11, 9) == 6);
    CHECK(m_value(8, 7, 10, 2) == 9);
    CHECK(tertiary_labels(8, 7, 1, 3) == std::vector<Label>{2, 7, 8, 9, 10, 11});
    CHECK_THROWS_AS(m_value(8, 7, 1, 2), ParameterError);
    CHECK_THROWS_AS(m_value(8, 1, 1, 3), ParameterError);
    CHECK(m_value(8, 9, 1, 8) == 18);  // 2 D1 + 2
}

TEST_CASE("greedy tertiary labels keep the secondary vertex clean") {
    for (std::size_t d1 = 3; d1 <= 10; ++d1)
        for (std::size_t d2 = 2; d2 <= 12; ++d2) {
            const LobsterContext ctx(d1, d2);
            for (Label r : ctx.primary_labels())
                for (Label s = ctx.secondary_min(); s <= ctx.secondary_max(); ++s) {
                    if (!pair_valid(d1, r, s).valid) continue;
                    const auto t = tertiary_labels(d1, d2, r, s);
                    CHECK(t.size() == d2 - 1);
                    CHECK(std::is_sorted(t.begin(), t.end()));
                    std::vector<Label> diffs{std::abs(r - s)};
                    for (Label x : t) {
                        CHECK(x != s);
                        CHECK(x != 2 * s);
                        CHECK(2 * x != s);
                        diffs.push_back(std::abs(x - s));
                    }
                    std::sort(diffs.begin(), diffs.end());
                    CHECK(std::adjacent_find(diffs.begin(), diffs.end()) == diffs.end());
                }
        }
}

TEST_CASE("table shape and rendering") {
    const auto t = m_table(8, 7);
    CHECK(t.rows == std::vector<Label>{1, 10, 11});
    CHECK(t.columns == std::vector<Label>{2, 3, 4, 5, 6, 7, 8, 9});
    CHECK(t.cells.size() == 24);
    CHECK_FALSE(t.at(1, 2).value);
    CHECK(t.at(1, 3).value == 11);
    CHECK(t.at(11, 9).value == 6);
    CHECK_THROWS_AS(t.at(2, 3), ParameterError);
    CHECK(t.render_csv() ==
          "r,2,3,4,5,6,7,8,9\n"
          "1,,11,12,13,14,15,12,7\n"
          "10,9,11,12,,14,15,12,\n"
          "11,9,10,12,13,14,15,12,6\n");
    const auto text = t.render_text();
    CHECK(text.find("15") != std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == 4);
    for (std::size_t d1 = 3; d1 <= 10; ++d1) CHECK_FALSE(m_table(d1, 4).at(1, 2).value);
}

TEST_CASE("table grows by at least one per unit delta2") {
    for (std::size_t d1 = 3; d1 <= 10; ++d1)
        for (std::size_t d2 = 2; d2 <= 14; ++d2) {
            const auto a = m_table(d1, d2), b = m_table(d1, d2 + 1);
            for (std::size_t i = 0; i < a.cells.size(); ++i) {
                CHECK(a.cells[i].value.has_value() == b.cells[i].value.has_value());
                if (a.cells[i].value) CHECK(*b.cells[i].value >= *a.cells[i].value + 1);
            }
        }
}

TEST_CASE("stabilization") {
    CHECK(stabilization_point(8, 1, 7) <= 7);
    CHECK(m_value(8, 7, 1, 7) == 15);
    CHECK(stabilization_point(8, 1, 3) <= 8);
    CHECK(m_value(8, 8, 1, 3) == 12);
    CHECK(stabilization_point(8, 11, 9) <= 9);
    CHECK_THROWS_AS(stabilization_point(8, 1, 2), ParameterError);
    for (std::size_t d1 = 3; d1 <= 10; ++d1) {
        const LobsterContext ctx(d1, 2);
        for (Label r : ctx.primary_labels())
            for (Label s = ctx.secondary_min(); s <= ctx.secondary_max(); ++s) {
                if (!pair_valid(d1, r, s).valid) continue;
                const auto point = stabilization_point(d1, r, s);
                const auto bound = 2 * s >= static_cast<Label>(d1) + 4
                                       ? static_cast<std::size_t>(s)
                                       : d1 + 3 - static_cast<std::size_t>(s);
                CHECK(point <= bound);
                // linear from the point on, well past the scan cap
                for (std::size_t d2 = point; d2 <= 4 * d1 + 10; ++d2)
                    CHECK(m_value(d1, d2 + 1, r, s) == m_value(d1, d2, r, s) + 1);
                // and the point is least
                if (point > 2)
                    CHECK(m_value(d1, point, r, s) != m_value(d1, point - 1, r, s) + 1);
            }
    }
}

TEST_CASE("corollary: large delta2 rows agree and columns increase") {
    for (std::size_t d1 = 3; d1 <= 9; ++d1)
        for (std::size_t d2 = d1 + 1; d2 <= d1 + 4; ++d2) {
            const auto t = m_table(d1, d2);
            for (Label s : t.columns) {
                std::optional<Label> common;
                for (Label r : t.rows) {
                    const auto v = t.at(r, s).value;
                    if (!v) continue;
                    if (common) CHECK(*v == *common);
                    common = v;
                }
            }
            for (Label r : t.rows) {
                std::optional<Label> prev;
                for (Label s : t.columns) {
                    const auto v = t.at(r, s).value;
                    if (!v) continue;
                    if (prev) CHECK(*v >= *prev);
                    prev = v;
                }
            }
        }
}

TEST_CASE("secondary labels") {
    CHECK(secondary_labels(8, 1) == std::vector<Label>{3, 4, 5, 6, 7, 8});
    CHECK(secondary_labels(8, 10) == std::vector<Label>{2, 3, 4, 6, 7, 8});
    CHECK(secondary_labels(8, 11) == std::vector<Label>{2, 3, 4, 5, 6, 7});
    for (std::size_t d1 = 3; d1 <= 15; ++d1)
        for (Label r : LobsterContext(d1, 2).primary_labels()) {
            const auto s = secondary_labels(d1, r);
            CHECK(s.size() == d1 - 2);
            CHECK(std::find(s.begin(), s.end(), static_cast<Label>(d1) + 1) == s.end());
        }
}

TEST_CASE("bounds and the maximal lobster labeling") {
    const auto b = lobster_bounds(8, 7);
    CHECK(b.lower == 9);
    CHECK(b.upper == 16);
    CHECK_FALSE(b.exact);
    CHECK(lobster_bounds(3, 6).lower == 7);
    const auto g = build(family::MaximalLobster{4, 4, 3}).graph;
    CHECK(lobster_bounds(4, 3, g).lower == lower_bound(g));
    CHECK_THROWS_AS(lobster_bounds(2, 3), ParameterError);

    const auto c = label_maximal_lobster(6, 8, 7);
    CHECK(c.claimed_k == 16);
    CHECK_FALSE(c.tight);
    CHECK(c.labeling.max_label() <= 16);
    for (std::size_t n = 2; n <= 8; ++n)
        for (std::size_t d1 = 3; d1 <= 10; ++d1)
            for (std::size_t d2 = 2; d2 <= 10; ++d2) {
                const auto spec = family::MaximalLobster{n, d1, d2};
                const auto lab = label_maximal_lobster(n, d1, d2);
                const auto graph = build(spec).graph;
                CHECK(is_k_tdl(graph, lab.labeling, lab.claimed_k));
                CHECK(lab.claimed_k <= static_cast<Label>(d1 + d2 + 1));
            }
}

TEST_CASE("small lobsters sit inside their bounds") {
    for (std::size_t d1 = 3; d1 <= 4; ++d1)
        for (std::size_t d2 = 2; d2 <= 3; ++d2) {
            const auto g = build(family::MaximalLobster{4, d1, d2}).graph;
            const auto r = chi_td(g);
            REQUIRE(r.exact);
            const auto b = lobster_bounds(d1, d2, g);
            CHECK(b.lower <= *r.exact);
            CHECK(*r.exact <= b.upper);
        }
}
