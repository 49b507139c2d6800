#include <doctest.h>

#include "support/corpus.hpp"
#include "tdl/constructions.hpp"

#include <set>

using namespace tdl;

namespace {

void check_clean(const FamilySpec& spec, const ConstructionResult& c) {
    const auto g = build(spec).graph;
    INFO(describe(spec));
    CHECK(is_k_tdl(g, c.labeling, c.claimed_k));
    CHECK(definitional_check(g, c.labeling));
}

// Hub labels that occur in some labeling of K_{1,m} within [1, m + r].
std::set<Label> realised_hub_labels(std::size_t m, std::size_t r) {
    const auto g = build(family::Star{m}).graph;
    const Label k = static_cast<Label>(m + r);
    std::set<Label> out;
    for (Label hub = 1; hub <= k; ++hub) {
        std::vector<Label> partial(m + 1, 0);
        partial[0] = hub;
        if (complete_labeling(g, partial, k).outcome == Outcome::Found) out.insert(hub);
    }
    return out;
}

}  // namespace

TEST_CASE("paths") {
    CHECK(label_path(4).labeling == Labeling{1, 4, 3, 1});
    CHECK(label_path(4).claimed_k == 4);
    CHECK(label_path(1).labeling == Labeling{1});
    CHECK(label_path(1).claimed_k == 1);
    CHECK(label_path(3).claimed_k == 3);
    CHECK(label_path(3).labeling.max_label() == 3);
    CHECK(label_path(2).claimed_k == 3);
    for (std::size_t n = 1; n <= 60; ++n) {
        const auto c = label_path(n);
        check_clean(family::Path{n}, c);
        CHECK(c.tight);
        CHECK_FALSE(c.repaired);
    }
}

TEST_CASE("cycles") {
    CHECK(label_cycle(7).labeling == Labeling{1, 4, 3, 1, 4, 3, 5});
    CHECK(label_cycle(7).claimed_k == 5);
    CHECK(label_cycle(6).labeling == Labeling{1, 4, 3, 1, 4, 3});
    CHECK(label_cycle(6).claimed_k == 4);
    CHECK(label_cycle(8).labeling == Labeling{1, 4, 3, 5, 1, 4, 3, 5});
    CHECK(label_cycle(3).claimed_k == 4);
    CHECK_THROWS_AS(label_cycle(2), ParameterError);
    for (std::size_t n = 3; n <= 60; ++n) {
        const auto c = label_cycle(n);
        check_clean(family::Cycle{n}, c);
        // restricted to the path v_1..v_n it stays clean
        CHECK(find_violations(build(family::Path{n}).graph, c.labeling).empty());
    }
    // the five-vertex suffix would close the cycle on two 5s
    CHECK(label_cycle(5).repaired);
}

TEST_CASE("stars") {
    CHECK(label_star(4).labeling == Labeling{5, 1, 2, 3, 4});
    CHECK(label_star(5).labeling[0] == 7);
    CHECK(label_star(5).claimed_k == 7);
    CHECK(label_star(1).labeling == Labeling{3, 1});
    for (std::size_t m = 1; m <= 60; ++m) check_clean(family::Star{m}, label_star(m));
}

TEST_CASE("feasible centre labels") {
    CHECK(feasible_center_labels(4, 1) == std::vector<Label>{5});
    CHECK(feasible_center_labels(5, 2) == std::vector<Label>{1, 7});
    CHECK(feasible_center_labels(5, 4) == std::vector<Label>{1, 2, 3, 6, 7, 8, 9});
    CHECK_THROWS_AS(feasible_center_labels(4, 0), ParameterError);
    CHECK_THROWS_AS(feasible_center_labels(4, 5), ParameterError);
    for (std::size_t m = 1; m <= 7; ++m)
        for (std::size_t r = 1; r <= m; ++r) {
            INFO("m=" << m << " r=" << r);
            const auto got = feasible_center_labels(m, r);
            CHECK(std::is_sorted(got.begin(), got.end()));
            // the lemma's set is sound; for odd m it misses m+1 once 2r > m+3
            const std::set<Label> lemma(got.begin(), got.end());
            auto real = realised_hub_labels(m, r);
            for (Label x : lemma) CHECK(real.count(x) == 1);
            std::set<Label> missed;
            for (Label x : real)
                if (!lemma.count(x)) missed.insert(x);
            if (m % 2 == 1 && 2 * r > m + 3)
                CHECK(missed == std::set<Label>{static_cast<Label>(m + 1)});
            else
                CHECK(missed.empty());
        }
}

TEST_CASE("wheels") {
    const auto w4 = label_wheel(4);
    CHECK(w4.claimed_k == 8);
    CHECK(std::set<Label>(w4.labeling.labels.begin(), w4.labeling.labels.end()) ==
          std::set<Label>{1, 5, 7, 8});
    CHECK(label_wheel(5).labeling == Labeling{7, 1, 3, 2, 5});
    CHECK(label_wheel(9).claimed_k == 9);
    CHECK(has_k_tdl(build(family::Wheel{9}).graph, 8).outcome == Outcome::None);
    for (std::size_t n = 4; n <= 40; ++n) {
        const auto c = label_wheel(n);
        check_clean(family::Wheel{n}, c);
        CHECK(c.claimed_k == closed_form(family::Wheel{n}).exact);
        CHECK(c.repaired == (n == 8));
    }
}

TEST_CASE("gears") {
    CHECK(label_gear(4).claimed_k == 6);
    CHECK(label_gear(5).claimed_k == 6);
    CHECK(label_gear(6).claimed_k == 7);
    CHECK(label_gear(7).claimed_k == 7);
    CHECK(label_gear(8).claimed_k == 9);
    CHECK(has_k_tdl(build(family::Gear{8}).graph, 8).outcome == Outcome::None);
    for (std::size_t n = 4; n <= 40; ++n) {
        const auto c = label_gear(n);
        check_clean(family::Gear{n}, c);
        CHECK_FALSE(c.repaired);
        // degree-3 rim vertices carry 1..n-1 in order above n = 7
        if (n >= 8)
            for (std::size_t i = 1; i < n; ++i) CHECK(c.labeling[2 * i - 1] == static_cast<Label>(i));
    }
}

TEST_CASE("helms") {
    CHECK(label_helm(4).claimed_k == 8);
    CHECK(label_helm(7).claimed_k == 8);
    CHECK(label_helm(8).claimed_k == 9);
    for (std::size_t n = 4; n <= 40; ++n) {
        const auto c = label_helm(n);
        check_clean(family::Helm{n}, c);
        CHECK(c.claimed_k == closed_form(family::Helm{n}).exact);
    }
    // above the small cases the rim keeps the wheel labeling
    const auto w = label_wheel(11), h = label_helm(11);
    for (Vertex v = 0; v < 11; ++v) CHECK(h.labeling[v] == w.labeling[v]);
}

TEST_CASE("caterpillars") {
    const auto c = label_caterpillar({1, 3, 3, 3, 1});
    CHECK(c.claimed_k == 6);
    CHECK(c.tight);
    check_clean(family::Caterpillar{{1, 3, 3, 3, 1}}, c);
    CHECK(label_caterpillar({4}).claimed_k == 5);
    const auto sparse = label_caterpillar({1, 4, 2, 2, 4, 1});
    CHECK(sparse.claimed_k == 7);
    CHECK_FALSE(sparse.tight);
    CHECK(chi_td(build(family::Caterpillar{{1, 4, 2, 2, 4, 1}}).graph).exact == 5);
    CHECK(chi_td(build(family::Caterpillar{{1, 4, 2, 4, 1}}).graph).exact == 6);
    CHECK(label_caterpillar({1, 2, 2, 1}).claimed_k == 4);  // a path on 4 vertices

    CHECK(chi_td_caterpillar({1, 3, 3, 3, 1}) == 6);
    CHECK(chi_td_caterpillar({1, 4, 2, 2, 4, 1}) == 5);
    CHECK(chi_td_caterpillar({1, 4, 2, 4, 1}) == 6);  // degree-4 vertices too close
    CHECK(chi_td_caterpillar({1, 4, 4, 2, 1}) == 6);
    CHECK(chi_td_caterpillar({1, 4, 3, 2, 3, 4, 1}) == 6);  // the five-vertex pattern
    CHECK(chi_td_caterpillar({4, 2, 2, 4}) == 5);
    CHECK(chi_td_caterpillar({4, 3, 3}) == 6);             // three in a row >= Delta - 1
    CHECK(chi_td_caterpillar({5, 5, 5}) == 8);
    CHECK(chi_td_caterpillar({5, 5, 4, 5}) == 7);
    CHECK_THROWS_AS(chi_td_caterpillar({1, 2, 1}), ParameterError);

    for (const auto& d : testing::spine_sequences(6, 1, 6)) {
        const auto r = label_caterpillar(d);
        check_clean(family::Caterpillar{d}, r);
    }
}

TEST_CASE("long caterpillars stay clean") {
    testing::Rng rng(55);
    for (int i = 0; i < 200; ++i) {
        const std::size_t p = 1 + testing::below(rng, 20);
        std::vector<std::size_t> d(p);
        for (std::size_t j = 0; j < p; ++j)
            d[j] = std::max<std::size_t>(1, caterpillar_spine_neighbors(j, p)) + testing::below(rng, 6);
        check_clean(family::Caterpillar{d}, label_caterpillar(d));
    }
}

TEST_CASE("uniform trees") {
    CHECK(chi_td_uniform_tree_h2(3) == 6);
    CHECK(chi_td_uniform_tree_h2(4) == 7);
    CHECK(chi_td_uniform_tree_h2(5) == 9);
    CHECK(label_uniform_tree(3, 2).claimed_k == 6);
    CHECK(label_uniform_tree(4, 2).claimed_k == 7);
    const auto deep = label_uniform_tree(3, 3);
    CHECK(deep.claimed_k <= 7);
    CHECK_FALSE(deep.tight);
    const auto exact = chi_td(build(family::UniformTree{3, 3}).graph);
    REQUIRE(exact.exact);
    CHECK(*exact.exact <= deep.claimed_k);
    CHECK(*exact.exact >= chi_td_uniform_tree_h2(3));
    for (std::size_t delta = 2; delta <= 12; ++delta)
        for (std::size_t h = 1; h <= 4; ++h) {
            if (testing::vertex_count(family::UniformTree{delta, h}) > 3000) continue;
            check_clean(family::UniformTree{delta, h}, label_uniform_tree(delta, h));
        }
}

TEST_CASE("height-two trees match search") {
    for (std::size_t delta = 2; delta <= 5; ++delta) {
        const auto g = build(family::UniformTree{delta, 2}).graph;
        CHECK(chi_td(g).exact == chi_td_uniform_tree_h2(delta));
    }
}

TEST_CASE("closed forms") {
    CHECK(closed_form(family::Wheel{6}).exact == 7);
    const auto lob = closed_form(family::MaximalLobster{6, 8, 7});
    CHECK(lob.lower == 9);
    CHECK(lob.upper == 16);
    CHECK_FALSE(lob.exact);
    CHECK(closed_form(family::UniformTree{5, 2}).exact == 9);
    const auto deep = closed_form(family::UniformTree{4, 3});
    CHECK_FALSE(deep.exact);
    CHECK(deep.upper == 9);
    CHECK(closed_form(family::Gear{9}).exact == 9);
    CHECK(closed_form(family::Helm{6}).exact == 8);
    CHECK(closed_form(family::Cycle{9}).exact == 4);
    CHECK(closed_form(family::Caterpillar{{1, 2, 1}}).exact == 3);
    CHECK_THROWS_AS(closed_form(family::Wheel{3}), ParameterError);
}

TEST_CASE("tight constructions equal the search value") {
    for (const auto& spec : testing::small_family_instances(9)) {
        const auto c = construct(spec);
        if (!c.tight) continue;
        INFO(describe(spec));
        CHECK(chi_td(build(spec).graph).exact == c.claimed_k);
    }
}
