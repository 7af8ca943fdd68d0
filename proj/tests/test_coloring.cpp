#include "oracles.hpp"

#include <arrowing/arrowing.hpp>
#include <arrowing/enumerate.hpp>
#include <arrowing/subgraph.hpp>

#include <doctest.h>

#include <random>

using namespace arrowing;

namespace {

const Graph p3 = path_graph(3);
const Graph k3 = complete_graph(3);
const Graph c4 = cycle_graph(4);
const SearchBudget budget{1'000'000};

EdgeColoring with_red(const Graph& g, std::vector<Edge> red) { return EdgeColoring::from_red_edges(g, red); }

} // namespace

TEST_CASE("is_good examples")
{
    CHECK(is_good(EdgeColoring::all_blue(p3), p3, c4));
    CHECK_FALSE(is_good(EdgeColoring::all_blue(c4), p3, c4));
    CHECK(is_good(with_red(k3, {{0, 1}}), p3, k3));
    CHECK_FALSE(is_good(EdgeColoring::all_blue(k3), p3, k3));
    CHECK_FALSE(is_good(with_red(k3, {{0, 1}, {1, 2}}), p3, k3));
}

TEST_CASE("free vertices and red degree")
{
    auto k4 = complete_graph(4);
    CHECK(free_vertices(EdgeColoring::all_blue(k4)).size() == 4);
    auto single = with_red(p3, {{0, 1}});
    CHECK(free_vertices(single) == std::vector<Vertex>{2});
    CHECK(free_vertices(with_red(k4, {{0, 1}, {2, 3}})).empty());
    CHECK(red_degree(EdgeColoring::all_blue(k4), 2) == 0);
    auto star = star_graph(3);
    CHECK(red_degree(with_red(star, {{0, 1}, {0, 2}, {0, 3}}), 0) == 3);
    CHECK(red_degree(with_red(c4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), 3) == 2);

    std::mt19937_64 rng(2);
    for (int round = 0; round < 100; ++round) {
        auto g = random_graph(2 + rng() % 7, 0.5, rng);
        std::vector<Color> colors(g.edge_count());
        for (auto& c : colors)
            c = rng() % 2 ? Color::red : Color::blue;
        EdgeColoring c(g, colors);
        auto free = free_vertices(c);
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            CHECK((std::find(free.begin(), free.end(), v) != free.end()) == (red_degree(c, v) == 0));
    }
}

TEST_CASE("colouring json round trip")
{
    auto c = with_red(complete_graph(4), {{0, 1}, {2, 3}});
    auto j = coloring_to_json(c);
    CHECK(j["red"].size() == 2);
    CHECK(coloring_from_json(j) == c);
    CHECK_THROWS_AS(coloring_from_json(nlohmann::json{{"graph", "2 1\n0 1\n"}}), ArrowingError);
}

TEST_CASE("find_good_coloring examples")
{
    auto a = find_good_coloring(k3, p3, k3, budget);
    REQUIRE(a.status == SearchStatus::found);
    CHECK(a.coloring->red_edges().size() == 1);

    CHECK(find_good_coloring(complete_graph(5), p3, k3, budget).status == SearchStatus::none);
    CHECK(find_good_coloring(complete_graph(6), k3, k3, budget).status == SearchStatus::none);
    CHECK(find_good_coloring(complete_graph(5), k3, k3, budget).status == SearchStatus::found);
}

TEST_CASE("arrows examples")
{
    auto a = arrows(p3, p3, c4, budget);
    REQUIRE(a.result.has_value());
    CHECK_FALSE(*a.result);
    REQUIRE(a.certificate.has_value());
    CHECK(is_good(*a.certificate, p3, c4));

    auto b = arrows(complete_graph(6), k3, k3, budget);
    CHECK(b.result == true);
    CHECK_FALSE(b.certificate.has_value());

    auto c = arrows(complete_graph(4), star_graph(3), k3, budget);
    REQUIRE(c.result.has_value());
    CHECK_FALSE(*c.result);
    CHECK(is_good(*c.certificate, star_graph(3), k3));
}

TEST_CASE("budget exhaustion is its own outcome")
{
    std::mt19937_64 rng(8);
    auto g = random_graph(14, 0.6, rng);
    auto r = find_good_coloring(g, p3, k3, SearchBudget{0});
    CHECK(r.status != SearchStatus::none);
    auto big = find_good_coloring(complete_graph(6), k3, k3, SearchBudget{1});
    CHECK(big.status == SearchStatus::budget_exceeded);
    CHECK_FALSE(arrows(complete_graph(6), k3, k3, SearchBudget{1}).result.has_value());
}

TEST_CASE("specialised and generic searches agree with full enumeration")
{
    std::mt19937_64 rng(41);
    std::vector<std::pair<Graph, Graph>> patterns = {{p3, k3}, {p3, c4}, {p3, complete_minus_edge(4)},
        {star_graph(3), k3}, {k3, k3}, {p3, path_graph(3)}, {path_graph(2), k3}};
    int checked = 0;
    for (int round = 0; round < 500; ++round) {
        auto g = random_graph(3 + rng() % 4, 0.3 + 0.1 * (rng() % 6), rng);
        if (g.edge_count() > 9)
            continue;
        ++checked;
        for (const auto& [f, h] : patterns) {
            bool expected = oracle::arrows(g, f, h);
            for (auto strategy : {Strategy::automatic, Strategy::generic}) {
                SearchOptions options;
                options.strategy = strategy;
                auto r = find_good_coloring(g, f, h, budget, options);
                REQUIRE(r.status != SearchStatus::budget_exceeded);
                CHECK((r.status == SearchStatus::none) == expected);
                if (r.coloring) {
                    CHECK(is_good(*r.coloring, f, h));
                    CHECK(!oracle::contains(r.coloring->red_subgraph(), f));
                    CHECK(!oracle::contains(r.coloring->blue_subgraph(), h));
                }
            }
        }
    }
    CHECK(checked > 200);
}

TEST_CASE("lazily added copies give the same answers")
{
    std::mt19937_64 rng(43);
    SearchOptions lazy;
    lazy.max_precomputed_copies = 0;
    for (int round = 0; round < 200; ++round) {
        auto g = random_graph(4 + rng() % 5, 0.5, rng);
        for (const auto& f : {p3, k3}) {
            auto eager = find_good_coloring(g, f, k3, budget);
            auto late = find_good_coloring(g, f, k3, budget, lazy);
            CHECK(eager.status == late.status);
            if (late.coloring)
                CHECK(is_good(*late.coloring, f, k3));
        }
    }
    auto ramsey = find_good_coloring(complete_graph(6), k3, k3, budget, lazy);
    CHECK(ramsey.status == SearchStatus::none);
}

TEST_CASE("red degree caps hold in every good colouring")
{
    std::mt19937_64 rng(47);
    for (int round = 0; round < 100; ++round) {
        auto g = random_graph(5 + rng() % 4, 0.6, rng);
        for (unsigned n : {2u, 3u}) {
            auto r = find_good_coloring(g, star_graph(n), k3, budget);
            if (!r.coloring)
                continue;
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                CHECK(red_degree(*r.coloring, v) <= n - 1);
        }
    }
}

TEST_CASE("oracle queries reuse one solver")
{
    auto g = complete_graph(4);
    GoodColoringOracle oracle(g, p3, k3);
    auto any = oracle.query(budget);
    REQUIRE(any.status == SearchStatus::found);
    // Every vertex of K4 is covered by the red perfect matching.
    for (Vertex v = 0; v < 4; ++v) {
        auto lits = free_vertex_lits(g, v);
        CHECK(oracle.query(lits, budget).status == SearchStatus::none);
    }
    Lit red01[] = {red_lit(g.edge_id(0, 1))};
    auto r = oracle.query(red01, budget);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(r.coloring->color(g.edge_id(2, 3)) == Color::red);
}

TEST_CASE("prune_non_h_edges")
{
    Graph c4_tail(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}});
    auto pruned = prune_non_h_edges(c4_tail, c4);
    CHECK(pruned.graph.edge_count() == 4);
    CHECK(pruned.removed == std::vector<Edge>{{3, 4}});

    Graph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    CHECK(prune_non_h_edges(bowtie, c4).graph.edge_count() == 0);

    std::mt19937_64 rng(53);
    for (int round = 0; round < 80; ++round) {
        auto g = random_graph(4 + rng() % 4, 0.5, rng);
        for (const auto& h : {k3, c4}) {
            auto p = prune_non_h_edges(g, h).graph;
            CHECK(oracle::p3_arrows(g, h) == oracle::p3_arrows(p, h));
            CHECK(count_copies(p, h) == count_copies(g, h));
        }
    }
}

TEST_CASE("TK_n equivalence examples")
{
    auto a = check_tk_equivalence(complete_graph(5), 3, budget);
    CHECK(a.tk_arrows == true);
    CHECK(a.k_arrows == true);
    CHECK(a.agreement == Agreement::agree);
    auto b = check_tk_equivalence(cycle_graph(5), 3, budget);
    CHECK(b.tk_arrows == false);
    CHECK(b.agreement == Agreement::agree);
    CHECK_THROWS_AS(check_tk_equivalence(cycle_graph(5), 2, budget), ArrowingError);
}

TEST_CASE("min_red_degree_over_good")
{
    CHECK(min_red_degree_over_good(complete_graph(4), 0, p3, k3, budget) == 1u);
    CHECK(min_red_degree_over_good(k3, 0, p3, k3, budget) == 0u);
    CHECK_THROWS_AS(min_red_degree_over_good(complete_graph(5), 0, p3, k3, budget), ArrowingError);

    std::mt19937_64 rng(59);
    for (int round = 0; round < 60; ++round) {
        auto g = random_graph(4 + rng() % 3, 0.6, rng);
        if (g.edge_count() > 12)
            continue;
        auto masks = oracle::good_masks(g, star_graph(3), k3);
        if (masks.empty())
            continue;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            unsigned best = 99;
            for (auto m : masks) {
                unsigned r = 0;
                for (auto e : g.incident_edges(v))
                    r += (m >> e) & 1u;
                best = std::min(best, r);
            }
            CHECK(min_red_degree_over_good(g, v, star_graph(3), k3, budget) == best);
        }
    }
}
