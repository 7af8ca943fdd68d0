#include "oracles.hpp"

#include <arrowing/enumerate.hpp>
#include <arrowing/graph.hpp>

#include <doctest.h>

#include <random>

using namespace arrowing;

namespace {

std::size_t count_degree(const Graph& g, std::size_t d)
{
    std::size_t c = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        c += g.degree(v) == d;
    return c;
}

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const ArrowingError& e) {
        return e.code();
    }
    FAIL("expected an ArrowingError");
    return ErrorCode::precondition;
}

} // namespace

TEST_CASE("families have the expected sizes")
{
    auto k4 = complete_graph(4);
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);

    auto tk3 = tailed_complete(3);
    CHECK(tk3.vertex_count() == 4);
    CHECK(tk3.edge_count() == 4);
    CHECK(count_degree(tk3, 1) == 1);

    auto j4 = complete_minus_edge(4);
    CHECK(j4.vertex_count() == 4);
    CHECK(j4.edge_count() == 5);

    CHECK(star_graph(3).vertex_count() == 4);
    CHECK(path_graph(3).edge_count() == 2);
    CHECK(cycle_graph(5).edge_count() == 5);
}

TEST_CASE("family size preconditions")
{
    CHECK(code_of([] { cycle_graph(2); }) == ErrorCode::size_out_of_range);
    CHECK(code_of([] { tailed_complete(2); }) == ErrorCode::size_out_of_range);
    CHECK(code_of([] { complete_minus_edge(1); }) == ErrorCode::size_out_of_range);
}

TEST_CASE("shorthand names")
{
    CHECK(graph_from_shorthand("k3") == complete_graph(3));
    CHECK(graph_from_shorthand("c4") == cycle_graph(4));
    CHECK(graph_from_shorthand("j4") == complete_minus_edge(4));
    CHECK(graph_from_shorthand("tk4") == tailed_complete(4));
    CHECK(graph_from_shorthand("p3") == path_graph(3));
    CHECK(graph_from_shorthand("k1_3") == star_graph(3));
    CHECK_FALSE(is_shorthand("q7"));
    CHECK(code_of([] { graph_from_shorthand("zz"); }) == ErrorCode::syntax);
}

TEST_CASE("graph construction rejects loops and parallel edges")
{
    CHECK(code_of([] { Graph(3, {{0, 0}}); }) == ErrorCode::invalid_graph);
    CHECK(code_of([] { Graph(3, {{0, 1}, {1, 0}}); }) == ErrorCode::invalid_graph);
    CHECK(code_of([] { Graph(2, {{0, 2}}); }) == ErrorCode::invalid_graph);
}

TEST_CASE("edge ids follow lexicographic order")
{
    Graph g(4, {{2, 3}, {1, 0}, {0, 2}});
    REQUIRE(g.edge_count() == 3);
    CHECK(g.edge(0) == Edge{0, 1});
    CHECK(g.edge(1) == Edge{0, 2});
    CHECK(g.edge(2) == Edge{2, 3});
    CHECK(g.edge_id(3, 2) == 2);
    CHECK_FALSE(g.find_edge(1, 3).has_value());
    CHECK(code_of([&] { g.edge_id(1, 3); }) == ErrorCode::missing_edge);
}

TEST_CASE("epl examples")
{
    auto p4 = path_graph(4);
    CHECK(epl(p4, {0, 1}, {2, 3}) == Linkage::finite(1));
    auto k3 = complete_graph(3);
    CHECK(epl(k3, {0, 1}, {1, 2}).is_infinite());
    auto k4 = complete_graph(4);
    CHECK(epl(k4, {0, 1}, {2, 3}) == Linkage::finite(4));
    CHECK(code_of([&] { epl(p4, {0, 2}, {2, 3}); }) == ErrorCode::missing_edge);
}

TEST_CASE("mepl examples")
{
    CHECK(mepl(star_graph(5)).is_infinite());
    CHECK(mepl(cycle_graph(4)) == Linkage::finite(2));
    CHECK(mepl(complete_minus_edge(4)) == Linkage::finite(3));
    CHECK(mepl(complete_graph(3)).is_infinite());
    CHECK(mepl(path_graph(2)).is_infinite());
    CHECK(code_of([] { mepl(empty_graph(3)); }) == ErrorCode::empty_edge_set);
}

TEST_CASE("epl matches the brute-force definition and stays within bounds")
{
    std::mt19937_64 rng(11);
    for (int round = 0; round < 200; ++round) {
        auto g = random_graph(2 + rng() % 7, 0.5, rng);
        auto edges = g.edges();
        for (std::size_t i = 0; i < edges.size(); ++i)
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                auto value = epl(g, edges[i], edges[j]);
                if (shares_vertex(edges[i], edges[j])) {
                    CHECK(value.is_infinite());
                } else {
                    REQUIRE_FALSE(value.is_infinite());
                    CHECK(value.value() <= 4);
                    CHECK(value.value() == oracle::epl(g, edges[i], edges[j]));
                }
            }
    }
}

TEST_CASE("identify_vertices examples")
{
    Graph two_edges(4, {{0, 1}, {2, 3}});
    auto p3 = identify_vertices(two_edges, 1, 2);
    CHECK(oracle::isomorphic(p3.graph, path_graph(3)));

    Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    auto bowtie = identify_vertices(two_triangles, 0, 3);
    CHECK(bowtie.graph.vertex_count() == 5);
    CHECK(bowtie.graph.edge_count() == 6);

    auto merged = identify_vertices(complete_graph(3), 0, 1);
    CHECK(merged.graph.vertex_count() == 2);
    CHECK(merged.graph.edge_count() == 1);

    CHECK(code_of([] { identify_vertices(complete_graph(3), 1, 1); }) == ErrorCode::identical_vertices);
}

TEST_CASE("identify_vertices keeps graphs simple")
{
    std::mt19937_64 rng(5);
    for (int round = 0; round < 300; ++round) {
        auto g = random_graph(2 + rng() % 7, 0.6, rng);
        Vertex a = rng() % g.vertex_count();
        Vertex b = rng() % g.vertex_count();
        if (a == b)
            continue;
        auto r = identify_vertices(g, a, b);
        CHECK(r.graph.vertex_count() == g.vertex_count() - 1);
        CHECK(r.vertex_map[a] == r.vertex_map[b]);
        for (const auto& e : r.graph.edges())
            CHECK(e.u != e.v);
        std::set<std::pair<Vertex, Vertex>> want;
        for (const auto& e : g.edges())
            if (r.vertex_map[e.u] != r.vertex_map[e.v])
                want.insert(std::minmax(r.vertex_map[e.u], r.vertex_map[e.v]));
        CHECK(want.size() == r.graph.edge_count());
    }
}

TEST_CASE("combine_on_edge sizes")
{
    auto c4 = cycle_graph(4);
    for (const auto& e : c4.edges()) {
        auto a = combine_on_edge(c4, e).graph;
        CHECK(a.vertex_count() == 6);
        CHECK(a.edge_count() == 7);
    }
    auto k4 = combine_on_edge(complete_graph(4), {0, 1}).graph;
    CHECK(k4.vertex_count() == 6);
    CHECK(k4.edge_count() == 11);
    auto j4 = complete_minus_edge(4);
    for (Edge e : {Edge{0, 2}, Edge{2, 3}}) {
        auto a = combine_on_edge(j4, e).graph;
        CHECK(a.vertex_count() == 6);
        CHECK(a.edge_count() == 9);
    }
    std::mt19937_64 rng(3);
    for (int round = 0; round < 200; ++round) {
        auto g = random_graph(2 + rng() % 7, 0.5, rng);
        if (g.edge_count() == 0)
            continue;
        auto e = g.edge(rng() % g.edge_count());
        auto a = combine_on_edge(g, e).graph;
        CHECK(a.vertex_count() == 2 * g.vertex_count() - 2);
        CHECK(a.edge_count() == 2 * g.edge_count() - 1);
    }
    CHECK(code_of([] { combine_on_edge(cycle_graph(4), {0, 2}); }) == ErrorCode::missing_edge);
}

TEST_CASE("k-connectivity examples")
{
    CHECK(is_k_connected(cycle_graph(4), 2));
    CHECK_FALSE(is_k_connected(path_graph(4), 2));
    CHECK(is_k_connected(complete_graph(5), 3));
    CHECK_FALSE(is_k_connected(complete_graph(3), 3));
    CHECK(is_k_connected(path_graph(2), 1));
    CHECK_FALSE(is_k_connected(empty_graph(2), 1));
}

TEST_CASE("k-connectivity agrees with subset enumeration")
{
    std::mt19937_64 rng(19);
    for (int round = 0; round < 300; ++round) {
        auto g = random_graph(1 + rng() % 8, 0.3 + 0.1 * (rng() % 6), rng);
        for (unsigned k = 1; k <= 3; ++k)
            CHECK(is_k_connected(g, k) == oracle::k_connected(g, k));
    }
}

TEST_CASE("edge-list round trip and comments")
{
    auto g = parse_edge_list("# a comment\n3 2\n\n2 1  # trailing\n0 1\n");
    CHECK(g.vertex_count() == 3);
    CHECK(to_edge_list(g) == "3 2\n0 1\n1 2\n");
    CHECK(parse_edge_list(to_edge_list(complete_graph(5))) == complete_graph(5));
    CHECK(code_of([] { parse_edge_list("3 2\n0 1\n"); }) == ErrorCode::syntax);
    CHECK(code_of([] { parse_edge_list("3 1\n0 x\n"); }) == ErrorCode::syntax);
    CHECK(code_of([] { parse_edge_list("3 1\n0 3\n"); }) == ErrorCode::invalid_graph);
    CHECK(code_of([] { parse_edge_list(""); }) == ErrorCode::syntax);
}

TEST_CASE("graph builder glues pieces")
{
    GraphBuilder b;
    auto first = b.add_graph(complete_graph(3));
    std::pair<Vertex, Vertex> glue[] = {{0, first[2]}};
    auto second = b.add_graph(complete_graph(3), glue);
    auto g = b.build();
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 6);
    CHECK(second[0] == first[2]);
}
