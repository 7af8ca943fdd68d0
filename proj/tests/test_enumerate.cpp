#include "oracles.hpp"

#include <arrowing/enumerate.hpp>

#include <doctest.h>

#include <random>

using namespace arrowing;

TEST_CASE("number of graphs up to isomorphism")
{
    std::vector<std::size_t> all = {1, 1, 2, 4, 11, 34, 156, 1044};
    for (std::size_t n = 0; n < all.size(); ++n)
        CHECK(nonisomorphic_graphs(n).size() == all[n]);
}

TEST_CASE("number of connected and 2-connected graphs")
{
    std::vector<std::size_t> connected = {0, 1, 1, 2, 6, 21, 112, 853};
    std::vector<std::size_t> biconnected = {0, 0, 0, 1, 3, 10, 56, 468};
    for (std::size_t n = 1; n < connected.size(); ++n) {
        std::size_t c = 0, b = 0;
        for (const auto& g : nonisomorphic_graphs(n)) {
            c += is_connected(g);
            b += is_k_connected(g, 2);
        }
        CHECK(c == connected[n]);
        CHECK(b == biconnected[n]);
    }
}

TEST_CASE("canonical form is invariant under relabelling")
{
    std::mt19937_64 rng(31);
    for (int round = 0; round < 300; ++round) {
        auto g = random_graph(1 + rng() % 9, 0.45, rng);
        std::vector<Vertex> perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto h = relabel(g, perm);
        CHECK(canonical_form(g) == canonical_form(h));
        CHECK(oracle::isomorphic(canonical_graph(g), g));
    }
}

TEST_CASE("canonical form separates non-isomorphic graphs")
{
    std::mt19937_64 rng(37);
    for (int round = 0; round < 300; ++round) {
        std::size_t n = 3 + rng() % 5;
        auto a = random_graph(n, 0.5, rng);
        auto b = random_graph(n, 0.5, rng);
        CHECK(is_isomorphic(a, b) == oracle::isomorphic(a, b));
    }
}

TEST_CASE("random graphs are reproducible from the seed")
{
    std::mt19937_64 a(99), b(99);
    CHECK(random_graph(10, 0.4, a) == random_graph(10, 0.4, b));
}
