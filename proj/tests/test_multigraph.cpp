#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include <nlohmann/json.hpp>

#include "tilepot/multigraph.hpp"

using namespace tilepot;

namespace {

MultiGraph relabel(const MultiGraph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges) e.push_back({perm[u], perm[v]});
    return MultiGraph(g.vertex_count, std::move(e));
}

}  // namespace

TEST_CASE("edge normalization and degree") {
    MultiGraph g(3, {{2, 1}, {0, 0}, {1, 2}, {0, 1}});
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 2}, {1, 2}});
    CHECK(g.degree(0) == 3);  // loop counts twice
    CHECK(g.degree(1) == 3);
    CHECK(g.degree(2) == 2);
    CHECK(g.degree_sequence() == std::vector<int>{2, 3, 3});
}

TEST_CASE("connectivity ignores loops") {
    CHECK(MultiGraph(2, {{0, 1}}).connected());
    CHECK_FALSE(MultiGraph(2, {{0, 0}, {1, 1}}).connected());
    CHECK(MultiGraph(1, {{0, 0}}).connected());
    CHECK(MultiGraph(0, {}).connected());
}

TEST_CASE("platonic solid generators") {
    MultiGraph tet = generate(GraphFamily::Tetrahedron, {});
    CHECK(tet.vertex_count == 4);
    CHECK(tet.edge_count() == 6);

    MultiGraph cube = generate(GraphFamily::Hexahedron, {});
    CHECK(cube.vertex_count == 8);
    CHECK(cube.edge_count() == 12);
    for (int v = 0; v < 8; ++v) CHECK(cube.degree(v) == 3);
    CHECK(cube.connected());

    MultiGraph oct = generate(GraphFamily::Octahedron, {});
    CHECK(oct.vertex_count == 6);
    CHECK(oct.edge_count() == 12);
    for (int v = 0; v < 6; ++v) CHECK(oct.degree(v) == 4);

    MultiGraph ico = generate(GraphFamily::Icosahedron, {});
    CHECK(ico.vertex_count == 12);
    CHECK(ico.edge_count() == 30);
    for (int v = 0; v < 12; ++v) CHECK(ico.degree(v) == 5);
    CHECK(ico.connected());

    MultiGraph dod = generate(GraphFamily::Dodecahedron, {});
    CHECK(dod.vertex_count == 20);
    CHECK(dod.edge_count() == 30);
    for (int v = 0; v < 20; ++v) CHECK(dod.degree(v) == 3);
    CHECK(dod.connected());
}

TEST_CASE("complete and cycle") {
    CHECK(generate(GraphFamily::Complete, {5}).edge_count() == 10);
    CHECK(isomorphic(generate(GraphFamily::Complete, {4}),
                     generate(GraphFamily::Tetrahedron, {})));
    MultiGraph c6 = generate(GraphFamily::Cycle, {6});
    CHECK(c6.edge_count() == 6);
    CHECK(c6.degree_sequence() == std::vector<int>(6, 2));
}

TEST_CASE("square lattice") {
    MultiGraph g = generate(GraphFamily::SquareLattice, {2, 3});
    CHECK(g.vertex_count == 6);
    CHECK(g.edge_count() == 7);  // 2*2 row edges + 3 column edges
    CHECK(g.degree_sequence() == std::vector<int>{2, 2, 2, 2, 3, 3});
    CHECK(g.connected());

    MultiGraph h = generate(GraphFamily::SquareLattice, {4, 4});
    CHECK(h.vertex_count == 16);
    CHECK(h.edge_count() == 24);
}

TEST_CASE("triangle lattice adds one diagonal per cell") {
    MultiGraph g = generate(GraphFamily::TriangleLattice, {2, 3});
    CHECK(g.vertex_count == 6);
    CHECK(g.edge_count() == 9);
    CHECK(g.degree_sequence() == std::vector<int>{2, 2, 3, 3, 4, 4});
    CHECK(g.connected());

    MultiGraph h = generate(GraphFamily::TriangleLattice, {3, 4});
    CHECK(h.vertex_count == 12);
    CHECK(h.edge_count() == 17 + 6);  // lattice edges + 6 diagonals
}

TEST_CASE("tubes identify the boundary columns") {
    // m x n tube: m rows of (n-1)-cycles plus the column rungs.
    MultiGraph sq = generate(GraphFamily::SquareTube, {4, 5});
    CHECK(sq.vertex_count == 16);
    CHECK(sq.edge_count() == 16 + 12);  // 4 cycles of length 4, 3*4 rungs
    CHECK(sq.connected());

    MultiGraph tri = generate(GraphFamily::TriangleTube, {2, 4});
    CHECK(tri.vertex_count == 6);
    for (int v = 0; v < tri.vertex_count; ++v) CHECK(tri.degree(v) == 4);

    CHECK_THROWS(generate(GraphFamily::SquareTube, {2, 3}));
    CHECK_THROWS(generate(GraphFamily::SquareLattice, {1, 4}));
    CHECK_THROWS(generate(GraphFamily::Complete, {}));
}

TEST_CASE("family_from_name") {
    CHECK(family_from_name("cube") == GraphFamily::Hexahedron);
    CHECK(family_from_name("hexahedron") == GraphFamily::Hexahedron);
    CHECK(family_from_name("triangle_lattice") == GraphFamily::TriangleLattice);
    CHECK_FALSE(family_from_name("nope").has_value());
}

TEST_CASE("valency stats") {
    ValencyStats s = valency_stats(generate(GraphFamily::TriangleLattice, {2, 3}));
    CHECK(s.av == 3);  // degrees {2, 3, 4}
    CHECK(s.ov == 1);
    CHECK(s.ev == 2);
    ValencyStats t = valency_stats(generate(GraphFamily::Octahedron, {}));
    CHECK(t.av == 1);
    CHECK(t.ov == 0);
    CHECK(t.ev == 1);
}

TEST_CASE("json round trip") {
    MultiGraph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 0}});
    CHECK(MultiGraph::from_json(g.to_json()) == g);
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937 rng(12345);
    std::vector<MultiGraph> pool = {
        generate(GraphFamily::Hexahedron, {}),
        generate(GraphFamily::TriangleLattice, {2, 3}),
        generate(GraphFamily::SquareTube, {3, 4}),
        MultiGraph(5, {{0, 0}, {0, 1}, {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 4}}),
    };
    for (const MultiGraph& g : pool) {
        std::string base = canonical_form(g);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<int> perm(g.vertex_count);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            MultiGraph h = relabel(g, perm);
            CHECK(canonical_form(h) == base);
            CHECK(isomorphic(g, h));
        }
    }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
    MultiGraph c6 = generate(GraphFamily::Cycle, {6});
    MultiGraph two_c3(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(canonical_form(c6) != canonical_form(two_c3));
    CHECK_FALSE(isomorphic(c6, two_c3));

    // Same degree sequence, different multiplicity structure.
    MultiGraph a(2, {{0, 1}, {0, 1}});
    MultiGraph b(2, {{0, 0}, {1, 1}});
    CHECK(canonical_form(a) != canonical_form(b));
}

TEST_CASE("isomorphism witness is a valid map") {
    MultiGraph g = generate(GraphFamily::Octahedron, {});
    std::vector<int> perm = {3, 5, 0, 2, 4, 1};
    MultiGraph h = relabel(g, perm);
    auto w = isomorphism(g, h);
    REQUIRE(w.has_value());
    CHECK(relabel(g, *w) == h);
}
