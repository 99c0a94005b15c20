#include <doctest.h>

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tilepot/realization.hpp"
#include "tilepot/scenario.hpp"

using namespace tilepot;

namespace {

// Independent oracle for enumeration tests: every multigraph on n
// vertices with exactly m edges (loops and parallels included), one
// canonical form per class, filtered by a predicate.
std::set<std::string> brute_classes(int n, int m, bool connected_required,
                                    const std::function<bool(const MultiGraph&)>& keep) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u; v < n; ++v) pairs.push_back({u, v});
    std::set<std::string> out;
    std::vector<std::pair<int, int>> edges;
    auto rec = [&](auto&& self, size_t i, int left) -> void {
        if (left == 0) {
            MultiGraph g(n, edges);
            if (connected_required && !g.connected()) return;
            if (keep(g)) out.insert(canonical_form(g));
            return;
        }
        if (i == pairs.size()) return;
        self(self, i + 1, left);
        edges.push_back(pairs[i]);
        self(self, i, left - 1);
        edges.pop_back();
    };
    rec(rec, 0, m);
    return out;
}

}  // namespace

TEST_CASE("cube pot realizes the cube") {
    Pot p = Pot::parse("a,b,c; ^a,^a,^e; d,e,f; ^b,^d,^d; ^c,^c,^e; ^b,^f,^f");
    MultiGraph cube = generate(GraphFamily::Hexahedron, {});
    RealizationResult r = find_realization(p, cube);
    REQUIRE(r.status == SearchStatus::Found);
    const RealizationCertificate& c = *r.certificate;
    CHECK(c.tile_of.size() == 8);
    CHECK(c.design.labels.size() == 12);
    CHECK(c.counts == std::vector<long>{2, 1, 2, 1, 1, 1});
    CHECK(verify_design(cube, c.design, p));
    Pot used = assembling_pot(cube, c.design);
    for (const Tile& t : used.tiles()) {
        bool member = false;
        for (const Tile& pt : p.tiles()) member = member || pt == t;
        CHECK(member);
    }
}

TEST_CASE("single loop tile realizes one vertex with a loop") {
    Pot p = Pot::parse("a,^a");
    MultiGraph loop(1, {{0, 0}});
    CHECK(find_realization(p, loop).status == SearchStatus::Found);
    // Every arm of a placed tile must be used, so the 2-armed tile
    // cannot sit on a degree-1 vertex; the doubled edge works.
    CHECK(find_realization(p, MultiGraph(2, {{0, 1}})).status == SearchStatus::NotFound);
    CHECK(find_realization(p, MultiGraph(2, {{0, 1}, {0, 1}})).status == SearchStatus::Found);
}

TEST_CASE("unmixed triple tiles cannot realize K4") {
    // Every edge must pair an unhatted arm with a hatted one, so the
    // tile assignment is a proper 2-coloring; K4 has odd cycles.
    Pot p = Pot::parse("a,a,a; ^a,^a,^a");
    MultiGraph k4 = generate(GraphFamily::Tetrahedron, {});
    CHECK(find_realization(p, k4).status == SearchStatus::NotFound);
    // Sanity for the oracle: the 4-cycle is bipartite and realizable.
    Pot p2 = Pot::parse("a,a; ^a,^a");
    CHECK(find_realization(p2, generate(GraphFamily::Cycle, {4})).status == SearchStatus::Found);
    CHECK(find_realization(p2, generate(GraphFamily::Cycle, {5})).status ==
          SearchStatus::NotFound);
}

TEST_CASE("verify_design rejections") {
    Pot p = Pot::parse("a,^a");
    MultiGraph g(2, {{0, 1}, {0, 1}});
    AssemblyDesign ok{{"a"},
                      {{CohesiveEnd{0, false}, CohesiveEnd{0, true}},
                       {CohesiveEnd{0, true}, CohesiveEnd{0, false}}}};
    CHECK(verify_design(g, ok, p));

    AssemblyDesign wrong_count{{"a"}, {{CohesiveEnd{0, false}, CohesiveEnd{0, true}}}};
    CHECK_THROWS_AS(verify_design(g, wrong_count, p), std::invalid_argument);

    AssemblyDesign not_complementary{{"a"},
                                     {{CohesiveEnd{0, false}, CohesiveEnd{0, false}},
                                      {CohesiveEnd{0, true}, CohesiveEnd{0, true}}}};
    CHECK_FALSE(verify_design(g, not_complementary, p));

    AssemblyDesign unknown_symbol{{"z"},
                                  {{CohesiveEnd{0, false}, CohesiveEnd{0, true}},
                                   {CohesiveEnd{0, true}, CohesiveEnd{0, false}}}};
    CHECK_FALSE(verify_design(g, unknown_symbol, p));

    // Valid labeling whose induced endpoint tiles {a} and {^a} are
    // missing from the smaller pot.
    Pot q = Pot::parse("a; ^a; a,^a");
    MultiGraph path(3, {{0, 1}, {1, 2}});
    AssemblyDesign d{{"a"},
                     {{CohesiveEnd{0, false}, CohesiveEnd{0, true}},
                      {CohesiveEnd{0, false}, CohesiveEnd{0, true}}}};
    CHECK(verify_design(path, d, q));
    CHECK_FALSE(verify_design(path, d, p));
}

TEST_CASE("found certificates always verify and reassemble") {
    std::vector<Pot> pots = {
        Pot::parse("a,b; a,^b; ^a,^a,b; ^a,^a,^b"),
        Pot::parse("a,^a; a,a,^a; ^a"),
        Pot::parse("a,a,^a; ^a,^a,^a"),
    };
    std::vector<MultiGraph> graphs = {
        generate(GraphFamily::Cycle, {4}),
        MultiGraph(3, {{0, 1}, {1, 2}, {0, 2}}),
        MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}),
        MultiGraph(2, {{0, 1}, {0, 1}, {0, 0}}),
        MultiGraph(1, {{0, 0}}),
        generate(GraphFamily::SquareLattice, {2, 3}),
    };
    for (const Pot& p : pots)
        for (const MultiGraph& g : graphs) {
            RealizationResult r = find_realization(p, g);
            if (r.status != SearchStatus::Found) continue;
            CHECK(verify_design(g, r.certificate->design, p));
            Pot sub = assembling_pot(g, r.certificate->design);
            CHECK(counts_balanced(p, r.certificate->counts));
            CHECK(find_realization(sub, g).status == SearchStatus::Found);
        }
}

TEST_CASE("enumeration matches the brute-force membership oracle") {
    struct Case {
        std::string pot;
        int order;
        int edges;
    };
    std::vector<Case> cases = {
        {"a,a,a; ^a,^a,^a", 2, 3},
        {"a,a; ^a,^a; a,^a", 3, 3},
        {"a,^a", 4, 4},
        {"a,b; a,^b; ^a,^a,b; ^a,^a,^b", 6, 7},
    };
    for (const Case& c : cases) {
        Pot p = Pot::parse(c.pot);
        for (bool conn : {true, false}) {
            EnumerationResult res = enumerate_realizable(p, c.order, conn);
            REQUIRE(res.status == SearchStatus::Found);
            std::set<std::string> got;
            for (const auto& entry : res.entries) {
                CHECK(entry.graph.vertex_count == c.order);
                CHECK(verify_design(entry.graph, entry.certificate.design, p));
                got.insert(canonical_form(entry.graph));
            }
            CHECK(got.size() == res.entries.size());
            std::set<std::string> want = brute_classes(c.order, c.edges, conn, [&](const MultiGraph& g) {
                return find_realization(p, g).status == SearchStatus::Found;
            });
            CHECK(got == want);
        }
    }
}

TEST_CASE("enumeration at mixed orders uses every balanced count vector") {
    Pot p = Pot::parse("a,b; a,^b; ^a,^a,b; ^a,^a,^b");
    EnumerationResult res = enumerate_realizable(p, 6);
    REQUIRE(res.status == SearchStatus::Found);
    CHECK(res.explored_counts ==
          std::vector<std::vector<long>>{{1, 3, 2, 0}, {2, 2, 1, 1}, {3, 1, 0, 2}});
    bool lattice_found = false;
    MultiGraph target = generate(GraphFamily::SquareLattice, {2, 3});
    for (const auto& entry : res.entries)
        lattice_found = lattice_found || isomorphic(entry.graph, target);
    CHECK(lattice_found);
}

TEST_CASE("enumerate_for_counts validates its input") {
    Pot p = Pot::parse("a,a,^a; ^a,^a,^a");
    CHECK_THROWS_AS(enumerate_for_counts(p, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_for_counts(p, {3}), std::invalid_argument);
    EnumerationResult res = enumerate_for_counts(p, {3, 1});
    CHECK(res.status == SearchStatus::Found);
    for (const auto& entry : res.entries) CHECK(entry.graph.vertex_count == 4);
    CHECK_FALSE(res.entries.empty());
}

TEST_CASE("swapping partners of same-labeled incident edges preserves the graph class") {
    // If two edges at a shared vertex carry the same bond symbol with
    // the same orientation on the shared side, exchanging their far
    // endpoints leaves the realized graph isomorphic and the design
    // valid.
    Pot p = Pot::parse("a,b,c; ^a,^a,^e; d,e,f; ^b,^d,^d; ^c,^c,^e; ^b,^f,^f");
    MultiGraph cube = generate(GraphFamily::Hexahedron, {});
    RealizationResult r = find_realization(p, cube);
    REQUIRE(r.status == SearchStatus::Found);
    const AssemblyDesign& d = r.certificate->design;

    int swaps_tested = 0;
    for (int e1 = 0; e1 < cube.edge_count(); ++e1)
        for (int e2 = e1 + 1; e2 < cube.edge_count(); ++e2) {
            auto [a1, b1] = cube.edges[e1];
            auto [a2, b2] = cube.edges[e2];
            // Find a shared endpoint and each edge's label on its side.
            struct Side { int shared, far; CohesiveEnd at_shared, at_far; };
            std::optional<Side> s1, s2;
            auto sides = [&](int u, int v, int e, auto& out, int shared) {
                if (u == shared) out = Side{u, v, d.labels[e][0], d.labels[e][1]};
                else if (v == shared) out = Side{v, u, d.labels[e][1], d.labels[e][0]};
            };
            for (int shared : {a1, b1}) {
                if (shared != a2 && shared != b2) continue;
                s1.reset(); s2.reset();
                sides(a1, b1, e1, s1, shared);
                sides(a2, b2, e2, s2, shared);
                if (s1 && s2 && s1->at_shared == s2->at_shared) {
                    std::vector<std::pair<int, int>> edges = cube.edges;
                    edges[e1] = {std::min(s1->shared, s2->far), std::max(s1->shared, s2->far)};
                    edges[e2] = {std::min(s2->shared, s1->far), std::max(s2->shared, s1->far)};
                    MultiGraph swapped(cube.vertex_count, edges);
                    CHECK(isomorphic(cube, swapped));
                    ++swaps_tested;
                }
            }
        }
    // The cube design repeats tile types, so swappable pairs must exist.
    CHECK(swaps_tested > 0);
}
