#include "tilepot/scenario.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tilepot {

ScenarioReport check_scenario(const Pot& pot, const MultiGraph& g, int level, long budget) {
    if (level < 1 || level > 3) throw std::invalid_argument("scenario level must be 1, 2 or 3");
    ScenarioReport rep;
    rep.level = level;

    RealizationResult r1 = find_realization(pot, g, budget);
    rep.nodes = r1.nodes;
    if (r1.status == SearchStatus::BudgetExceeded) {
        rep.status = ScenarioReport::Status::Indeterminate;
        rep.note = "realization search exceeded the budget";
        return rep;
    }
    if (r1.status == SearchStatus::NotFound) {
        rep.status = ScenarioReport::Status::Fails;
        rep.note = "the pot does not realize the graph";
        return rep;
    }
    rep.certificate = r1.certificate;
    if (level == 1) {
        rep.status = ScenarioReport::Status::Holds;
        return rep;
    }

    const long n = g.vertex_count;
    for (long k = 1; k < n; ++k) {
        auto ws = witnesses_at(pot, k);
        if (!ws.empty()) {
            rep.status = ScenarioReport::Status::Fails;
            rep.smaller_witness = ws.front();
            rep.note = "a complete assembly of smaller order exists";
            return rep;
        }
    }
    if (level == 2) {
        rep.status = ScenarioReport::Status::Holds;
        return rep;
    }

    // Level 3: nothing smaller (checked above) means every same-order
    // assembly is connected, so the connected scan is complete.
    SameOrderScan scan = scan_same_order(pot, g, budget - rep.nodes);
    rep.nodes += scan.nodes;
    if (scan.status == SearchStatus::BudgetExceeded) {
        rep.status = ScenarioReport::Status::Indeterminate;
        rep.note = "same-order enumeration exceeded the budget";
        return rep;
    }
    if (scan.counterexample) {
        rep.status = ScenarioReport::Status::Fails;
        rep.other_graph = scan.counterexample->graph;
        rep.other_certificate = scan.counterexample->certificate;
        rep.note = "a non-isomorphic graph of the same order is realizable";
        return rep;
    }
    rep.status = ScenarioReport::Status::Holds;
    return rep;
}

std::pair<int, int> t1_bounds(const MultiGraph& g) {
    if (g.vertex_count == 0) throw std::invalid_argument("empty graph");
    ValencyStats s = valency_stats(g);
    return {s.av, s.ev + 2 * s.ov};
}

namespace {

std::vector<std::string> make_names(int s) {
    std::vector<std::string> names;
    for (int i = 0; i < s; ++i) {
        if (i < 26)
            names.emplace_back(1, static_cast<char>('a' + i));
        else
            names.push_back("s" + std::to_string(i));
    }
    return names;
}

std::string serialize_tiles(const std::vector<Tile>& tiles) {
    std::string out;
    for (const Tile& t : tiles) {
        for (CohesiveEnd e : t.ends) {
            out += static_cast<char>('0' + e.symbol);
            out += e.hatted ? '^' : '.';
        }
        out += ';';
    }
    return out;
}

std::vector<Tile> apply_relabel(const std::vector<Tile>& tiles, const std::vector<int>& perm,
                                unsigned flips) {
    std::vector<Tile> out = tiles;
    for (Tile& t : out) {
        for (CohesiveEnd& e : t.ends) {
            const bool flip = (flips >> e.symbol) & 1u;
            e.symbol = perm[e.symbol];
            e.hatted ^= flip;
        }
        t.canonicalize();
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Deduplication key for a tile set over s symbols: the minimum
/// serialization over all symbol permutations and per-symbol hat flips
/// when s is small, else a deterministic first-use relabeling (a
/// heuristic key; imperfect deduplication only costs time).
std::string pot_key(std::vector<Tile> tiles, int s) {
    std::sort(tiles.begin(), tiles.end());
    if (s <= 4) {
        std::vector<int> perm(s);
        std::iota(perm.begin(), perm.end(), 0);
        std::string best;
        do {
            for (unsigned flips = 0; flips < (1u << s); ++flips) {
                std::string key = serialize_tiles(apply_relabel(tiles, perm, flips));
                if (best.empty() || key < best) best = std::move(key);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }
    std::vector<int> rename(s, -1);
    std::vector<char> flip(s, 0);
    std::vector<char> seen(s, 0);
    int next = 0;
    for (const Tile& t : tiles)
        for (CohesiveEnd e : t.ends) {
            if (!seen[e.symbol]) {
                seen[e.symbol] = 1;
                rename[e.symbol] = next++;
                flip[e.symbol] = e.hatted;
            }
        }
    std::vector<Tile> out = tiles;
    for (Tile& t : out) {
        for (CohesiveEnd& e : t.ends) {
            e.hatted ^= static_cast<bool>(flip[e.symbol]);
            e.symbol = rename[e.symbol];
        }
        t.canonicalize();
    }
    std::sort(out.begin(), out.end());
    return serialize_tiles(out);
}

bool is_orbit_min(const std::vector<Tile>& sorted_tiles, int s) {
    const std::string self = serialize_tiles(sorted_tiles);
    std::vector<int> perm(s);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (unsigned flips = 0; flips < (1u << s); ++flips) {
            if (serialize_tiles(apply_relabel(sorted_tiles, perm, flips)) < self) return false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

std::vector<Tile> tile_universe(const std::vector<int>& arities, int s) {
    std::vector<Tile> out;
    const int types = 2 * s;
    Tile cur;
    auto rec = [&](auto&& self, int remaining, int min_type) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int t = min_type; t < types; ++t) {
            cur.ends.push_back({t / 2, t % 2 == 1});
            self(self, remaining - 1, t);
            cur.ends.pop_back();
        }
    };
    for (int d : arities) rec(rec, d, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Closure plus full symbol usage: every one of the s symbols occurs,
/// and each occurring polarity has its complement somewhere.
bool closed_over(const std::vector<Tile>& tiles, int s) {
    std::vector<char> present(2 * s, 0);
    for (const Tile& t : tiles)
        for (CohesiveEnd e : t.ends) present[e.symbol * 2 + (e.hatted ? 1 : 0)] = 1;
    for (int i = 0; i < s; ++i)
        if (!(present[2 * i] && present[2 * i + 1])) return false;
    return true;
}

struct CellOutcome {
    bool cleared = true;  // exhausted with no indeterminate verdicts
    std::optional<Pot> found;
    long checked = 0;
    long nodes = 0;
};

CellOutcome search_cell(const MultiGraph& g, const std::vector<int>& arities, int tiles,
                        int symbols, int level, long budget) {
    CellOutcome out;
    const std::vector<Tile> universe = tile_universe(arities, symbols);
    const std::vector<std::string> names = make_names(symbols);
    std::vector<Tile> chosen;
    auto rec = [&](auto&& self, int start) -> bool {
        if (out.nodes >= budget) {
            out.cleared = false;
            return false;
        }
        if (static_cast<int>(chosen.size()) == tiles) {
            ++out.nodes;
            if (!closed_over(chosen, symbols)) return false;
            if (!is_orbit_min(chosen, symbols)) return false;
            ++out.checked;
            Pot pot(names, chosen);
            ScenarioReport rep = check_scenario(pot, g, level, budget - out.nodes);
            out.nodes += rep.nodes;
            if (rep.status == ScenarioReport::Status::Holds) {
                out.found = std::move(pot);
                return true;
            }
            if (rep.status == ScenarioReport::Status::Indeterminate) out.cleared = false;
            return false;
        }
        for (int i = start; i < static_cast<int>(universe.size()); ++i) {
            chosen.push_back(universe[i]);
            if (self(self, i + 1)) return true;
            chosen.pop_back();
            if (out.nodes >= budget) {
                out.cleared = false;
                return false;
            }
        }
        return false;
    };
    rec(rec, 0);
    return out;
}

}  // namespace

OptimaResult search_optimum(const MultiGraph& g, OptimaResult::Quantity quantity, int level,
                            SearchLimits limits) {
    OptimaResult res;
    res.quantity = quantity;
    res.level = level;

    std::vector<int> arities = g.degree_sequence();
    arities.erase(std::unique(arities.begin(), arities.end()), arities.end());
    if (!arities.empty() && arities.front() == 0) {
        res.note = "isolated vertices admit no tile";
        return res;
    }

    const bool by_tiles = quantity == OptimaResult::Quantity::Tiles;
    const int outer_max = by_tiles ? limits.max_tiles : limits.max_bonds;
    const int inner_max = by_tiles ? limits.max_bonds : limits.max_tiles;
    long used = 0;
    int cleared_upto = 0;  // outer values fully exhausted without a hit
    for (int outer = 1; outer <= outer_max && !res.witness; ++outer) {
        bool outer_cleared = true;
        for (int inner = 1; inner <= inner_max; ++inner) {
            const int tiles = by_tiles ? outer : inner;
            const int symbols = by_tiles ? inner : outer;
            if (symbols > tiles * *std::max_element(arities.begin(), arities.end())) continue;
            CellOutcome cell =
                search_cell(g, arities, tiles, symbols, level, limits.budget - used);
            used += cell.nodes;
            res.pots_checked += cell.checked;
            if (cell.found) {
                res.witness = std::move(cell.found);
                res.hi = outer;
                break;
            }
            if (!cell.cleared) outer_cleared = false;
            if (used >= limits.budget) break;
        }
        if (res.witness) {
            res.exact = cleared_upto == outer - 1;
            break;
        }
        if (outer_cleared)
            cleared_upto = (cleared_upto == outer - 1) ? outer : cleared_upto;
        if (used >= limits.budget) {
            res.note = "budget exhausted";
            break;
        }
    }
    res.lo = cleared_upto + 1;
    if (res.witness && res.exact) res.lo = res.hi;
    if (!res.witness && res.note.empty())
        res.note = "no pot found within the limits";
    if (res.witness && !res.exact && res.note.empty())
        res.note = "witness found; smaller space not fully exhausted";
    if (res.exact && res.note.empty())
        res.note = "minimal within max_" + std::string(by_tiles ? "bonds" : "tiles") +
                   " symbols per tile count";
    return res;
}

DesignSearchResult scenario_pots_from_designs(const MultiGraph& g, int level, int max_symbols,
                                              long budget) {
    DesignSearchResult res;
    const int m = g.edge_count();
    const int n = g.vertex_count;
    if (max_symbols < 1) throw std::invalid_argument("need at least one symbol");

    std::vector<int> cls(m, 0), ori(m, 0);
    std::map<std::string, bool> verdict;  // pot key -> passed
    long used = 0;

    auto emit = [&](int symbols) {
        ++res.designs;
        if (++used > budget) {
            res.status = SearchStatus::BudgetExceeded;
            return false;
        }
        std::vector<Tile> tiles(n);
        for (int e = 0; e < m; ++e) {
            const auto& [u, v] = g.edges[e];
            const CohesiveEnd plain{cls[e], false}, hat{cls[e], true};
            if (ori[e] == 0) {
                tiles[u].ends.push_back(plain);
                tiles[v].ends.push_back(hat);
            } else {
                tiles[u].ends.push_back(hat);
                tiles[v].ends.push_back(plain);
            }
        }
        for (Tile& t : tiles) t.canonicalize();
        std::sort(tiles.begin(), tiles.end());
        tiles.erase(std::unique(tiles.begin(), tiles.end()), tiles.end());

        std::string key = pot_key(tiles, symbols);
        auto it = verdict.find(key);
        if (it != verdict.end()) return true;
        ++res.checks;
        Pot pot(make_names(symbols), tiles);
        ScenarioReport rep = check_scenario(pot, g, level, budget - used);
        used += rep.nodes;
        if (rep.status == ScenarioReport::Status::Indeterminate) {
            res.status = SearchStatus::BudgetExceeded;
            return false;
        }
        const bool pass = rep.status == ScenarioReport::Status::Holds;
        verdict.emplace(std::move(key), pass);
        if (pass) res.pots.push_back(std::move(pot));
        if (used > budget) {
            res.status = SearchStatus::BudgetExceeded;
            return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int e, int usedSymbols) -> bool {
        if (e == m) return emit(usedSymbols);
        const auto& [u, v] = g.edges[e];
        const bool loop = u == v;
        const int top = std::min(usedSymbols, max_symbols - 1);
        for (int c = 0; c <= top; ++c) {
            cls[e] = c;
            const bool fresh = c == usedSymbols;
            // A per-symbol hat flip mirrors every orientation in a class,
            // so the first edge of each class keeps orientation 0.
            const int orientations = (fresh || loop) ? 1 : 2;
            for (int o = 0; o < orientations; ++o) {
                ori[e] = o;
                if (!self(self, e + 1, usedSymbols + (fresh ? 1 : 0))) return false;
            }
        }
        return true;
    };

    if (m > 0) rec(rec, 0, 0);
    std::sort(res.pots.begin(), res.pots.end(), [](const Pot& a, const Pot& b) {
        return std::make_tuple(a.tile_count(), a.symbol_count(), a.render()) <
               std::make_tuple(b.tile_count(), b.symbol_count(), b.render());
    });
    return res;
}

const std::vector<RegistryEntry>& results_registry() {
    static const std::vector<RegistryEntry> table = [] {
        std::vector<RegistryEntry> t;
        auto add = [&](std::string family, std::vector<int> dims, char q, int level,
                       std::string rel, int value, int hi, std::string pot, std::string verify,
                       std::string note) {
            t.push_back({std::move(family), std::move(dims), q, level, std::move(rel), value, hi,
                         std::move(pot), std::move(verify), std::move(note)});
        };

        // Tetrahedron (K4).
        add("tetrahedron", {}, 'B', 1, "=", 1, -1, "", "search", "");
        add("tetrahedron", {}, 'T', 1, "=", 2, -1, "", "search", "");
        add("tetrahedron", {}, 'B', 2, "=", 1, -1, "", "search", "");
        add("tetrahedron", {}, 'T', 2, "=", 2, -1, "", "search", "");
        add("tetrahedron", {}, 'B', 3, "=", 3, -1, "", "search", "");
        add("tetrahedron", {}, 'T', 3, "=", 4, -1, "", "search", "");

        // Hexahedron (cube).
        add("hexahedron", {}, 'B', 1, "=", 1, -1, "a,a,^a; a,^a,^a", "witness", "via bond collapse");
        add("hexahedron", {}, 'T', 1, "=", 2, -1, "a,a,^a; a,^a,^a", "search", "");
        add("hexahedron", {}, 'B', 2, "=", 2, -1, "a,b,b; a,a,^b; a,^a,^a", "witness",
            "the printed spectrum for this pot misstates the unique point; exact solve gives "
            "<1,2,5>/8 at order 8");
        add("hexahedron", {}, 'T', 2, "=", 3, -1, "a,b,b; a,a,^b; a,^a,^a", "witness",
            "both minima attained simultaneously by this pot");
        add("hexahedron", {}, 'B', 3, "=", 5, -1,
            "a,a,a; e,e,e; ^a,b,b; ^b,c,c; ^b,d,d; ^a,^c,^e; ^c,^d,^e; ^a,^d,^e", "witness",
            "lower bound inherited; conjectured that no pot attains T3 and B3 simultaneously");
        add("hexahedron", {}, 'T', 3, "=", 6, -1,
            "a,b,c; ^a,^a,^e; d,e,f; ^b,^d,^d; ^c,^c,^e; ^b,^f,^f", "witness",
            "lower bound inherited");

        // Octahedron.
        add("octahedron", {}, 'B', 1, "=", 1, -1, "a,a,^a,^a", "witness", "");
        add("octahedron", {}, 'T', 1, "=", 1, -1, "a,a,^a,^a", "search", "");
        add("octahedron", {}, 'B', 2, "=", 2, -1, "", "claim", "");
        add("octahedron", {}, 'T', 2, "=", 3, -1, "", "claim", "");
        add("octahedron", {}, 'B', 3, "=", 4, -1, "", "claim", "");
        add("octahedron", {}, 'T', 3, "=", 5, -1, "", "claim", "");

        // Icosahedron.
        add("icosahedron", {}, 'B', 1, "=", 1, -1, "a,a,a,^a,^a; a,a,^a,^a,^a", "witness", "");
        add("icosahedron", {}, 'T', 1, "=", 2, -1, "a,a,a,^a,^a; a,a,^a,^a,^a", "search", "");
        add("icosahedron", {}, 'B', 2, "=", 2, -1, "", "claim", "");
        add("icosahedron", {}, 'T', 2, "=", 3, -1, "", "claim", "");
        add("icosahedron", {}, 'B', 3, "=", 9, -1, "", "claim", "");
        add("icosahedron", {}, 'T', 3, "=", 12, -1, "", "claim", "");

        // Dodecahedron.
        add("dodecahedron", {}, 'B', 1, "=", 1, -1, "a,a,^a; a,^a,^a", "witness", "");
        add("dodecahedron", {}, 'T', 1, "=", 2, -1, "a,a,^a; a,^a,^a", "search", "");
        add("dodecahedron", {}, 'B', 2, "<=", 4, -1, "", "claim", "");
        add("dodecahedron", {}, 'T', 2, "<=", 6, -1, "", "claim", "");
        add("dodecahedron", {}, 'B', 3, ">=", 10, -1, "", "claim", "");
        add("dodecahedron", {}, 'T', 3, "=", 20, -1, "", "claim", "");

        // Square lattices. T1 depends on the dimensions.
        add("square_lattice", {2, 4}, 'T', 1, "=", 3, -1, "a,^a; a,a,^a; a,^a,^a", "search",
            "2 x n case");
        add("square_lattice", {3, 3}, 'T', 1, "=", 3, -1, "", "claim", "3x3, 3x5 and 4x4 case");
        add("square_lattice", {5, 5}, 'T', 1, "=", 4, -1, "a,^a; a,^a,^a; a,a,^a; a,a,^a,^a",
            "witness", "general m,n > 2 case");
        add("square_lattice", {2, 3}, 'B', 2, "=", 2, -1, "a,b; a,^b; ^a,^a,b; ^a,^a,^b",
            "witness", "");
        add("square_lattice", {2, 3}, 'T', 2, "=", 4, -1, "a,b; a,^b; ^a,^a,b; ^a,^a,^b",
            "witness", "");
        add("square_lattice", {2, 3}, 'B', 3, "=", 3, -1, "", "search", "");
        add("square_lattice", {2, 3}, 'T', 3, "=", 4, -1, "", "search", "");

        // Triangle lattices.
        add("triangle_lattice", {2, 3}, 'T', 1, "in", 4, 5, "", "claim",
            "holds for every triangle lattice");
        add("triangle_lattice", {2, 3}, 'B', 3, "=", 3, -1, "", "search",
            "not attainable simultaneously with T3 = 4");
        add("triangle_lattice", {2, 3}, 'T', 3, "=", 4, -1, "", "search",
            "not attainable simultaneously with B3 = 3");

        // Lattice tubes.
        add("square_tube", {4, 5}, 'B', 1, "=", 1, -1, "a,a,^a; a,^a,^a; a,a,^a,^a", "witness",
            "");
        add("square_tube", {4, 5}, 'T', 1, "=", 3, -1, "a,a,^a; a,^a,^a; a,a,^a,^a", "search",
            "holds for every square lattice tube");
        add("triangle_tube", {2, 4}, 'T', 1, "=", 1, -1, "a,a,^a,^a", "search",
            "the 2 x n tube is 4-regular");
        add("triangle_tube", {3, 4}, 'T', 1, "=", 2, -1, "a,a,^a,^a; a,a,a,^a,^a,^a", "search",
            "m >= 3 case");
        return t;
    }();
    return table;
}

}  // namespace tilepot
