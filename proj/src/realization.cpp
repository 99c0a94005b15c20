#include "tilepot/realization.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

namespace tilepot {

namespace {

int end_slot(CohesiveEnd e) { return e.symbol * 2 + (e.hatted ? 1 : 0); }
CohesiveEnd slot_end(int s) { return {s / 2, s % 2 == 1}; }

/// Per-vertex end multisets induced by a design, or nullopt when some
/// edge is not complementary. Throws on a structurally malformed design.
std::optional<std::vector<Tile>> induced_tiles(const MultiGraph& g, const AssemblyDesign& d) {
    if (d.labels.size() != g.edges.size())
        throw std::invalid_argument("design labels do not match the edge list");
    const int s = static_cast<int>(d.symbols.size());
    std::vector<Tile> tiles(g.vertex_count);
    for (size_t e = 0; e < g.edges.size(); ++e) {
        const auto& [a, b] = g.edges[e];
        const auto& [ea, eb] = d.labels[e];
        if (ea.symbol < 0 || ea.symbol >= s || eb.symbol < 0 || eb.symbol >= s)
            throw std::invalid_argument("design label uses an unknown symbol");
        if (eb != complement(ea)) return std::nullopt;
        tiles[a].ends.push_back(ea);
        tiles[b].ends.push_back(eb);
    }
    for (Tile& t : tiles) t.canonicalize();
    return tiles;
}

}  // namespace

bool verify_design(const MultiGraph& g, const AssemblyDesign& d, const Pot& pot) {
    auto tiles = induced_tiles(g, d);
    if (!tiles) return false;
    std::vector<int> to_pot(d.symbols.size());
    for (size_t i = 0; i < d.symbols.size(); ++i) to_pot[i] = pot.find_symbol(d.symbols[i]);
    for (Tile& t : *tiles) {
        for (CohesiveEnd& e : t.ends) {
            if (to_pot[e.symbol] < 0) return false;
            e.symbol = to_pot[e.symbol];
        }
        t.canonicalize();
        if (std::find(pot.tiles().begin(), pot.tiles().end(), t) == pot.tiles().end())
            return false;
    }
    return true;
}

Pot assembling_pot(const MultiGraph& g, const AssemblyDesign& d) {
    auto tiles = induced_tiles(g, d);
    if (!tiles) throw std::invalid_argument("design is not complementary");
    return Pot(d.symbols, std::move(*tiles));
}

namespace {

struct RealizationSearch {
    const Pot& pot;
    const MultiGraph& g;
    long budget;
    long nodes = 0;
    bool exceeded = false;

    int n, slot_count;
    std::vector<int> order, pos;
    std::vector<std::vector<int>> back_edges;  // per order position
    std::vector<int> tile_of;
    std::vector<std::vector<int>> remaining;  // per vertex, by end slot
    std::vector<std::array<CohesiveEnd, 2>> labels;

    RealizationSearch(const Pot& p, const MultiGraph& graph, long b)
        : pot(p), g(graph), budget(b), n(graph.vertex_count), slot_count(2 * p.symbol_count()) {
        pos.assign(n, -1);
        back_edges.resize(n);
        tile_of.assign(n, -1);
        remaining.assign(n, std::vector<int>(slot_count, 0));
        labels.resize(g.edges.size());

        std::vector<std::vector<int>> adj(n);
        for (const auto& [u, v] : g.edges)
            if (u != v) {
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
        for (int start = 0; start < n; ++start) {
            if (pos[start] >= 0) continue;
            std::queue<int> q;
            q.push(start);
            pos[start] = static_cast<int>(order.size());
            order.push_back(start);
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (int w : adj[v])
                    if (pos[w] < 0) {
                        pos[w] = static_cast<int>(order.size());
                        order.push_back(w);
                        q.push(w);
                    }
            }
        }
        for (size_t e = 0; e < g.edges.size(); ++e) {
            const auto& [u, v] = g.edges[e];
            back_edges[std::max(pos[u], pos[v])].push_back(static_cast<int>(e));
        }
    }

    bool assign(int i) {
        if (i == n) return true;
        const int v = order[i];
        const int d = g.degree(v);
        for (int t = 0; t < pot.tile_count(); ++t) {
            if (pot.tile(t).arity() != d) continue;
            if (++nodes > budget) {
                exceeded = true;
                return false;
            }
            tile_of[v] = t;
            std::fill(remaining[v].begin(), remaining[v].end(), 0);
            for (CohesiveEnd e : pot.tile(t).ends) ++remaining[v][end_slot(e)];
            if (match_edges(i, 0)) return true;
            if (exceeded) return false;
        }
        tile_of[v] = -1;
        return false;
    }

    bool match_edges(int i, size_t k) {
        if (k == back_edges[i].size()) return assign(i + 1);
        const int v = order[i];
        const int e = back_edges[i][k];
        const auto& [a, b] = g.edges[e];
        const int u = (a == v) ? b : a;  // for a loop, u == v
        const bool loop = (u == v);
        for (int s = 0; s < slot_count; ++s) {
            const CohesiveEnd ev = slot_end(s);
            // For a loop both orientations of a pair are the same edge
            // labeling, so only the unhatted side is tried.
            if (loop && ev.hatted) continue;
            const CohesiveEnd eu = complement(ev);
            if (remaining[v][s] <= 0) continue;
            --remaining[v][s];
            if (remaining[u][end_slot(eu)] <= 0) {
                ++remaining[v][s];
                continue;
            }
            --remaining[u][end_slot(eu)];
            if (++nodes > budget) exceeded = true;
            if (!exceeded) {
                labels[e] = (a == v) ? std::array{ev, eu} : std::array{eu, ev};
                if (match_edges(i, k + 1)) return true;
            }
            ++remaining[u][end_slot(eu)];
            ++remaining[v][s];
            if (exceeded) return false;
        }
        return false;
    }
};

}  // namespace

RealizationResult find_realization(const Pot& pot, const MultiGraph& g, long budget) {
    RealizationSearch search(pot, g, budget);
    RealizationResult res;
    const bool found = search.assign(0);
    res.nodes = search.nodes;
    if (search.exceeded) {
        res.status = SearchStatus::BudgetExceeded;
        return res;
    }
    if (!found) {
        res.status = SearchStatus::NotFound;
        return res;
    }
    res.status = SearchStatus::Found;
    RealizationCertificate cert;
    cert.tile_of = search.tile_of;
    cert.counts.assign(pot.tile_count(), 0);
    for (int t : search.tile_of) ++cert.counts[t];
    cert.design.symbols = pot.symbol_names();
    cert.design.labels = search.labels;
    res.certificate = std::move(cert);
    return res;
}

namespace {

struct EnumSearch {
    const Pot& pot;
    int n;
    bool connected_only;
    long budget;
    long nodes = 0;
    bool exceeded = false;

    std::vector<int> tile_of;
    std::vector<long> counts;
    std::vector<std::vector<CohesiveEnd>> slots;            // per vertex
    std::vector<std::vector<std::pair<int, int>>> partner;  // {-1,-1} = open
    std::vector<int> touched;                               // matched slots per vertex

    std::set<std::string> seen;
    std::vector<EnumerationResult::Entry>& entries;

    // When set, the search aborts at the first graph whose canonical
    // form differs, storing it as a counterexample.
    const std::string* target_canon = nullptr;
    std::optional<EnumerationResult::Entry> counterexample;
    bool stopped = false;

    EnumSearch(const Pot& p, int order, bool conn, long b,
               std::vector<EnumerationResult::Entry>& out)
        : pot(p), n(order), connected_only(conn), budget(b), entries(out) {}

    void load(const std::vector<long>& witness_counts) {
        counts = witness_counts;
        tile_of.clear();
        for (int t = 0; t < pot.tile_count(); ++t)
            for (long c = 0; c < counts[t]; ++c) tile_of.push_back(t);
        slots.assign(n, {});
        partner.assign(n, {});
        touched.assign(n, 0);
        for (int v = 0; v < n; ++v) {
            slots[v] = pot.tile(tile_of[v]).ends;
            partner[v].assign(slots[v].size(), {-1, -1});
        }
    }

    void rec() {
        if (exceeded || stopped) return;
        int fv = -1, fs = -1;
        for (int v = 0; v < n && fv < 0; ++v)
            for (size_t j = 0; j < slots[v].size(); ++j)
                if (partner[v][j].first < 0) {
                    fv = v;
                    fs = static_cast<int>(j);
                    break;
                }
        if (fv < 0) {
            emit();
            return;
        }
        const CohesiveEnd want = complement(slots[fv][fs]);
        for (int u = fv; u < n; ++u) {
            // Untouched vertices of the same tile type are interchangeable
            // partners; keep only the first (the source vertex fv plays a
            // distinct role and never stands in for another vertex).
            if (u != fv && touched[u] == 0) {
                bool shadowed = false;
                for (int w = 0; w < u && !shadowed; ++w)
                    shadowed = (w != fv && touched[w] == 0 && tile_of[w] == tile_of[u]);
                if (shadowed) continue;
            }
            for (size_t j = 0; j < slots[u].size(); ++j) {
                if (partner[u][j].first >= 0 || slots[u][j] != want) continue;
                if (u == fv && static_cast<int>(j) == fs) continue;
                // Identical open slots at one vertex are interchangeable.
                bool dup = false;
                for (size_t j2 = 0; j2 < j && !dup; ++j2)
                    dup = (partner[u][j2].first < 0 && slots[u][j2] == want &&
                           !(u == fv && static_cast<int>(j2) == fs));
                if (dup) continue;
                if (++nodes > budget) {
                    exceeded = true;
                    return;
                }
                partner[fv][fs] = {u, static_cast<int>(j)};
                partner[u][j] = {fv, fs};
                touched[fv]++;
                touched[u]++;
                rec();
                touched[u]--;
                touched[fv]--;
                partner[u][j] = {-1, -1};
                partner[fv][fs] = {-1, -1};
                if (exceeded || stopped) return;
            }
        }
    }

    void emit() {
        std::vector<std::tuple<std::pair<int, int>, std::array<CohesiveEnd, 2>>> tuples;
        for (int v = 0; v < n; ++v)
            for (size_t j = 0; j < slots[v].size(); ++j) {
                const auto [pu, pj] = partner[v][j];
                if (pu < v || (pu == v && pj <= static_cast<int>(j))) continue;
                tuples.emplace_back(std::pair{v, pu}, std::array{slots[v][j], slots[pu][pj]});
            }
        std::sort(tuples.begin(), tuples.end(),
                  [](const auto& x, const auto& y) { return std::get<0>(x) < std::get<0>(y); });
        std::vector<std::pair<int, int>> edges;
        std::vector<std::array<CohesiveEnd, 2>> labels;
        for (auto& [e, lab] : tuples) {
            edges.push_back(e);
            labels.push_back(lab);
        }
        MultiGraph g(n, std::move(edges));
        if (connected_only && !g.connected()) return;
        std::string canon = canonical_form(g);
        if (!seen.insert(canon).second) return;
        RealizationCertificate cert;
        cert.tile_of = tile_of;
        cert.counts = counts;
        cert.design.symbols = pot.symbol_names();
        cert.design.labels = std::move(labels);
        if (target_canon && canon != *target_canon) {
            counterexample = EnumerationResult::Entry{std::move(g), std::move(cert)};
            stopped = true;
            return;
        }
        entries.push_back({std::move(g), std::move(cert)});
    }
};

}  // namespace

SameOrderScan scan_same_order(const Pot& pot, const MultiGraph& g, long budget) {
    SameOrderScan res;
    const long n = g.vertex_count;
    if (n <= 0) return res;
    const std::string canon = canonical_form(g);
    std::vector<EnumerationResult::Entry> sink;
    EnumSearch search(pot, static_cast<int>(n), true, budget, sink);
    search.target_canon = &canon;
    for (const OrderWitness& w : witnesses_at(pot, n)) {
        search.load(w.counts);
        search.rec();
        if (search.stopped || search.exceeded) break;
    }
    res.nodes = search.nodes;
    if (search.counterexample) {
        res.status = SearchStatus::NotFound;  // uniqueness refuted
        res.counterexample = std::move(search.counterexample);
    } else if (search.exceeded) {
        res.status = SearchStatus::BudgetExceeded;
    }
    return res;
}

EnumerationResult enumerate_for_counts(const Pot& pot, const std::vector<long>& counts,
                                       bool connected_only, long budget) {
    if (static_cast<int>(counts.size()) != pot.tile_count())
        throw std::invalid_argument("counts do not match the pot");
    if (!counts_balanced(pot, counts))
        throw std::invalid_argument("counts violate the balance rows");
    long n = 0;
    for (long c : counts) {
        if (c < 0) throw std::invalid_argument("negative count");
        n += c;
    }
    EnumerationResult res;
    if (n == 0) return res;
    EnumSearch search(pot, static_cast<int>(n), connected_only, budget, res.entries);
    search.load(counts);
    search.rec();
    res.nodes = search.nodes;
    if (search.exceeded) {
        res.status = SearchStatus::BudgetExceeded;
        return res;
    }
    res.explored_counts.push_back(counts);
    return res;
}

EnumerationResult enumerate_realizable(const Pot& pot, long n, bool connected_only, long budget) {
    EnumerationResult res;
    if (n <= 0) return res;
    EnumSearch search(pot, static_cast<int>(n), connected_only, budget, res.entries);
    for (const OrderWitness& w : witnesses_at(pot, n)) {
        search.load(w.counts);
        search.rec();
        res.nodes = search.nodes;
        if (search.exceeded) {
            res.status = SearchStatus::BudgetExceeded;
            return res;
        }
        res.explored_counts.push_back(w.counts);
    }
    res.nodes = search.nodes;
    return res;
}

}  // namespace tilepot
