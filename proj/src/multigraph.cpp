#include "tilepot/multigraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace tilepot {

namespace {

std::vector<std::pair<int, int>> normalize(std::vector<std::pair<int, int>> e) {
    for (auto& [u, v] : e)
        if (u > v) std::swap(u, v);
    std::sort(e.begin(), e.end());
    return e;
}

/// Adjacency multiplicity matrix; adj[v][v] counts loops (once each).
std::vector<std::vector<int>> adjacency(const MultiGraph& g) {
    std::vector<std::vector<int>> adj(g.vertex_count, std::vector<int>(g.vertex_count, 0));
    for (auto [u, v] : g.edges) {
        if (u == v) {
            ++adj[u][u];
        } else {
            ++adj[u][v];
            ++adj[v][u];
        }
    }
    return adj;
}

}  // namespace

MultiGraph::MultiGraph(int n, std::vector<std::pair<int, int>> e)
    : vertex_count(n), edges(normalize(std::move(e))) {
    for (auto [u, v] : edges)
        if (u < 0 || v >= n) throw std::invalid_argument("edge endpoint out of range");
}

int MultiGraph::degree(int v) const {
    int d = 0;
    for (auto [a, b] : edges) {
        if (a == v) ++d;
        if (b == v) ++d;
    }
    return d;
}

std::vector<int> MultiGraph::degree_sequence() const {
    std::vector<int> deg(vertex_count, 0);
    for (auto [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    std::sort(deg.begin(), deg.end());
    return deg;
}

bool MultiGraph::connected() const {
    if (vertex_count <= 1) return true;
    std::vector<int> parent(vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : edges)
        if (u != v) parent[find(u)] = find(v);
    int root = find(0);
    for (int v = 1; v < vertex_count; ++v)
        if (find(v) != root) return false;
    return true;
}

MultiGraph MultiGraph::from_json(const nlohmann::json& j) {
    std::vector<std::pair<int, int>> e;
    for (const auto& je : j.at("edges")) e.emplace_back(je.at(0).get<int>(), je.at(1).get<int>());
    return MultiGraph(j.at("vertices").get<int>(), std::move(e));
}

nlohmann::json MultiGraph::to_json() const {
    nlohmann::json je = nlohmann::json::array();
    for (auto [u, v] : edges) je.push_back({u, v});
    return nlohmann::json{{"vertices", vertex_count}, {"edges", std::move(je)}};
}

std::optional<GraphFamily> family_from_name(const std::string& name) {
    static const std::map<std::string, GraphFamily> table = {
        {"complete", GraphFamily::Complete},
        {"cycle", GraphFamily::Cycle},
        {"tetrahedron", GraphFamily::Tetrahedron},
        {"hexahedron", GraphFamily::Hexahedron},
        {"cube", GraphFamily::Hexahedron},
        {"octahedron", GraphFamily::Octahedron},
        {"icosahedron", GraphFamily::Icosahedron},
        {"dodecahedron", GraphFamily::Dodecahedron},
        {"square_lattice", GraphFamily::SquareLattice},
        {"triangle_lattice", GraphFamily::TriangleLattice},
        {"square_tube", GraphFamily::SquareTube},
        {"triangle_tube", GraphFamily::TriangleTube},
    };
    auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

namespace {

MultiGraph lattice(int m, int n, bool diagonals) {
    if (m < 2 || n < 2)
        throw std::invalid_argument("degenerate lattice: need rows >= 2 and cols >= 2");
    std::vector<std::pair<int, int>> e;
    auto at = [n](int i, int j) { return i * n + j; };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            if (j + 1 < n) e.emplace_back(at(i, j), at(i, j + 1));
            if (i + 1 < m) e.emplace_back(at(i, j), at(i + 1, j));
            if (diagonals && i + 1 < m && j + 1 < n) e.emplace_back(at(i, j), at(i + 1, j + 1));
        }
    return MultiGraph(m * n, std::move(e));
}

// Rows wrap into cycles of length n-1: the two boundary columns of the
// m x n lattice are identified.
MultiGraph tube(int m, int n, bool diagonals) {
    if (n < 4) throw std::invalid_argument("degenerate tube: need cols >= 4");
    if (m < 2) throw std::invalid_argument("degenerate tube: need rows >= 2");
    const int c = n - 1;
    std::vector<std::pair<int, int>> e;
    auto at = [c](int i, int j) { return i * c + j; };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < c; ++j) {
            e.emplace_back(at(i, j), at(i, (j + 1) % c));
            if (i + 1 < m) {
                e.emplace_back(at(i, j), at(i + 1, j));
                if (diagonals) e.emplace_back(at(i, j), at(i + 1, (j + 1) % c));
            }
        }
    return MultiGraph(m * c, std::move(e));
}

MultiGraph platonic(GraphFamily f) {
    switch (f) {
        case GraphFamily::Tetrahedron:
            return generate(GraphFamily::Complete, {4});
        case GraphFamily::Hexahedron: {
            // Vertices are the binary coordinates (x,y,z) read as 0..7;
            // edges join vertices differing in one bit.
            std::vector<std::pair<int, int>> e;
            for (int v = 0; v < 8; ++v)
                for (int b : {1, 2, 4})
                    if (!(v & b)) e.emplace_back(v, v | b);
            return MultiGraph(8, std::move(e));
        }
        case GraphFamily::Octahedron: {
            // K_{2,2,2}: antipodal pairs (0,1), (2,3), (4,5).
            std::vector<std::pair<int, int>> e;
            for (int u = 0; u < 6; ++u)
                for (int v = u + 1; v < 6; ++v)
                    if (u / 2 != v / 2) e.emplace_back(u, v);
            return MultiGraph(6, std::move(e));
        }
        case GraphFamily::Icosahedron: {
            // Apex 0, upper pentagon 1..5, lower pentagon 6..10, apex 11.
            std::vector<std::pair<int, int>> e;
            for (int i = 1; i <= 5; ++i) {
                e.emplace_back(0, i);
                e.emplace_back(11, i + 5);
                e.emplace_back(i, i % 5 + 1);
                e.emplace_back(i + 5, i % 5 + 6);
                e.emplace_back(i, i + 5);
                e.emplace_back(i, i % 5 + 6);
            }
            return MultiGraph(12, std::move(e));
        }
        case GraphFamily::Dodecahedron: {
            // LCF notation [10,7,4,-4,-7,10,-4,7,-7,4]^2 on a 20-cycle.
            static const int lcf[10] = {10, 7, 4, -4, -7, 10, -4, 7, -7, 4};
            std::vector<std::pair<int, int>> e;
            for (int v = 0; v < 20; ++v) {
                e.emplace_back(v, (v + 1) % 20);
                int w = ((v + lcf[v % 10]) % 20 + 20) % 20;
                if (v < w) e.emplace_back(v, w);
            }
            return MultiGraph(20, std::move(e));
        }
        default:
            throw std::logic_error("not a platonic family");
    }
}

}  // namespace

MultiGraph generate(GraphFamily family, const std::vector<int>& dims) {
    auto need = [&](size_t k) {
        if (dims.size() != k)
            throw std::invalid_argument("wrong number of dimensions for this family");
    };
    switch (family) {
        case GraphFamily::Complete: {
            need(1);
            int n = dims[0];
            if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
            std::vector<std::pair<int, int>> e;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
            return MultiGraph(n, std::move(e));
        }
        case GraphFamily::Cycle: {
            need(1);
            int n = dims[0];
            if (n < 1) throw std::invalid_argument("cycle needs n >= 1");
            std::vector<std::pair<int, int>> e;
            for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
            return MultiGraph(n, std::move(e));
        }
        case GraphFamily::SquareLattice:
            need(2);
            return lattice(dims[0], dims[1], false);
        case GraphFamily::TriangleLattice:
            need(2);
            return lattice(dims[0], dims[1], true);
        case GraphFamily::SquareTube:
            need(2);
            return tube(dims[0], dims[1], false);
        case GraphFamily::TriangleTube:
            need(2);
            return tube(dims[0], dims[1], true);
        default:
            need(0);
            return platonic(family);
    }
}

ValencyStats valency_stats(const MultiGraph& g) {
    if (g.vertex_count == 0) throw std::invalid_argument("empty graph has no valency stats");
    auto deg = g.degree_sequence();
    deg.erase(std::unique(deg.begin(), deg.end()), deg.end());
    ValencyStats s;
    s.av = static_cast<int>(deg.size());
    for (int d : deg) (d % 2 ? s.ov : s.ev)++;
    return s;
}

namespace {

/// Iterative color refinement; returns stable vertex colors.
std::vector<int> refine(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> color(n, 0);
    for (int v = 0; v < n; ++v) {
        int deg = 2 * adj[v][v];
        for (int u = 0; u < n; ++u)
            if (u != v) deg += adj[v][u];
        color[v] = deg;
    }
    while (true) {
        std::vector<std::vector<std::pair<int, int>>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].emplace_back(-1, color[v]);
            sig[v].emplace_back(-2, adj[v][v]);
            for (int u = 0; u < n; ++u)
                if (u != v && adj[v][u] > 0) sig[v].emplace_back(color[u], adj[v][u]);
            std::sort(sig[v].begin() + 2, sig[v].end());
        }
        std::map<std::vector<std::pair<int, int>>, int> order;
        for (int v = 0; v < n; ++v) order[sig[v]] = 0;
        int next = 0;
        for (auto& [k, id] : order) id = next++;
        std::vector<int> fresh(n);
        for (int v = 0; v < n; ++v) fresh[v] = order[sig[v]];
        if (fresh == color) return color;
        color = std::move(fresh);
    }
}

struct CanonSearch {
    const std::vector<std::vector<int>>& adj;
    int n;
    std::vector<int> perm;  // position -> vertex
    std::vector<char> used;
    std::vector<int> best;  // flattened lower-triangle rows, minimal
    bool have_best = false;
    const std::vector<std::vector<int>>& slots;  // per position, candidate vertices

    // `tied` marks that acc so far equals the best prefix; only then can
    // a worse extension be pruned.
    void run(int pos, std::vector<int>& acc, bool tied) {
        if (pos == n) {
            if (!have_best || acc < best) {
                best = acc;
                have_best = true;
            }
            return;
        }
        const size_t mark = acc.size();
        for (int v : slots[pos]) {
            if (used[v]) continue;
            acc.push_back(adj[v][v]);
            for (int p = 0; p < pos; ++p) acc.push_back(adj[v][perm[p]]);
            bool child_tied = false;
            if (have_best && tied) {
                auto mismatch = std::mismatch(acc.begin() + mark, acc.end(), best.begin() + mark);
                if (mismatch.first == acc.end()) {
                    child_tied = true;
                } else if (*mismatch.first > *mismatch.second) {
                    acc.resize(mark);
                    continue;  // strictly worse than the incumbent
                }
            }
            used[v] = 1;
            perm[pos] = v;
            run(pos + 1, acc, child_tied);
            used[v] = 0;
            acc.resize(mark);
        }
    }
};

}  // namespace

std::string canonical_form(const MultiGraph& g) {
    const int n = g.vertex_count;
    auto adj = adjacency(g);
    auto color = refine(adj);

    // Positions grouped by refined color class, classes in color order.
    std::vector<std::vector<int>> classes;
    {
        std::map<int, std::vector<int>> by_color;
        for (int v = 0; v < n; ++v) by_color[color[v]].push_back(v);
        for (auto& [c, vs] : by_color) classes.push_back(vs);
    }
    std::vector<std::vector<int>> slots;
    for (const auto& cls : classes)
        for (size_t k = 0; k < cls.size(); ++k) slots.push_back(cls);

    CanonSearch search{adj, n, std::vector<int>(n), std::vector<char>(n, 0), {}, false, slots};
    std::vector<int> acc;
    search.run(0, acc, true);

    std::string out = std::to_string(n) + ":";
    for (int x : search.best) out += std::to_string(x) + ",";
    return out;
}

std::optional<std::vector<int>> isomorphism(const MultiGraph& g, const MultiGraph& h) {
    if (g.vertex_count != h.vertex_count || g.edge_count() != h.edge_count()) return std::nullopt;
    if (g.degree_sequence() != h.degree_sequence()) return std::nullopt;
    const int n = g.vertex_count;
    auto ga = adjacency(g), ha = adjacency(h);

    // Order g's vertices by descending degree for earlier pruning.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> gdeg(n, 0);
    for (int v = 0; v < n; ++v) gdeg[v] = g.degree(v);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return gdeg[a] > gdeg[b]; });

    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    auto backtrack = [&](auto&& self, int idx) -> bool {
        if (idx == n) return true;
        int v = order[idx];
        for (int w = 0; w < n; ++w) {
            if (used[w] || h.degree(w) != gdeg[v] || ha[w][w] != ga[v][v]) continue;
            bool ok = true;
            for (int j = 0; j < idx && ok; ++j) {
                int v2 = order[j];
                if (ga[v][v2] != ha[w][map[v2]]) ok = false;
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (self(self, idx + 1)) return true;
            used[w] = 0;
            map[v] = -1;
        }
        return false;
    };
    if (!backtrack(backtrack, 0)) return std::nullopt;
    return map;
}

}  // namespace tilepot
