#include "tilepot/reductions.hpp"

#include <map>
#include <stdexcept>

namespace tilepot {

std::string TileOrigin::describe() const {
    if (kind == Kind::Vertex)
        return "vertex " + std::to_string(index) + " color " + std::to_string(color);
    return "edge " + std::to_string(index) + " colors " + std::to_string(color / 3) + "," +
           std::to_string(color % 3);
}

namespace {

void require_simple_connected(const MultiGraph& g) {
    if (g.vertex_count == 0) throw std::invalid_argument("empty graph");
    for (size_t i = 0; i < g.edges.size(); ++i) {
        if (g.edges[i].first == g.edges[i].second)
            throw std::invalid_argument("input must be simple: loop found");
        if (i > 0 && g.edges[i] == g.edges[i - 1])
            throw std::invalid_argument("input must be simple: parallel edge found");
    }
    if (!g.connected()) throw std::invalid_argument("input must be connected");
}

struct GadgetBuilder {
    std::vector<std::string> names;
    std::map<std::string, int> ids;
    std::vector<Tile> tiles;
    std::vector<TileOrigin> origins;

    int symbol(const std::string& name) {
        auto [it, fresh] = ids.emplace(name, static_cast<int>(names.size()));
        if (fresh) names.push_back(name);
        return it->second;
    }

    void add(Tile t, TileOrigin origin) {
        t.canonicalize();
        tiles.push_back(std::move(t));
        origins.push_back(origin);
    }
};

std::string arm_name(int v, int e, int c) {
    return "v" + std::to_string(v) + "_e" + std::to_string(e) + "_c" + std::to_string(c);
}

std::string pair_name(int v, int x, int y) {
    if (x > y) std::swap(x, y);
    return "v" + std::to_string(v) + "_p" + std::to_string(x) + std::to_string(y);
}

ReductionArtifact build(const MultiGraph& g, bool srp) {
    require_simple_connected(g);
    if (srp)
        for (int v = 0; v < g.vertex_count; ++v)
            if (g.degree(v) != 4)
                throw std::invalid_argument("substructure gadget requires a 4-regular graph");

    GadgetBuilder b;
    std::vector<std::vector<int>> incident(g.vertex_count);
    for (size_t e = 0; e < g.edges.size(); ++e) {
        incident[g.edges[e].first].push_back(static_cast<int>(e));
        incident[g.edges[e].second].push_back(static_cast<int>(e));
    }

    for (int v = 0; v < g.vertex_count; ++v)
        for (int c = 0; c < 3; ++c) {
            Tile t;
            for (int e : incident[v]) t.ends.push_back({b.symbol(arm_name(v, e, c)), false});
            if (srp)
                for (int x = 0; x < 3; ++x) {
                    const int s = b.symbol(pair_name(v, c, x));
                    t.ends.push_back({s, false});
                    t.ends.push_back({s, true});
                }
            b.add(std::move(t), {TileOrigin::Kind::Vertex, v, c});
        }
    for (size_t e = 0; e < g.edges.size(); ++e) {
        const auto& [u, v] = g.edges[e];
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) {
                if (x == y) continue;
                Tile t;
                t.ends.push_back({b.symbol(arm_name(u, static_cast<int>(e), x)), true});
                t.ends.push_back({b.symbol(arm_name(v, static_cast<int>(e), y)), true});
                b.add(std::move(t), {TileOrigin::Kind::Edge, static_cast<int>(e), 3 * x + y});
            }
    }

    ReductionArtifact art;
    art.pot = Pot(std::move(b.names), std::move(b.tiles));
    art.provenance = std::move(b.origins);
    art.target_order = g.vertex_count + g.edge_count();
    return art;
}

}  // namespace

ReductionArtifact prp_pot(const MultiGraph& g) { return build(g, false); }

ReductionArtifact srp_pot(const MultiGraph& g) { return build(g, true); }

std::optional<std::vector<int>> three_colorable(const MultiGraph& g) {
    std::vector<std::vector<int>> adj(g.vertex_count);
    for (const auto& [u, v] : g.edges) {
        if (u == v) return std::nullopt;  // a loop admits no proper coloring
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> color(g.vertex_count, -1);
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == g.vertex_count) return true;
        for (int c = 0; c < 3; ++c) {
            bool ok = true;
            for (int w : adj[v])
                if (color[w] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            if (self(self, v + 1)) return true;
            color[v] = -1;
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    return color;
}

MultiGraph subdivided_target(const MultiGraph& g, ReductionVariant variant) {
    require_simple_connected(g);
    const int n = g.vertex_count;
    std::vector<std::pair<int, int>> edges;
    for (size_t e = 0; e < g.edges.size(); ++e) {
        const int mid = n + static_cast<int>(e);
        edges.emplace_back(g.edges[e].first, mid);
        edges.emplace_back(g.edges[e].second, mid);
    }
    if (variant == ReductionVariant::Srp)
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == 4)
                for (int i = 0; i < 3; ++i) edges.emplace_back(v, v);
    return MultiGraph(n + g.edge_count(), std::move(edges));
}

}  // namespace tilepot
