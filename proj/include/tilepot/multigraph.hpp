#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace tilepot {

/// A multigraph with loops and parallel edges. Edges are unordered
/// vertex pairs stored normalized (u <= v) and sorted; parallel edges
/// repeat in the list. A loop contributes two half-edges (and degree 2)
/// at its vertex.
struct MultiGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    MultiGraph() = default;
    MultiGraph(int n, std::vector<std::pair<int, int>> e);

    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int v) const;
    std::vector<int> degree_sequence() const;  // sorted ascending

    /// Connectivity in the usual sense; loops join nothing. The empty
    /// graph counts as connected.
    bool connected() const;

    static MultiGraph from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    friend bool operator==(const MultiGraph&, const MultiGraph&) = default;
};

enum class GraphFamily {
    Complete,
    Cycle,
    Tetrahedron,
    Hexahedron,
    Octahedron,
    Icosahedron,
    Dodecahedron,
    SquareLattice,
    TriangleLattice,
    SquareTube,
    TriangleTube,
};

std::optional<GraphFamily> family_from_name(const std::string& name);

/// Deterministic generators for the supported families. Lattices use
/// row-major vertex numbering; dims are {n} for complete/cycle, {} for
/// platonic solids, {rows, cols} for lattices and tubes.
///
/// An m x n tube is the m x n lattice with the two boundary columns
/// identified: m rows whose row edges form a cycle of length n-1 (the
/// identified boundary edge is drawn twice in the usual picture). Tubes
/// with n <= 3 are degenerate and rejected.
MultiGraph generate(GraphFamily family, const std::vector<int>& dims);

struct ValencyStats {
    int av = 0;  // distinct degrees
    int ov = 0;  // distinct odd degrees
    int ev = 0;  // distinct even degrees
};

ValencyStats valency_stats(const MultiGraph& g);

/// Canonical string form; equal iff isomorphic. Intended for graphs of
/// at most a few dozen vertices.
std::string canonical_form(const MultiGraph& g);

/// Isomorphism test; on success the witness maps vertices of g to
/// vertices of h.
std::optional<std::vector<int>> isomorphism(const MultiGraph& g, const MultiGraph& h);

inline bool isomorphic(const MultiGraph& g, const MultiGraph& h) {
    return isomorphism(g, h).has_value();
}

}  // namespace tilepot
