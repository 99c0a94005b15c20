#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tilepot/multigraph.hpp"
#include "tilepot/pot.hpp"

namespace tilepot {

/// Origin of a gadget tile: the source vertex or edge it encodes plus
/// the color choice (for vertex tiles) or ordered color pair (for edge
/// tiles).
struct TileOrigin {
    enum class Kind { Vertex, Edge };
    Kind kind = Kind::Vertex;
    int index = 0;       // vertex id or edge id in the source graph
    int color = 0;       // vertex color, or encoded pair 3*x+y for edges
    std::string describe() const;
};

struct ReductionArtifact {
    Pot pot;
    long target_order = 0;
    std::vector<TileOrigin> provenance;  // parallel to pot tile order
};

/// Pot-realization gadget: three vertex tiles per source vertex (one
/// per color, arms labeled by (vertex, edge, color) triples) and six
/// two-armed edge tiles per source edge (hatted triples for every
/// ordered pair of distinct endpoint colors). The subdivision of G is
/// realizable at order #V + #E iff G is 3-colorable. The construction
/// reads only incidences, so any vertex degree is accepted. Requires a
/// simple connected graph.
ReductionArtifact prp_pot(const MultiGraph& g);

/// Substructure-realization gadget for simple connected 4-regular
/// graphs: vertex tiles gain three self-complementary arm pairs
/// labeled by color-pair symbols, so each chosen vertex tile can close
/// three loops. The loop-decorated subdivision (order 3k for a source
/// of order k) is realizable iff G is 3-colorable.
ReductionArtifact srp_pot(const MultiGraph& g);

/// Backtracking proper 3-coloring oracle for simple graphs; colors are
/// 0, 1, 2.
std::optional<std::vector<int>> three_colorable(const MultiGraph& g);

enum class ReductionVariant { Prp, Srp };

/// The target graph of the corresponding reduction: every edge
/// subdivided once (subdivision vertex for edge e is numbered #V + e),
/// and for the substructure variant three loops added at each original
/// vertex.
MultiGraph subdivided_target(const MultiGraph& g, ReductionVariant variant);

}  // namespace tilepot
