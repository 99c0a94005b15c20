#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tilepot/multigraph.hpp"
#include "tilepot/pot.hpp"
#include "tilepot/spectrum.hpp"

namespace tilepot {

inline constexpr long kDefaultBudget = 100'000'000;  // backtracking nodes

/// A half-edge labeling of a multigraph, with its own symbol table.
/// labels[e] holds the cohesive end at the first endpoint of edge e and
/// the one at the second endpoint (for a loop, the two half-edges in
/// either order). A valid design carries complementary labels on every
/// edge.
struct AssemblyDesign {
    std::vector<std::string> symbols;
    std::vector<std::array<CohesiveEnd, 2>> labels;
};

/// True iff the design is complementary on every edge and every induced
/// vertex tile is a member of the pot. Throws std::invalid_argument when
/// the design does not label exactly the edges of g.
bool verify_design(const MultiGraph& g, const AssemblyDesign& d, const Pot& pot);

/// The deduplicated set of vertex tiles induced by a valid design.
/// Throws std::invalid_argument on a malformed or non-complementary
/// design.
Pot assembling_pot(const MultiGraph& g, const AssemblyDesign& d);

struct RealizationCertificate {
    std::vector<int> tile_of;   // vertex -> tile index in the pot
    std::vector<long> counts;   // tile usage, indexed like the pot
    AssemblyDesign design;      // symbols are the pot's symbol names
};

enum class SearchStatus { Found, NotFound, BudgetExceeded };

struct RealizationResult {
    SearchStatus status = SearchStatus::NotFound;
    std::optional<RealizationCertificate> certificate;
    long nodes = 0;
};

/// Exhaustive backtracking search for an assembly design of g drawn
/// from the pot: vertex-to-tile assignments filtered by degree, then
/// per-edge label choices consistent with both endpoint tiles. Returns
/// the deterministic first certificate under canonical ordering, or
/// BudgetExceeded when the node budget runs out before the search is
/// complete (which is distinct from a definite "no").
RealizationResult find_realization(const Pot& pot, const MultiGraph& g,
                                   long budget = kDefaultBudget);

struct EnumerationResult {
    struct Entry {
        MultiGraph graph;
        RealizationCertificate certificate;
    };
    SearchStatus status = SearchStatus::Found;  // Found = complete
    std::vector<Entry> entries;                 // one per isomorphism class
    std::vector<std::vector<long>> explored_counts;
    long nodes = 0;
};

/// Every graph of order n realizable from the pot, one representative
/// per isomorphism class with a certificate, by enumerating balanced
/// count vectors and all canonical end pairings per symbol. Loops are
/// kept; connectivity treats them as non-connecting.
EnumerationResult enumerate_realizable(const Pot& pot, long n, bool connected_only = true,
                                       long budget = kDefaultBudget);

/// Streaming variant for same-order uniqueness checks: scans the
/// enumeration and stops at the first graph of order #V(g) that is not
/// isomorphic to g. Found means the scan completed with no
/// counterexample.
struct SameOrderScan {
    SearchStatus status = SearchStatus::Found;
    std::optional<EnumerationResult::Entry> counterexample;
    long nodes = 0;
};

SameOrderScan scan_same_order(const Pot& pot, const MultiGraph& g, long budget = kDefaultBudget);

/// Same enumeration restricted to one tile usage vector. Throws
/// std::invalid_argument when the counts do not satisfy the balance
/// rows (no complete assembly can use them).
EnumerationResult enumerate_for_counts(const Pot& pot, const std::vector<long>& counts,
                                       bool connected_only = true, long budget = kDefaultBudget);

}  // namespace tilepot
