#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tilepot/realization.hpp"

namespace tilepot {

/// Verdict for one of the three design-correctness scenarios:
///   1: the pot realizes G;
///   2: additionally nothing of smaller order is realizable;
///   3: additionally every realizable graph of the same order is
///      isomorphic to G.
struct ScenarioReport {
    enum class Status { Holds, Fails, Indeterminate };

    int level = 1;
    Status status = Status::Indeterminate;
    std::optional<RealizationCertificate> certificate;  // design for G when found

    // Violation evidence: a smaller realizable order (level 2) or a
    // non-isomorphic same-order graph with its certificate (level 3).
    std::optional<OrderWitness> smaller_witness;
    std::optional<MultiGraph> other_graph;
    std::optional<RealizationCertificate> other_certificate;

    std::string note;
    long nodes = 0;
};

/// Budget exhaustion yields Indeterminate, never a false Holds. Pots
/// whose spectrum has three or more degrees of freedom fall back to
/// exhaustive count-vector enumeration automatically.
ScenarioReport check_scenario(const Pot& pot, const MultiGraph& g, int level,
                              long budget = kDefaultBudget);

/// The general bounds av(G) <= T_1(G) <= ev(G) + 2 ov(G), where av
/// counts distinct degrees and ev/ov the even/odd ones.
std::pair<int, int> t1_bounds(const MultiGraph& g);

struct SearchLimits {
    int max_tiles = 6;
    int max_bonds = 4;
    long budget = kDefaultBudget;
};

/// Minimum-tile (T) or minimum-bond (B) search result. The bracket
/// [lo, hi] collapses to a proven exact value when the whole space
/// below the witness was exhausted within the limits; hi = -1 means no
/// witness was found at all.
struct OptimaResult {
    enum class Quantity { Tiles, Bonds };

    Quantity quantity = Quantity::Tiles;
    int level = 1;
    int lo = 1;
    int hi = -1;
    std::optional<Pot> witness;
    bool exact = false;
    long pots_checked = 0;
    std::string note;

    std::optional<int> value() const {
        return exact ? std::optional<int>(hi) : std::nullopt;
    }
};

/// Exhaustive pot-space search for T_i(G) or B_i(G). Candidate pots use
/// tile arities drawn from the degree set of G, are closed under
/// complementation, and are enumerated once per symbol-permutation and
/// per-symbol hat-flip orbit, ordered by (#P, #Sigma) for T and
/// (#Sigma, #P) for B. The first passing pot is the witness; exactness
/// requires the full smaller space to fit inside the limits.
OptimaResult search_optimum(const MultiGraph& g, OptimaResult::Quantity quantity, int level,
                            SearchLimits limits = {});

/// Design-space sweep: every pot that arises as the assembling pot of
/// some half-edge labeling of g with at most max_symbols bond types,
/// deduplicated, filtered by check_scenario. Any pot passing scenario
/// 2 or 3 contains a passing assembling pot with no more tiles and no
/// more bond types, so minima over this space are minima over all
/// pots.
struct DesignSearchResult {
    SearchStatus status = SearchStatus::Found;  // Found = space exhausted
    std::vector<Pot> pots;                      // passing pots, deduplicated
    long designs = 0;
    long checks = 0;
};

DesignSearchResult scenario_pots_from_designs(const MultiGraph& g, int level, int max_symbols,
                                              long budget = kDefaultBudget);

/// One claimed value from the results table for the supported graph
/// families, with the witness pot when one is printed and a flag for
/// how far the toolkit can verify the claim at desk scale.
struct RegistryEntry {
    std::string family;
    std::vector<int> dims;      // empty for dimension-generic claims
    char quantity = 'T';        // 'T' or 'B'
    int level = 1;
    std::string relation;       // "=", "<=", ">=", "in"
    int value = 0;
    int hi = -1;                // upper end for relation "in"
    std::string witness_pot;    // pot text when printed, else empty
    std::string verify;         // "witness", "search", "claim"
    std::string note;
};

const std::vector<RegistryEntry>& results_registry();

}  // namespace tilepot
