#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace tilepot {

/// A cohesive end: an interned bond symbol plus a polarity. The hatted
/// form of a symbol is its Watson-Crick complement; palindromic ends do
/// not exist, so an end is always strictly hatted or unhatted.
struct CohesiveEnd {
    int symbol = 0;
    bool hatted = false;

    friend auto operator<=>(const CohesiveEnd&, const CohesiveEnd&) = default;
};

inline CohesiveEnd complement(CohesiveEnd e) { return {e.symbol, !e.hatted}; }

/// A k-armed tile: the multiset of cohesive ends on its arms, kept in
/// canonical order (symbol ascending, unhatted before hatted) so that
/// structural equality is tile equality.
struct Tile {
    std::vector<CohesiveEnd> ends;

    int arity() const { return static_cast<int>(ends.size()); }

    /// Net count of a symbol: unhatted occurrences minus hatted ones.
    int net_count(int symbol) const;

    /// Number of ends equal to `e` exactly (symbol and polarity).
    int count(CohesiveEnd e) const;

    void canonicalize();

    friend auto operator<=>(const Tile&, const Tile&) = default;
};

struct ParseError : std::runtime_error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int line, int column);
};

struct ClosureError : std::runtime_error {
    std::string symbol;
    explicit ClosureError(const std::string& orphan);
};

/// A pot: a set of distinct tiles over an interned symbol table, closed
/// under complementation (every symbol that occurs unhatted somewhere
/// also occurs hatted somewhere, and vice versa). Duplicate tiles are
/// merged on construction; tile order is otherwise preserved.
class Pot {
public:
    Pot() = default;

    /// Builds a pot from explicit tiles. Throws ClosureError if some
    /// cohesive end has no complement anywhere in the pot.
    Pot(std::vector<std::string> symbol_names, std::vector<Tile> tiles);

    /// Parses the text grammar: pot := tile (";" tile)*; tile := end
    /// ("," end)*; end := "^"? name. Whitespace is insignificant.
    static Pot parse(const std::string& text);

    /// Parses the JSON alternative {"tiles": [["a","a","^a"], ...]}.
    static Pot from_json(const nlohmann::json& j);

    /// Accepts either format, sniffing for a leading '{'.
    static Pot parse_any(const std::string& text);

    int tile_count() const { return static_cast<int>(tiles_.size()); }
    int symbol_count() const { return static_cast<int>(names_.size()); }
    const std::vector<Tile>& tiles() const { return tiles_; }
    const Tile& tile(int i) const { return tiles_[i]; }
    const std::string& symbol_name(int id) const { return names_[id]; }
    const std::vector<std::string>& symbol_names() const { return names_; }

    /// Index of a symbol name, or -1 when absent.
    int find_symbol(const std::string& name) const;

    std::string render() const;
    std::string render_tile(const Tile& t) const;
    nlohmann::json to_json() const;

    /// Replaces every symbol by the first one, polarities preserved,
    /// and deduplicates. The result has exactly one bond-edge type.
    Pot collapse_bonds() const;

    friend bool operator==(const Pot&, const Pot&) = default;

private:
    std::vector<std::string> names_;
    std::vector<Tile> tiles_;
};

}  // namespace tilepot
