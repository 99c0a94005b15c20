#include "tilepot/pot.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace tilepot {

int Tile::net_count(int symbol) const {
    int n = 0;
    for (const auto& e : ends)
        if (e.symbol == symbol) n += e.hatted ? -1 : 1;
    return n;
}

int Tile::count(CohesiveEnd e) const {
    return static_cast<int>(std::count(ends.begin(), ends.end(), e));
}

void Tile::canonicalize() { std::sort(ends.begin(), ends.end()); }

ParseError::ParseError(const std::string& msg, int line, int column)
    : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                         std::to_string(column)),
      line(line),
      column(column) {}

ClosureError::ClosureError(const std::string& orphan)
    : std::runtime_error("closure violation: no tile carries the complement of '" + orphan + "'"),
      symbol(orphan) {}

namespace {

void check_closure(const std::vector<std::string>& names, const std::vector<Tile>& tiles) {
    const int s = static_cast<int>(names.size());
    std::vector<char> unhatted(s, 0), hatted(s, 0);
    for (const auto& t : tiles)
        for (const auto& e : t.ends)
            (e.hatted ? hatted : unhatted)[e.symbol] = 1;
    for (int i = 0; i < s; ++i) {
        if (unhatted[i] && !hatted[i]) throw ClosureError(names[i]);
        if (hatted[i] && !unhatted[i]) throw ClosureError("^" + names[i]);
    }
}

std::vector<Tile> dedup_preserving_order(std::vector<Tile> tiles) {
    std::vector<Tile> out;
    for (auto& t : tiles) {
        t.canonicalize();
        if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(std::move(t));
    }
    return out;
}

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

}  // namespace

Pot::Pot(std::vector<std::string> symbol_names, std::vector<Tile> tiles)
    : names_(std::move(symbol_names)), tiles_(dedup_preserving_order(std::move(tiles))) {
    for (const auto& t : tiles_)
        if (t.arity() < 1) throw std::invalid_argument("tile with no arms");
    check_closure(names_, tiles_);
}

Pot Pot::parse(const std::string& text) {
    std::vector<std::string> names;
    std::map<std::string, int> ids;
    std::vector<Tile> tiles;
    Tile current;

    int line = 1, col = 1;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };

    auto parse_end = [&] {
        skip_ws();
        bool hat = false;
        if (i < text.size() && text[i] == '^') {
            hat = true;
            ++i;
            ++col;
        }
        skip_ws();
        std::string name;
        while (i < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
            name += text[i++];
            ++col;
        }
        if (!valid_name(name)) throw ParseError("expected symbol name", line, col);
        auto [it, fresh] = ids.try_emplace(name, static_cast<int>(names.size()));
        if (fresh) names.push_back(name);
        current.ends.push_back({it->second, hat});
    };

    parse_end();
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        char c = text[i];
        if (c == ',') {
            ++i;
            ++col;
            parse_end();
        } else if (c == ';') {
            ++i;
            ++col;
            tiles.push_back(std::move(current));
            current = Tile{};
            parse_end();
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
    }
    tiles.push_back(std::move(current));
    return Pot(std::move(names), std::move(tiles));
}

Pot Pot::from_json(const nlohmann::json& j) {
    std::vector<std::string> names;
    std::map<std::string, int> ids;
    std::vector<Tile> tiles;
    for (const auto& jt : j.at("tiles")) {
        Tile t;
        for (const auto& je : jt) {
            std::string s = je.get<std::string>();
            bool hat = !s.empty() && s[0] == '^';
            if (hat) s = s.substr(1);
            if (!valid_name(s)) throw std::invalid_argument("bad symbol name '" + s + "'");
            auto [it, fresh] = ids.try_emplace(s, static_cast<int>(names.size()));
            if (fresh) names.push_back(s);
            t.ends.push_back({it->second, hat});
        }
        tiles.push_back(std::move(t));
    }
    return Pot(std::move(names), std::move(tiles));
}

Pot Pot::parse_any(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return from_json(nlohmann::json::parse(text));
        break;
    }
    return parse(text);
}

int Pot::find_symbol(const std::string& name) const {
    for (int i = 0; i < symbol_count(); ++i)
        if (names_[i] == name) return i;
    return -1;
}

std::string Pot::render_tile(const Tile& t) const {
    std::string out;
    for (size_t k = 0; k < t.ends.size(); ++k) {
        if (k) out += ",";
        if (t.ends[k].hatted) out += "^";
        out += names_[t.ends[k].symbol];
    }
    return out;
}

std::string Pot::render() const {
    std::string out;
    for (int i = 0; i < tile_count(); ++i) {
        if (i) out += " ; ";
        out += render_tile(tiles_[i]);
    }
    return out;
}

nlohmann::json Pot::to_json() const {
    nlohmann::json jt = nlohmann::json::array();
    for (const auto& t : tiles_) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& e : t.ends)
            arr.push_back((e.hatted ? "^" : "") + names_[e.symbol]);
        jt.push_back(std::move(arr));
    }
    return nlohmann::json{{"tiles", std::move(jt)}};
}

Pot Pot::collapse_bonds() const {
    if (symbol_count() == 0) return *this;
    std::vector<Tile> tiles = tiles_;
    for (auto& t : tiles)
        for (auto& e : t.ends) e.symbol = 0;
    return Pot({names_[0]}, std::move(tiles));
}

}  // namespace tilepot
