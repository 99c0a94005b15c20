#include "tilepot/serialize.hpp"

#include <stdexcept>

namespace tilepot {

using nlohmann::json;

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

json spectrum_to_json(const Pot& pot, const SpectrumSolution& sol) {
    json j;
    j["consistent"] = sol.consistent;
    j["free_count"] = sol.free_count();
    j["tile_count"] = pot.tile_count();
    if (!sol.consistent) return j;
    j["free_columns"] = sol.free_columns;
    json constants = json::array();
    for (const Rat& c : sol.constants) constants.push_back(rat_to_string(c));
    j["constants"] = std::move(constants);
    json basis = json::array();
    for (const auto& dir : sol.basis) {
        json row = json::array();
        for (const Rat& c : dir) row.push_back(rat_to_string(c));
        basis.push_back(std::move(row));
    }
    j["basis"] = std::move(basis);
    return j;
}

json min_order_to_json(const MinOrderResult& res) {
    json j;
    j["free_count"] = res.free_count;
    j["status"] = res.status == MinOrderResult::Status::Ok ? "ok" : "too-many-free-variables";
    json ws = json::array();
    for (const OrderWitness& w : res.witnesses) ws.push_back({{"order", w.order}, {"counts", w.counts}});
    j["witnesses"] = std::move(ws);
    return j;
}

json certificate_to_json(const RealizationCertificate& cert, const MultiGraph& g) {
    json j;
    j["tiles"] = cert.tile_of;
    json labels = json::array();
    for (size_t e = 0; e < cert.design.labels.size(); ++e) {
        const auto& [ea, eb] = cert.design.labels[e];
        const auto& [u, v] = g.edges[e];
        const int from = ea.hatted ? v : u;
        labels.push_back(json::array({e, cert.design.symbols[ea.symbol], from}));
    }
    j["edge_labels"] = std::move(labels);
    return j;
}

RealizationCertificate certificate_from_json(const json& j, const Pot& pot, const MultiGraph& g) {
    RealizationCertificate cert;
    cert.tile_of = j.at("tiles").get<std::vector<int>>();
    if (static_cast<int>(cert.tile_of.size()) != g.vertex_count)
        throw std::invalid_argument("certificate tile list does not match the graph order");
    cert.counts.assign(pot.tile_count(), 0);
    for (int t : cert.tile_of) {
        if (t < 0 || t >= pot.tile_count())
            throw std::invalid_argument("certificate references an unknown tile");
        ++cert.counts[t];
    }
    cert.design.symbols = pot.symbol_names();
    cert.design.labels.assign(g.edges.size(), {});
    std::vector<char> filled(g.edges.size(), 0);
    for (const json& item : j.at("edge_labels")) {
        const int e = item.at(0).get<int>();
        if (e < 0 || e >= g.edge_count() || filled[e])
            throw std::invalid_argument("bad edge index in certificate");
        const int sym = pot.find_symbol(item.at(1).get<std::string>());
        if (sym < 0) throw std::invalid_argument("unknown symbol in certificate");
        const int from = item.at(2).get<int>();
        const auto& [u, v] = g.edges[e];
        if (from != u && from != v)
            throw std::invalid_argument("oriented_from is not an endpoint of the edge");
        const bool first_hatted = (from == v) && (u != v);
        cert.design.labels[e] = {CohesiveEnd{sym, first_hatted}, CohesiveEnd{sym, !first_hatted}};
        filled[e] = 1;
    }
    for (char f : filled)
        if (!f) throw std::invalid_argument("certificate misses an edge label");
    return cert;
}

json scenario_report_to_json(const ScenarioReport& rep, const MultiGraph& g) {
    json j;
    j["level"] = rep.level;
    switch (rep.status) {
        case ScenarioReport::Status::Holds: j["status"] = "holds"; break;
        case ScenarioReport::Status::Fails: j["status"] = "fails"; break;
        case ScenarioReport::Status::Indeterminate: j["status"] = "indeterminate"; break;
    }
    if (!rep.note.empty()) j["note"] = rep.note;
    j["nodes"] = rep.nodes;
    if (rep.certificate) j["certificate"] = certificate_to_json(*rep.certificate, g);
    if (rep.smaller_witness)
        j["smaller_witness"] = {{"order", rep.smaller_witness->order},
                                {"counts", rep.smaller_witness->counts}};
    if (rep.other_graph) {
        j["other_graph"] = rep.other_graph->to_json();
        if (rep.other_certificate)
            j["other_certificate"] = certificate_to_json(*rep.other_certificate, *rep.other_graph);
    }
    return j;
}

json registry_entry_to_json(const RegistryEntry& entry) {
    json j;
    j["family"] = entry.family;
    j["dims"] = entry.dims;
    j["quantity"] = std::string(1, entry.quantity);
    j["level"] = entry.level;
    j["relation"] = entry.relation;
    j["value"] = entry.value;
    if (entry.relation == "in") j["hi"] = entry.hi;
    if (!entry.witness_pot.empty()) j["witness_pot"] = entry.witness_pot;
    j["verify"] = entry.verify;
    if (!entry.note.empty()) j["note"] = entry.note;
    return j;
}

}  // namespace tilepot
