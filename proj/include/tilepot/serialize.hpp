#pragma once

#include <nlohmann/json.hpp>

#include "tilepot/realization.hpp"
#include "tilepot/scenario.hpp"
#include "tilepot/spectrum.hpp"

namespace tilepot {

/// Rationals serialize as exact "p/q" strings (or "p" for integers).
std::string rat_to_string(const Rat& r);

nlohmann::json spectrum_to_json(const Pot& pot, const SpectrumSolution& sol);
nlohmann::json min_order_to_json(const MinOrderResult& res);

/// Certificate layout: {"tiles": [vertex tile indices], "edge_labels":
/// [[edge, symbol, oriented_from]]} where oriented_from is the endpoint
/// carrying the unhatted end.
nlohmann::json certificate_to_json(const RealizationCertificate& cert, const MultiGraph& g);
RealizationCertificate certificate_from_json(const nlohmann::json& j, const Pot& pot,
                                             const MultiGraph& g);

nlohmann::json scenario_report_to_json(const ScenarioReport& rep, const MultiGraph& g);
nlohmann::json registry_entry_to_json(const RegistryEntry& entry);

}  // namespace tilepot
