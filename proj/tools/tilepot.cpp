#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tilepot/pot.hpp"
#include "tilepot/multigraph.hpp"
#include "tilepot/realization.hpp"
#include "tilepot/reductions.hpp"
#include "tilepot/scenario.hpp"
#include "tilepot/serialize.hpp"
#include "tilepot/spectrum.hpp"

namespace {

using nlohmann::json;
using namespace tilepot;

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;
constexpr int kExitIndeterminate = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Pot load_pot(const std::string& path) { return Pot::parse_any(slurp(path)); }

MultiGraph load_graph(const std::string& path) {
    return MultiGraph::from_json(json::parse(slurp(path)));
}

long default_budget() {
    if (const char* env = std::getenv("TILEPOT_BUDGET")) {
        try {
            return std::stol(env);
        } catch (...) {
            throw std::runtime_error("TILEPOT_BUDGET is not a number");
        }
    }
    return kDefaultBudget;
}

void emit(const json& j, bool as_json, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::string render_witness(const OrderWitness& w) {
    std::string s = "order " + std::to_string(w.order) + " counts <";
    for (size_t i = 0; i < w.counts.size(); ++i)
        s += (i ? "," : "") + std::to_string(w.counts[i]);
    return s + ">";
}

int cmd_spectrum(const std::string& pot_path, bool as_json) {
    Pot pot = load_pot(pot_path);
    SpectrumSolution sol = spectrum(pot);
    json j = spectrum_to_json(pot, sol);
    std::ostringstream text;
    if (!sol.consistent) {
        text << "spectrum is empty (inconsistent balance system)\n";
        emit(j, as_json, text.str());
        return kExitNo;
    }
    text << "free variables: " << sol.free_count() << "\n";
    text << "point = constants + sum of t_f * basis[f]\n";
    text << "constants:";
    for (const Rat& c : sol.constants) text << " " << rat_to_string(c);
    text << "\n";
    for (size_t f = 0; f < sol.basis.size(); ++f) {
        text << "basis[" << f << "] (coordinate " << sol.free_columns[f] << "):";
        for (const Rat& c : sol.basis[f]) text << " " << rat_to_string(c);
        text << "\n";
    }
    emit(j, as_json, text.str());
    return kExitOk;
}

int cmd_min_order(const std::string& pot_path, long max, bool fallback, bool as_json) {
    Pot pot = load_pot(pot_path);
    MinOrderResult res = min_order(pot, max, fallback);
    json j = min_order_to_json(res);
    std::ostringstream text;
    if (res.status == MinOrderResult::Status::TooManyFreeVariables) {
        text << "spectrum has " << res.free_count
             << " free variables; rerun with --fallback for exhaustive enumeration\n";
        emit(j, as_json, text.str());
        return kExitIndeterminate;
    }
    if (res.witnesses.empty()) {
        text << "no feasible order up to " << max << "\n";
        emit(j, as_json, text.str());
        return kExitNo;
    }
    for (const OrderWitness& w : res.witnesses) text << render_witness(w) << "\n";
    emit(j, as_json, text.str());
    return kExitOk;
}

int cmd_realize(const std::string& pot_path, const std::string& graph_path, long budget,
                bool as_json) {
    Pot pot = load_pot(pot_path);
    MultiGraph g = load_graph(graph_path);
    RealizationResult res = find_realization(pot, g, budget);
    if (res.status == SearchStatus::BudgetExceeded) {
        emit(json{{"status", "indeterminate"}, {"nodes", res.nodes}}, as_json,
             "budget exceeded before the search finished\n");
        return kExitIndeterminate;
    }
    if (res.status == SearchStatus::NotFound) {
        emit(json{{"status", "no"}, {"nodes", res.nodes}}, as_json,
             "the pot does not realize the graph\n");
        return kExitNo;
    }
    json j = certificate_to_json(*res.certificate, g);
    j["status"] = "ok";
    std::ostringstream text;
    text << "realizable; tile assignment:";
    for (int t : res.certificate->tile_of) text << " " << t;
    text << "\n";
    emit(j, as_json, text.str());
    return kExitOk;
}

int cmd_enumerate(const std::string& pot_path, long order, bool all_components, long budget,
                  bool as_json) {
    Pot pot = load_pot(pot_path);
    EnumerationResult res = enumerate_realizable(pot, order, !all_components, budget);
    json j;
    j["status"] = res.status == SearchStatus::BudgetExceeded ? "indeterminate" : "ok";
    j["explored_counts"] = res.explored_counts;
    json entries = json::array();
    for (const auto& entry : res.entries) {
        json e;
        e["graph"] = entry.graph.to_json();
        e["certificate"] = certificate_to_json(entry.certificate, entry.graph);
        entries.push_back(std::move(e));
    }
    j["graphs"] = std::move(entries);
    std::ostringstream text;
    text << res.entries.size() << " isomorphism class(es) at order " << order << "\n";
    for (const auto& entry : res.entries) text << entry.graph.to_json().dump() << "\n";
    if (res.status == SearchStatus::BudgetExceeded) {
        text << "budget exceeded; result is partial\n";
        emit(j, as_json, text.str());
        return kExitIndeterminate;
    }
    emit(j, as_json, text.str());
    return kExitOk;
}

int cmd_scenario(int level, const std::string& pot_path, const std::string& graph_path,
                 long budget, bool as_json) {
    Pot pot = load_pot(pot_path);
    MultiGraph g = load_graph(graph_path);
    ScenarioReport rep = check_scenario(pot, g, level, budget);
    json j = scenario_report_to_json(rep, g);
    std::ostringstream text;
    switch (rep.status) {
        case ScenarioReport::Status::Holds:
            text << "scenario " << level << " holds\n";
            emit(j, as_json, text.str());
            return kExitOk;
        case ScenarioReport::Status::Fails:
            text << "scenario " << level << " fails: " << rep.note << "\n";
            if (rep.smaller_witness) text << render_witness(*rep.smaller_witness) << "\n";
            if (rep.other_graph) text << rep.other_graph->to_json().dump() << "\n";
            emit(j, as_json, text.str());
            return kExitNo;
        default:
            text << "indeterminate: " << rep.note << "\n";
            emit(j, as_json, text.str());
            return kExitIndeterminate;
    }
}

int cmd_search(const std::string& graph_path, const std::string& quantity, int level,
               int max_tiles, int max_bonds, long budget, bool as_json) {
    MultiGraph g = load_graph(graph_path);
    const auto q = quantity == "T" ? OptimaResult::Quantity::Tiles : OptimaResult::Quantity::Bonds;
    OptimaResult res = search_optimum(g, q, level, {max_tiles, max_bonds, budget});
    json j;
    j["quantity"] = quantity;
    j["level"] = level;
    j["exact"] = res.exact;
    j["lo"] = res.lo;
    if (res.hi >= 0) j["hi"] = res.hi;
    if (res.witness) j["witness_pot"] = res.witness->render();
    j["pots_checked"] = res.pots_checked;
    if (!res.note.empty()) j["note"] = res.note;
    std::ostringstream text;
    if (res.witness) {
        text << quantity << level << (res.exact ? " = " : " <= ") << res.hi << " via "
             << res.witness->render() << "\n";
        if (!res.exact) text << "lower bound explored: " << res.lo << " (" << res.note << ")\n";
        emit(j, as_json, text.str());
        return kExitOk;
    }
    text << "no pot found within limits; " << res.note << "\n";
    emit(j, as_json, text.str());
    return res.note == "budget exhausted" ? kExitIndeterminate : kExitNo;
}

int cmd_graph(const std::string& family, int rows, int cols, int n, bool as_json) {
    auto fam = family_from_name(family);
    if (!fam) throw std::runtime_error("unknown graph family: " + family);
    std::vector<int> dims;
    switch (*fam) {
        case GraphFamily::Complete:
        case GraphFamily::Cycle:
            if (n <= 0) throw std::runtime_error("this family needs --n");
            dims = {n};
            break;
        case GraphFamily::SquareLattice:
        case GraphFamily::TriangleLattice:
        case GraphFamily::SquareTube:
        case GraphFamily::TriangleTube:
            if (rows <= 0 || cols <= 0) throw std::runtime_error("this family needs --rows and --cols");
            dims = {rows, cols};
            break;
        default:
            break;
    }
    MultiGraph g = generate(*fam, dims);
    emit(g.to_json(), true, "");
    (void)as_json;
    return kExitOk;
}

int cmd_reduce(const std::string& variant, const std::string& graph_path, const std::string& out,
               const std::string& target_path, bool as_json) {
    MultiGraph g = load_graph(graph_path);
    const bool srp = variant == "srp";
    ReductionArtifact art = srp ? srp_pot(g) : prp_pot(g);
    {
        std::ofstream f(out);
        if (!f) throw std::runtime_error("cannot write " + out);
        f << art.pot.render() << "\n";
    }
    if (!target_path.empty()) {
        MultiGraph target =
            subdivided_target(g, srp ? ReductionVariant::Srp : ReductionVariant::Prp);
        std::ofstream f(target_path);
        if (!f) throw std::runtime_error("cannot write " + target_path);
        f << target.to_json().dump(2) << "\n";
    }
    json j;
    j["tiles"] = art.pot.tile_count();
    j["symbols"] = art.pot.symbol_count();
    j["target_order"] = art.target_order;
    std::ostringstream text;
    text << art.pot.tile_count() << " tiles over " << art.pot.symbol_count()
         << " symbols; target order " << art.target_order << "\n";
    emit(j, as_json, text.str());
    return kExitOk;
}

int cmd_registry(bool verify, long budget, bool as_json) {
    json rows = json::array();
    std::ostringstream text;
    for (const RegistryEntry& entry : results_registry()) {
        json j = registry_entry_to_json(entry);
        std::string outcome = "out-of-scope";
        if (verify) {
            if (!entry.witness_pot.empty()) {
                // Witness pots certify the attainable direction of the
                // claim: the pot passes the scenario and meets the value.
                try {
                    Pot pot = Pot::parse(entry.witness_pot);
                    if (entry.quantity == 'B' && entry.value == 1) pot = pot.collapse_bonds();
                    MultiGraph g = generate(*family_from_name(entry.family), entry.dims);
                    ScenarioReport rep = check_scenario(pot, g, entry.level, budget);
                    const int attained =
                        entry.quantity == 'T' ? pot.tile_count() : pot.symbol_count();
                    if (rep.status == ScenarioReport::Status::Indeterminate)
                        outcome = "indeterminate";
                    else if (rep.status == ScenarioReport::Status::Holds &&
                             attained == entry.value)
                        outcome = "pass";
                    else
                        outcome = "fail";
                } catch (const std::exception& e) {
                    outcome = std::string("fail: ") + e.what();
                }
            } else if (entry.verify == "claim") {
                outcome = "out-of-scope";
            } else {
                outcome = "search-only (see test suite)";
            }
            j["outcome"] = outcome;
        }
        text << entry.family;
        for (size_t i = 0; i < entry.dims.size(); ++i)
            text << (i ? "x" : " ") << entry.dims[i];
        text << " " << entry.quantity << entry.level << " " << entry.relation << " "
             << entry.value;
        if (entry.relation == "in") text << ".." << entry.hi;
        if (verify) text << "  [" << outcome << "]";
        if (!entry.note.empty()) text << "  (" << entry.note << ")";
        text << "\n";
        rows.push_back(std::move(j));
    }
    emit(rows, as_json, text.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Flexible-tile self-assembly design toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    long budget = 0;
    app.add_flag("--json", as_json, "emit JSON on stdout");
    app.add_option("--budget", budget,
                   "backtracking node budget (default " + std::to_string(kDefaultBudget) +
                       ", or TILEPOT_BUDGET)");

    std::string pot_path, graph_path, family, quantity = "T", variant, out_path, target_path;
    long max_order = 32, order = 0;
    int level = 1, rows = 0, cols = 0, n = 0, max_tiles = 6, max_bonds = 4;
    bool fallback = false, all_components = false, verify = false;

    auto* c_spectrum = app.add_subcommand("spectrum", "solve the balance system of a pot");
    c_spectrum->add_option("--pot", pot_path)->required();

    auto* c_min = app.add_subcommand("min-order", "minimal realizable orders with counts");
    c_min->add_option("--pot", pot_path)->required();
    c_min->add_option("--max", max_order, "largest order to report");
    c_min->add_flag("--fallback", fallback, "exhaustive enumeration for 3+ free variables");

    auto* c_realize = app.add_subcommand("realize", "find an assembly design of a graph");
    c_realize->add_option("--pot", pot_path)->required();
    c_realize->add_option("--graph", graph_path)->required();

    auto* c_enum = app.add_subcommand("enumerate", "all realizable graphs of a given order");
    c_enum->add_option("--pot", pot_path)->required();
    c_enum->add_option("--order", order)->required();
    c_enum->add_flag("--all-components", all_components, "include disconnected assemblies");

    auto* c_scenario = app.add_subcommand("scenario", "check a design-correctness scenario");
    c_scenario->add_option("--level", level)->required()->check(CLI::Range(1, 3));
    c_scenario->add_option("--pot", pot_path)->required();
    c_scenario->add_option("--graph", graph_path)->required();

    auto* c_search = app.add_subcommand("search", "minimum tile/bond pot search");
    c_search->add_option("--graph", graph_path)->required();
    c_search->add_option("--quantity", quantity)->check(CLI::IsMember({"T", "B"}));
    c_search->add_option("--level", level)->check(CLI::Range(1, 3));
    c_search->add_option("--max-tiles", max_tiles);
    c_search->add_option("--max-bonds", max_bonds);

    auto* c_graph = app.add_subcommand("graph", "emit a generated graph as JSON");
    c_graph->add_option("--family", family)->required();
    c_graph->add_option("--rows", rows);
    c_graph->add_option("--cols", cols);
    c_graph->add_option("--n", n);

    auto* c_reduce = app.add_subcommand("reduce", "build a 3-coloring reduction pot");
    c_reduce->add_option("--variant", variant)->required()->check(CLI::IsMember({"prp", "srp"}));
    c_reduce->add_option("--graph", graph_path)->required();
    c_reduce->add_option("--out", out_path)->required();
    c_reduce->add_option("--emit-target", target_path);

    auto* c_registry = app.add_subcommand("registry", "known results table");
    c_registry->add_flag("--verify", verify, "check entries with printed witness pots");

    CLI11_PARSE(app, argc, argv);

    try {
        if (budget <= 0) budget = default_budget();
        if (c_spectrum->parsed()) return cmd_spectrum(pot_path, as_json);
        if (c_min->parsed()) return cmd_min_order(pot_path, max_order, fallback, as_json);
        if (c_realize->parsed()) return cmd_realize(pot_path, graph_path, budget, as_json);
        if (c_enum->parsed())
            return cmd_enumerate(pot_path, order, all_components, budget, as_json);
        if (c_scenario->parsed())
            return cmd_scenario(level, pot_path, graph_path, budget, as_json);
        if (c_search->parsed())
            return cmd_search(graph_path, quantity, level, max_tiles, max_bonds, budget, as_json);
        if (c_graph->parsed()) return cmd_graph(family, rows, cols, n, as_json);
        if (c_reduce->parsed())
            return cmd_reduce(variant, graph_path, out_path, target_path, as_json);
        if (c_registry->parsed()) return cmd_registry(verify, budget, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
