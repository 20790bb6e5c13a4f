#pragma once
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "iugehp/core_model.hpp"
#include "iugehp/thermo.hpp"

namespace iugehp {

struct SweepSpec {
    std::string variable;  // beta | bfield | abflux | tau
    double start = 0.0;
    double stop = 0.0;
    int steps = 0;  // >= 2
};

// One JSON document with sections potential/fields/units/run. Unknown keys
// anywhere are a hard error so parameter-name typos cannot pass silently.
struct RunConfig {
    ModelConfig model;
    Route route = Route::quadrature;
    std::string format = "csv";  // csv | json
    std::vector<int> n_list;
    std::vector<int> m_list;
    double beta = 1.0;
    std::vector<double> beta_grid;
    SweepSpec sweep;
    bool has_sweep = false;
    int count = 3;
};

RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);
nlohmann::json config_to_json(const RunConfig& config);

// %.17g, enough digits for exact round-trip of doubles in golden files.
std::string format_full(double value);

// --- tabular emitters (the CLI writes these verbatim) ---

struct EnergyCell {
    bool ok = false;
    double value = 0.0;
    std::string error;  // short error kind when !ok
};

struct EnergyRow {
    int m = 0;
    int n = 0;
    EnergyCell e_b0_phi0, e_b_phi0, e_b0_phi, e_b_phi;
};

// Header exactly: m,n,E_b0_phi0,E_b_phi0,E_b0_phi,E_b_phi
std::string energies_csv(const std::vector<EnergyRow>& rows);
std::string energies_json(const std::vector<EnergyRow>& rows);

struct ThermoRow {
    double sweep = 0.0;
    ThermoResult props;
    bool m_one_sided = false;
    std::string error;  // route failure for this row, empty when fine
};

// Header exactly: sweep,Z,F,U,S,C,M,chi
std::string thermo_csv(const std::vector<ThermoRow>& rows);
std::string thermo_json(const std::vector<ThermoRow>& rows);

// Four-column energy grid at field combinations (0,0), (B,0), (0,phi), (B,phi)
// taken from the config's field block; errors become explicit cells.
std::vector<EnergyRow> energy_grid(const RunConfig& config,
                                   const std::vector<int>& n_list,
                                   const std::vector<int>& m_list);

std::vector<ThermoRow> thermo_sweep(const RunConfig& config);

}  // namespace iugehp
