#include "iugehp/config_io.hpp"

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <nlohmann/json.hpp>

#include "iugehp/spectrum.hpp"

namespace iugehp {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw ConfigError("unknown key '" + item.key() + "' in " + where);
        }
    }
}

double get_num(const json& obj, const char* key, double fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_number()) {
        throw ConfigError(std::string("key '") + key + "' must be a number");
    }
    return obj.at(key).get<double>();
}

int get_int(const json& obj, const char* key, int fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_number_integer()) {
        throw ConfigError(std::string("key '") + key + "' must be an integer");
    }
    return obj.at(key).get<int>();
}

bool get_bool(const json& obj, const char* key, bool fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_boolean()) {
        throw ConfigError(std::string("key '") + key + "' must be a boolean");
    }
    return obj.at(key).get<bool>();
}

std::string get_str(const json& obj, const char* key, const std::string& fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_string()) {
        throw ConfigError(std::string("key '") + key + "' must be a string");
    }
    return obj.at(key).get<std::string>();
}

// Short machine-readable kind for a failed table cell
std::string error_kind(const std::exception& e) {
    if (dynamic_cast<const NoRealSolution*>(&e)) return "no-real-solution";
    if (dynamic_cast<const NoBoundStates*>(&e)) return "no-bound-states";
    if (dynamic_cast<const NonNormalizable*>(&e)) return "non-normalizable";
    if (dynamic_cast<const NotBracketed*>(&e)) return "not-bracketed";
    if (dynamic_cast<const ConvergenceError*>(&e)) return "no-convergence";
    if (dynamic_cast<const QuadratureError*>(&e)) return "quadrature";
    if (dynamic_cast<const EmptySpectrum*>(&e)) return "empty-spectrum";
    if (dynamic_cast<const InvalidRoute*>(&e)) return "invalid-route";
    if (dynamic_cast<const DomainError*>(&e)) return "domain";
    if (dynamic_cast<const ConfigError*>(&e)) return "config";
    return "error";
}

std::string cell_text(const EnergyCell& cell) {
    if (cell.ok) return format_full(cell.value);
    return "ERROR(" + cell.error + ")";
}

json cell_json(const EnergyCell& cell) {
    if (cell.ok) return json(cell.value);
    return json("ERROR(" + cell.error + ")");
}

}  // namespace

RunConfig parse_config(const nlohmann::json& doc) {
    if (!doc.is_object()) {
        throw ConfigError("config document must be a JSON object");
    }
    reject_unknown_keys(doc, {"potential", "fields", "units", "run"}, "config root");
    RunConfig out;

    if (doc.contains("potential")) {
        const json& p = doc.at("potential");
        if (!p.is_object()) throw ConfigError("'potential' must be an object");
        reject_unknown_keys(
            p, {"a", "b", "c", "d", "g", "k", "alpha", "delta", "tau"}, "potential");
        PotentialParams& pp = out.model.potential;
        pp.a = get_num(p, "a", 0.0);
        pp.b = get_num(p, "b", 0.0);
        pp.c = get_num(p, "c", 0.0);
        pp.d = get_num(p, "d", 0.0);
        pp.g = get_num(p, "g", 0.0);
        pp.k = get_num(p, "k", 0.0);
        pp.alpha = get_num(p, "alpha", 0.0);
        pp.delta = get_num(p, "delta", 0.0);
        pp.tau = get_num(p, "tau", 0.0);
    }
    if (doc.contains("fields")) {
        const json& f = doc.at("fields");
        if (!f.is_object()) throw ConfigError("'fields' must be an object");
        reject_unknown_keys(f, {"b_field", "phi_ab", "phi0", "freeze_coupling"},
                            "fields");
        FieldConfig& fc = out.model.fields;
        fc.b_field = get_num(f, "b_field", 0.0);
        fc.phi_ab = get_num(f, "phi_ab", 0.0);
        fc.phi0 = get_num(f, "phi0", kTwoPi);
        fc.freeze_coupling = get_bool(f, "freeze_coupling", false);
    }
    if (doc.contains("units")) {
        const json& u = doc.at("units");
        if (!u.is_object()) throw ConfigError("'units' must be an object");
        reject_unknown_keys(u, {"hbar", "mu", "e", "c"}, "units");
        UnitSystem& us = out.model.units;
        us.hbar = get_num(u, "hbar", 1.0);
        us.mu = get_num(u, "mu", 1.0);
        us.e = get_num(u, "e", 1.0);
        us.c = get_num(u, "c", 1.0);
    }
    if (doc.contains("run")) {
        const json& r = doc.at("run");
        if (!r.is_object()) throw ConfigError("'run' must be an object");
        reject_unknown_keys(r,
                            {"m", "variant", "route", "format", "n_list", "m_list",
                             "beta", "beta_grid", "sweep", "count"},
                            "run");
        out.model.m = get_int(r, "m", 0);
        const std::string variant = get_str(r, "variant", "printed");
        if (variant == "printed") {
            out.model.variant = EnergyVariant::printed;
        } else if (variant == "rescaled") {
            out.model.variant = EnergyVariant::rescaled;
        } else {
            throw ConfigError("variant must be 'printed' or 'rescaled', got '" +
                              variant + "'");
        }
        const std::string route = get_str(r, "route", "quadrature");
        if (route == "sum") {
            out.route = Route::sum;
        } else if (route == "quadrature") {
            out.route = Route::quadrature;
        } else if (route == "closed") {
            out.route = Route::closed;
        } else {
            throw ConfigError("route must be 'sum', 'quadrature' or 'closed', got '" +
                              route + "'");
        }
        out.format = get_str(r, "format", "csv");
        if (out.format != "csv" && out.format != "json") {
            throw ConfigError("format must be 'csv' or 'json', got '" + out.format +
                              "'");
        }
        if (r.contains("n_list")) {
            if (!r.at("n_list").is_array()) throw ConfigError("n_list must be an array");
            for (const auto& v : r.at("n_list")) out.n_list.push_back(v.get<int>());
        }
        if (r.contains("m_list")) {
            if (!r.at("m_list").is_array()) throw ConfigError("m_list must be an array");
            for (const auto& v : r.at("m_list")) out.m_list.push_back(v.get<int>());
        }
        out.beta = get_num(r, "beta", 1.0);
        if (r.contains("beta_grid")) {
            if (!r.at("beta_grid").is_array()) {
                throw ConfigError("beta_grid must be an array");
            }
            for (const auto& v : r.at("beta_grid")) {
                out.beta_grid.push_back(v.get<double>());
            }
        }
        if (r.contains("sweep")) {
            const json& s = r.at("sweep");
            if (!s.is_object()) throw ConfigError("'sweep' must be an object");
            reject_unknown_keys(s, {"variable", "start", "stop", "steps"}, "sweep");
            out.sweep.variable = get_str(s, "variable", "beta");
            if (out.sweep.variable != "beta" && out.sweep.variable != "bfield" &&
                out.sweep.variable != "abflux" && out.sweep.variable != "tau") {
                throw ConfigError("sweep variable must be beta, bfield, abflux or tau");
            }
            out.sweep.start = get_num(s, "start", 0.0);
            out.sweep.stop = get_num(s, "stop", 0.0);
            out.sweep.steps = get_int(s, "steps", 2);
            if (out.sweep.steps < 2) throw ConfigError("sweep needs steps >= 2");
            out.has_sweep = true;
        }
        out.count = get_int(r, "count", 3);
        if (out.count < 1) throw ConfigError("count must be >= 1");
    }
    return out;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw ConfigError("config is not valid JSON: " + std::string(e.what()));
    }
    return parse_config(doc);
}

nlohmann::json config_to_json(const RunConfig& config) {
    const PotentialParams& pp = config.model.potential;
    const FieldConfig& fc = config.model.fields;
    const UnitSystem& us = config.model.units;
    json run{
        {"m", config.model.m},
        {"variant",
         config.model.variant == EnergyVariant::printed ? "printed" : "rescaled"},
        {"route", config.route == Route::sum
                      ? "sum"
                      : (config.route == Route::quadrature ? "quadrature" : "closed")},
        {"format", config.format},
        {"beta", config.beta},
        {"count", config.count},
    };
    if (!config.n_list.empty()) run["n_list"] = config.n_list;
    if (!config.m_list.empty()) run["m_list"] = config.m_list;
    if (!config.beta_grid.empty()) run["beta_grid"] = config.beta_grid;
    if (config.has_sweep) {
        run["sweep"] = json{{"variable", config.sweep.variable},
                            {"start", config.sweep.start},
                            {"stop", config.sweep.stop},
                            {"steps", config.sweep.steps}};
    }
    return json{
        {"potential",
         {{"a", pp.a},
          {"b", pp.b},
          {"c", pp.c},
          {"d", pp.d},
          {"g", pp.g},
          {"k", pp.k},
          {"alpha", pp.alpha},
          {"delta", pp.delta},
          {"tau", pp.tau}}},
        {"fields",
         {{"b_field", fc.b_field},
          {"phi_ab", fc.phi_ab},
          {"phi0", fc.phi0},
          {"freeze_coupling", fc.freeze_coupling}}},
        {"units", {{"hbar", us.hbar}, {"mu", us.mu}, {"e", us.e}, {"c", us.c}}},
        {"run", run},
    };
}

std::string format_full(double value) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string energies_csv(const std::vector<EnergyRow>& rows) {
    std::string out = "m,n,E_b0_phi0,E_b_phi0,E_b0_phi,E_b_phi\n";
    for (const EnergyRow& row : rows) {
        out += std::to_string(row.m) + "," + std::to_string(row.n) + "," +
               cell_text(row.e_b0_phi0) + "," + cell_text(row.e_b_phi0) + "," +
               cell_text(row.e_b0_phi) + "," + cell_text(row.e_b_phi) + "\n";
    }
    return out;
}

std::string energies_json(const std::vector<EnergyRow>& rows) {
    json arr = json::array();
    for (const EnergyRow& row : rows) {
        arr.push_back(json{{"m", row.m},
                           {"n", row.n},
                           {"E_b0_phi0", cell_json(row.e_b0_phi0)},
                           {"E_b_phi0", cell_json(row.e_b_phi0)},
                           {"E_b0_phi", cell_json(row.e_b0_phi)},
                           {"E_b_phi", cell_json(row.e_b_phi)}});
    }
    return arr.dump(2) + "\n";
}

std::string thermo_csv(const std::vector<ThermoRow>& rows) {
    std::string out = "sweep,Z,F,U,S,C,M,chi\n";
    for (const ThermoRow& row : rows) {
        out += format_full(row.sweep);
        if (!row.error.empty()) {
            for (int i = 0; i < 7; ++i) out += ",ERROR(" + row.error + ")";
        } else {
            const ThermoResult& p = row.props;
            for (double v : {p.z, p.f, p.u, p.s, p.c, p.m_mag, p.chi}) {
                out += "," + format_full(v);
            }
        }
        out += "\n";
    }
    return out;
}

std::string thermo_json(const std::vector<ThermoRow>& rows) {
    json arr = json::array();
    for (const ThermoRow& row : rows) {
        if (!row.error.empty()) {
            arr.push_back(json{{"sweep", row.sweep}, {"error", row.error}});
            continue;
        }
        const ThermoResult& p = row.props;
        arr.push_back(json{{"sweep", row.sweep},
                           {"Z", p.z},
                           {"F", p.f},
                           {"U", p.u},
                           {"S", p.s},
                           {"C", p.c},
                           {"M", p.m_mag},
                           {"chi", p.chi},
                           {"M_one_sided", row.m_one_sided}});
    }
    return arr.dump(2) + "\n";
}

std::vector<EnergyRow> energy_grid(const RunConfig& config,
                                   const std::vector<int>& n_list,
                                   const std::vector<int>& m_list) {
    const ModelConfig& mc = config.model;
    auto cell = [&](int n, int m, bool with_b, bool with_phi) {
        FieldConfig fields = mc.fields;
        if (!with_b) fields.b_field = 0.0;
        if (!with_phi) fields.phi_ab = 0.0;
        EnergyCell out;
        try {
            out.value = energy(n, m, mc.potential, fields, mc.units, mc.variant).energy;
            out.ok = true;
        } catch (const std::exception& e) {
            out.error = error_kind(e);
        }
        return out;
    };
    std::vector<EnergyRow> rows;
    for (int m : m_list) {
        for (int n : n_list) {
            EnergyRow row;
            row.m = m;
            row.n = n;
            row.e_b0_phi0 = cell(n, m, false, false);
            row.e_b_phi0 = cell(n, m, true, false);
            row.e_b0_phi = cell(n, m, false, true);
            row.e_b_phi = cell(n, m, true, true);
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<ThermoRow> thermo_sweep(const RunConfig& config) {
    std::string variable = "beta";
    std::vector<double> values;
    if (config.has_sweep) {
        variable = config.sweep.variable;
        const double step =
            (config.sweep.stop - config.sweep.start) / (config.sweep.steps - 1);
        for (int i = 0; i < config.sweep.steps; ++i) {
            values.push_back(config.sweep.start + step * i);
        }
    } else if (!config.beta_grid.empty()) {
        values = config.beta_grid;
    } else {
        values = {config.beta};
    }

    std::vector<ThermoRow> rows;
    for (double v : values) {
        ModelConfig mc = config.model;
        double beta = config.beta;
        if (variable == "beta") {
            beta = v;
        } else if (variable == "bfield") {
            mc.fields.b_field = v;
        } else if (variable == "abflux") {
            mc.fields.phi_ab = v;
        } else {
            mc.potential.tau = v;
        }
        ThermoRow row;
        row.sweep = v;
        try {
            row.props = thermo_props(beta, mc, config.route);
            row.m_one_sided = magnetization(beta, mc, config.route).one_sided;
        } catch (const std::exception& e) {
            row.error = error_kind(e);
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace iugehp
