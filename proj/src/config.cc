// Copyright 2026 The ggkp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ggkp/config.h"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "ggkp/errors.h"

namespace ggkp {

namespace {

using nlohmann::json;

void reject_unknown(const json &obj, const std::set<std::string> &allowed, const std::string &where) {
    if (!obj.is_object()) {
        throw ConfigError(where + " must be an object.");
    }
    for (const auto &[key, _] : obj.items()) {
        if (!allowed.contains(key)) {
            throw ConfigError("Unknown configuration key '" + where + "." + key + "'.");
        }
    }
}

double get_number(const json &v, const std::string &name) {
    if (!v.is_number()) {
        throw ConfigError("Configuration key '" + name + "' must be a number.");
    }
    return v.get<double>();
}

int64_t get_integer(const json &v, const std::string &name) {
    if (!v.is_number_integer()) {
        throw ConfigError("Configuration key '" + name + "' must be an integer.");
    }
    return v.get<int64_t>();
}

Rational get_rational(const json &v, const std::string &name) {
    try {
        if (v.is_number_integer()) {
            return Rational(v.get<int64_t>());
        }
        if (v.is_string()) {
            return Rational::parse(v.get<std::string>());
        }
    } catch (const DomainError &e) {
        throw ConfigError("Configuration key '" + name + "': " + e.what());
    }
    throw ConfigError("Configuration key '" + name + "' must be an integer or a rational string like \"1/2\".");
}

void read_state(const json &obj, StateParams &s, const std::string &where) {
    reject_unknown(obj, {"q", "p", "sigma"}, where);
    if (obj.contains("q")) s.q = get_number(obj["q"], where + ".q");
    if (obj.contains("p")) s.p = get_number(obj["p"], where + ".p");
    if (obj.contains("sigma")) s.sigma = get_number(obj["sigma"], where + ".sigma");
}

std::array<Rational, 2> read_pair(const json &v, const std::string &name) {
    if (!v.is_array() || v.size() != 2) {
        throw ConfigError("Configuration key '" + name + "' must be a two-element array.");
    }
    return {get_rational(v[0], name), get_rational(v[1], name)};
}

json rational_pair(const std::array<Rational, 2> &v) {
    return json::array({v[0].str(), v[1].str()});
}

}  // namespace

void RunConfig::validate() const {
    try {
        geometry();
        probe.state();
        signal.state();
        grid.validate();
        quadrature.validate();
    } catch (const DomainError &e) {
        throw ConfigError(e.what());
    }
    if (!(tolerance > 0.0 && tolerance < 1.0)) {
        throw ConfigError("tolerance must lie in (0, 1).");
    }
    if (resolution < 4 || resolution % 2 != 0) {
        throw ConfigError("resolution must be an even integer >= 4.");
    }
    if (scales.empty()) {
        throw ConfigError("scales must not be empty.");
    }
    double previous = 0.0;
    for (double c : scales) {
        if (!(c > previous)) {
            throw ConfigError("scales must be positive and strictly increasing.");
        }
        previous = c;
    }
}

RunConfig default_config() {
    RunConfig cfg;
    if (const char *env = std::getenv("GGKP_TOL"); env != nullptr && *env != '\0') {
        char *end = nullptr;
        double v = std::strtod(env, &end);
        if (end == env || *end != '\0') {
            throw ConfigError(std::string("GGKP_TOL is not a number: '") + env + "'.");
        }
        cfg.tolerance = v;
    }
    return cfg;
}

RunConfig apply_config_json(const json &doc, RunConfig cfg) {
    reject_unknown(
        doc,
        {"hbar", "L", "P", "probe", "signal", "grid", "tolerance", "characteristic", "resolution", "scales", "quadrature"},
        "config");
    if (doc.contains("hbar")) cfg.hbar = get_number(doc["hbar"], "hbar");
    if (doc.contains("L")) cfg.L = get_number(doc["L"], "L");
    if (doc.contains("P")) cfg.P = get_number(doc["P"], "P");
    if (doc.contains("probe")) read_state(doc["probe"], cfg.probe, "probe");
    if (doc.contains("signal")) read_state(doc["signal"], cfg.signal, "signal");
    if (doc.contains("grid")) {
        const json &g = doc["grid"];
        reject_unknown(g, {"x_min", "x_max", "k_min", "k_max", "nx", "nk"}, "grid");
        if (g.contains("x_min")) cfg.grid.x_min = get_number(g["x_min"], "grid.x_min");
        if (g.contains("x_max")) cfg.grid.x_max = get_number(g["x_max"], "grid.x_max");
        if (g.contains("k_min")) cfg.grid.k_min = get_number(g["k_min"], "grid.k_min");
        if (g.contains("k_max")) cfg.grid.k_max = get_number(g["k_max"], "grid.k_max");
        if (g.contains("nx")) cfg.grid.nx = get_integer(g["nx"], "grid.nx");
        if (g.contains("nk")) cfg.grid.nk = get_integer(g["nk"], "grid.nk");
    }
    if (doc.contains("tolerance")) cfg.tolerance = get_number(doc["tolerance"], "tolerance");
    if (doc.contains("characteristic")) {
        const json &c = doc["characteristic"];
        reject_unknown(c, {"epsilon", "delta"}, "characteristic");
        if (c.contains("epsilon")) cfg.characteristic.epsilon = read_pair(c["epsilon"], "characteristic.epsilon");
        if (c.contains("delta")) cfg.characteristic.delta = read_pair(c["delta"], "characteristic.delta");
    }
    if (doc.contains("resolution")) cfg.resolution = get_integer(doc["resolution"], "resolution");
    if (doc.contains("scales")) {
        const json &s = doc["scales"];
        if (!s.is_array()) {
            throw ConfigError("Configuration key 'scales' must be an array.");
        }
        cfg.scales.clear();
        for (const auto &v : s) {
            cfg.scales.push_back(get_number(v, "scales[]"));
        }
    }
    if (doc.contains("quadrature")) {
        const json &q = doc["quadrature"];
        reject_unknown(q, {"half_width_sigmas", "node_count", "max_nodes"}, "quadrature");
        if (q.contains("half_width_sigmas"))
            cfg.quadrature.half_width_sigmas = get_number(q["half_width_sigmas"], "quadrature.half_width_sigmas");
        if (q.contains("node_count")) cfg.quadrature.node_count = get_integer(q["node_count"], "quadrature.node_count");
        if (q.contains("max_nodes")) cfg.quadrature.max_nodes = get_integer(q["max_nodes"], "quadrature.max_nodes");
    }
    return cfg;
}

RunConfig load_config_file(const std::string &path, RunConfig base) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("Cannot read config file '" + path + "'.");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw ConfigError("Config file '" + path + "' is not valid JSON: " + e.what());
    }
    return apply_config_json(doc, std::move(base));
}

json config_to_json(const RunConfig &cfg) {
    auto state = [](const StateParams &s) { return json{{"q", s.q}, {"p", s.p}, {"sigma", s.sigma}}; };
    return json{
        {"hbar", cfg.hbar},
        {"L", cfg.L},
        {"P", cfg.P},
        {"probe", state(cfg.probe)},
        {"signal", state(cfg.signal)},
        {"grid",
         {{"x_min", cfg.grid.x_min},
          {"x_max", cfg.grid.x_max},
          {"k_min", cfg.grid.k_min},
          {"k_max", cfg.grid.k_max},
          {"nx", cfg.grid.nx},
          {"nk", cfg.grid.nk}}},
        {"tolerance", cfg.tolerance},
        {"characteristic",
         {{"epsilon", rational_pair(cfg.characteristic.epsilon)}, {"delta", rational_pair(cfg.characteristic.delta)}}},
        {"resolution", cfg.resolution},
        {"scales", cfg.scales},
        {"quadrature",
         {{"half_width_sigmas", cfg.quadrature.half_width_sigmas},
          {"node_count", cfg.quadrature.node_count},
          {"max_nodes", cfg.quadrature.max_nodes}}},
    };
}

ThetaCharacteristic parse_characteristic(const std::string &text) {
    auto semi = text.find(';');
    if (semi == std::string::npos) {
        throw ConfigError("Characteristic must look like 'e1,e2;d1,d2'.");
    }
    auto pair = [&](const std::string &part) {
        auto comma = part.find(',');
        if (comma == std::string::npos) {
            throw ConfigError("Characteristic must look like 'e1,e2;d1,d2'.");
        }
        try {
            return std::array<Rational, 2>{Rational::parse(part.substr(0, comma)), Rational::parse(part.substr(comma + 1))};
        } catch (const DomainError &e) {
            throw ConfigError(e.what());
        }
    };
    return {pair(text.substr(0, semi)), pair(text.substr(semi + 1))};
}

}  // namespace ggkp
