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

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ggkp/config.h"
#include "ggkp/emit.h"
#include "ggkp/errors.h"
#include "ggkp/gaussian.h"
#include "ggkp/verify.h"
#include "ggkp/zak.h"

using namespace ggkp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Overrides {
    std::string config_path;
    std::optional<double> hbar;
    std::optional<double> L;
    std::optional<double> P;
    std::optional<double> sigma;
    std::optional<double> tol;
    std::string characteristic;
};

void add_common(CLI::App *cmd, Overrides &o) {
    cmd->add_option("--config", o.config_path, "JSON run configuration");
    cmd->add_option("--hbar", o.hbar, "Action unit");
    cmd->add_option("--L", o.L, "Position period");
    cmd->add_option("--P", o.P, "Momentum period");
    cmd->add_option("--sigma", o.sigma, "Width of both probe and signal");
    cmd->add_option("--tol", o.tol, "Theta truncation tolerance");
    cmd->add_option("--char", o.characteristic, "Theta characteristic 'e1,e2;d1,d2'");
}

RunConfig resolve_config(const Overrides &o) {
    RunConfig cfg = default_config();
    if (!o.config_path.empty()) {
        cfg = load_config_file(o.config_path, cfg);
    }
    if (o.hbar) cfg.hbar = *o.hbar;
    if (o.L) cfg.L = *o.L;
    if (o.P) cfg.P = *o.P;
    if (o.sigma) {
        cfg.probe.sigma = *o.sigma;
        cfg.signal.sigma = *o.sigma;
    }
    if (o.tol) cfg.tolerance = *o.tol;
    if (!o.characteristic.empty()) cfg.characteristic = parse_characteristic(o.characteristic);
    cfg.validate();
    return cfg;
}

void emit(const std::string &out_path, const std::string &content) {
    if (out_path.empty()) {
        std::cout << content;
        std::cout.flush();
    } else {
        write_file(out_path, content);
    }
}

std::string complex_text(cplx z) {
    return format_double(z.real()) + " " + format_double(z.imag()) + "i  |.|=" + format_double(std::abs(z));
}

nlohmann::json grid_metadata(const RunConfig &cfg, const std::string &coords) {
    TorusGeometry geom = cfg.geometry();
    nlohmann::json meta = config_to_json(cfg);
    meta["coords"] = coords;
    meta["theta0"] = geom.theta0();
    meta["alpha0"] = geom.alpha0();
    meta["beta0"] = geom.beta0();
    meta["version"] = GGKP_VERSION;
    return meta;
}

int cmd_grid(const RunConfig &cfg, const std::string &format, const std::string &coords, const std::string &out) {
    QZTDistribution dist = qzt_assemble(cfg.probe.state(), cfg.signal.state(), cfg.geometry(), cfg.characteristic);
    GridTable table;
    if (coords == "xi") {
        // Dimensionless doubled cell [0, 2)^2, endpoint excluded.
        table.columns = {"xi1", "xi2", "re", "im", "abs"};
        for (int64_t j = 0; j < cfg.grid.nk; j++) {
            for (int64_t i = 0; i < cfg.grid.nx; i++) {
                double xi1 = 2.0 * static_cast<double>(i) / static_cast<double>(cfg.grid.nx);
                double xi2 = 2.0 * static_cast<double>(j) / static_cast<double>(cfg.grid.nk);
                cplx v = dist.prefactor() * dist.theta_at({xi1, xi2}, cfg.tolerance).value;
                table.rows.push_back({xi1, xi2, v.real(), v.imag(), std::abs(v)});
            }
        }
    } else {
        table = grid_table(evaluate_grid(dist, cfg.grid, cfg.tolerance));
    }
    if (format == "csv") {
        emit(out, to_csv(table));
    } else if (format == "json") {
        emit(out, to_json(table, grid_metadata(cfg, coords)));
    } else {
        emit(out, to_pgm(table, cfg.grid.nx, cfg.grid.nk));
    }
    return kExitOk;
}

int cmd_element(const RunConfig &cfg, int64_t m, int64_t n, bool oracle) {
    GaussianState probe = cfg.probe.state();
    GaussianState signal = cfg.signal.state();
    TorusGeometry geom = cfg.geometry();
    cplx closed = matrix_element_closed_form(probe, signal, geom, m, n);
    std::cout << "m=" << m << " n=" << n << "\n";
    std::cout << "closed_form: " << complex_text(closed) << "\n";
    if (oracle) {
        cplx quad;
        try {
            quad = matrix_element_quadrature(probe, signal, geom, m, n, cfg.quadrature);
        } catch (const ResolutionError &e) {
            std::cerr << "error: " << e.what() << "\n"
                      << "hint: raise quadrature.max_nodes (or node_count) in the config file.\n";
            return kExitFailure;
        }
        std::cout << "quadrature: " << complex_text(quad) << "\n";
        std::cout << "absolute_difference: " << format_double(std::abs(closed - quad)) << "\n";
        std::cout << "relative_difference: " << format_double(relative_error(closed, quad, 1e-12)) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string &suite, uint64_t seed, const std::string &out) {
    VerifyReport report = run_verify(suite, seed);
    emit(out, report.to_json().dump(2) + "\n");
    std::cerr << report.summary();
    return report.passed() ? kExitOk : kExitFailure;
}

int cmd_limit_scan(const RunConfig &cfg, const std::string &out) {
    auto points = flat_limit_scan(cfg.geometry(), cfg.signal.sigma, cfg.scales);
    std::string csv = "scale,fwhm\n";
    for (const auto &p : points) {
        csv += format_double(p.scale) + "," + format_double(p.fwhm) + "\n";
    }
    emit(out, csv);
    if (points.size() >= 3) {
        for (size_t k = 1; k < points.size(); k++) {
            if (!(points[k].fwhm < points[k - 1].fwhm)) {
                std::cerr << "limit-scan: peak width does not decrease between scales " << points[k - 1].scale << " and "
                          << points[k].scale << "\n";
                return kExitFailure;
            }
        }
    }
    return kExitOk;
}

int cmd_overlap(const RunConfig &cfg) {
    TorusGeometry geom = cfg.geometry();
    LogicalState zero = ggkp_logical(geom, cfg.signal.sigma, 0);
    LogicalState one = ggkp_logical(geom, cfg.signal.sigma, 1);
    OverlapReport r = overlap_report(zero, one, cfg.resolution);
    std::cout << "resolution: " << r.resolution << "\n";
    std::cout << "cross_overlap_normalized: " << format_double(r.normalized) << "\n";
    std::cout << "cross_overlap_normalized_half_resolution: " << format_double(r.normalized_coarse) << "\n";
    std::cout << "norm_logical0: " << format_double(r.norm_a) << "\n";
    std::cout << "norm_logical1: " << format_double(r.norm_b) << "\n";
    return kExitOk;
}

std::vector<double> parse_scales(const std::string &text) {
    std::vector<double> scales;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        double v = 0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception &) {
            throw ConfigError("Scale '" + item + "' is not a number.");
        }
        if (used != item.size()) {
            throw ConfigError("Scale '" + item + "' is not a number.");
        }
        if (!(v > 0)) {
            throw ConfigError("Scales must be positive.");
        }
        scales.push_back(v);
    }
    if (scales.empty()) {
        throw ConfigError("No scales given.");
    }
    return scales;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Generalized GKP states on a quantum torus: Zak transforms, theta functions and checks."};
    app.require_subcommand(1);
    app.set_version_flag("--version", GGKP_VERSION);

    Overrides grid_o, element_o, scan_o, overlap_o;
    std::string out_path;
    std::string format = "csv";
    std::string coords = "phys";
    std::string suite = "all";
    uint64_t seed = 0;
    int64_t m = 0;
    int64_t n = 0;
    bool oracle = false;
    std::string scales_text;
    std::optional<int64_t> resolution;
    std::optional<int64_t> nx;
    std::optional<int64_t> nk;

    CLI::App *grid = app.add_subcommand("grid", "Evaluate the Zak transform on a grid");
    add_common(grid, grid_o);
    grid->add_option("--out", out_path, "Output path (default stdout)");
    grid->add_option("--format", format, "csv, json or pgm")->check(CLI::IsMember({"csv", "json", "pgm"}));
    grid->add_option("--coords", coords, "phys: (x, k) window; xi: dimensionless [0,2)^2 cell")
        ->check(CLI::IsMember({"phys", "xi"}));
    grid->add_option("--nx", nx, "Points along x (or xi1)");
    grid->add_option("--nk", nk, "Points along k (or xi2)");
    grid->add_option("--seed", seed, "Accepted for interface uniformity; grids are deterministic");

    CLI::App *element = app.add_subcommand("element", "Matrix element <phi|D(m alpha0, n beta0)|psi>");
    add_common(element, element_o);
    element->add_option("--m", m, "Position lattice index");
    element->add_option("--n", n, "Momentum lattice index");
    element->add_flag("--oracle", oracle, "Also evaluate by quadrature and compare");

    CLI::App *verify = app.add_subcommand("verify", "Run seeded invariant checks");
    verify->add_option("--suite", suite, "all, theta, matrix, zak or logical");
    verify->add_option("--seed", seed, "Random seed");
    verify->add_option("--out", out_path, "JSON report path (default stdout)");

    CLI::App *scan = app.add_subcommand("limit-scan", "Peak width of logical 0 as both periods grow");
    add_common(scan, scan_o);
    scan->add_option("--scales", scales_text, "Comma separated increasing scale factors");
    scan->add_option("--out", out_path, "Output path (default stdout)");

    CLI::App *overlap = app.add_subcommand("overlap", "Normalized overlap of the two logical states");
    add_common(overlap, overlap_o);
    overlap->add_option("--resolution", resolution, "Grid points per axis on the doubled cell");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*grid) {
            RunConfig cfg = resolve_config(grid_o);
            if (nx) cfg.grid.nx = *nx;
            if (nk) cfg.grid.nk = *nk;
            cfg.validate();
            return cmd_grid(cfg, format, coords, out_path);
        }
        if (*element) {
            return cmd_element(resolve_config(element_o), m, n, oracle);
        }
        if (*verify) {
            auto names = verify_suites();
            if (std::find(names.begin(), names.end(), suite) == names.end()) {
                std::cerr << "error: unknown suite '" << suite << "' (expected all, theta, matrix, zak or logical)\n";
                return kExitUsage;
            }
            return cmd_verify(suite, seed, out_path);
        }
        if (*scan) {
            RunConfig cfg = resolve_config(scan_o);
            if (!scales_text.empty()) {
                cfg.scales = parse_scales(scales_text);
                cfg.validate();
            }
            return cmd_limit_scan(cfg, out_path);
        }
        if (*overlap) {
            RunConfig cfg = resolve_config(overlap_o);
            if (resolution) {
                cfg.resolution = *resolution;
                cfg.validate();
            }
            return cmd_overlap(cfg);
        }
    } catch (const ConfigError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitUsage;
}
