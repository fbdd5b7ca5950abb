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

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ggkp/config.h"
#include "ggkp/emit.h"
#include "ggkp/errors.h"
#include "ggkp/sampling.h"
#include "ggkp/verify.h"

using namespace ggkp;
using nlohmann::json;

TEST(config, defaults_are_valid) {
    RunConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    EXPECT_EQ(cfg.L, kTwoPi);
    EXPECT_EQ(cfg.tolerance, 1e-10);
    EXPECT_EQ(cfg.characteristic, ThetaCharacteristic::zero());
}

TEST(config, json_overrides_and_round_trips) {
    json doc = {
        {"hbar", 1.5},
        {"L", 3.0},
        {"probe", {{"q", 0.25}, {"sigma", 0.8}}},
        {"grid", {{"nx", 3}, {"nk", 7}}},
        {"characteristic", {{"epsilon", {"1/2", 0}}, {"delta", {"1/2", "1/2"}}}},
        {"scales", {1, 3}},
    };
    RunConfig cfg = apply_config_json(doc, RunConfig{});
    EXPECT_EQ(cfg.hbar, 1.5);
    EXPECT_EQ(cfg.L, 3.0);
    EXPECT_EQ(cfg.P, kTwoPi);
    EXPECT_EQ(cfg.probe.q, 0.25);
    EXPECT_EQ(cfg.probe.p, 0.0);
    EXPECT_EQ(cfg.probe.sigma, 0.8);
    EXPECT_EQ(cfg.grid.nx, 3);
    EXPECT_EQ(cfg.characteristic.epsilon[0], Rational(1, 2));
    EXPECT_EQ(cfg.characteristic.epsilon[1], Rational(0));
    EXPECT_EQ(cfg.scales, (std::vector<double>{1, 3}));

    RunConfig again = apply_config_json(config_to_json(cfg), RunConfig{});
    EXPECT_EQ(config_to_json(again), config_to_json(cfg));
}

TEST(config, rejects_unknown_and_mistyped_keys) {
    EXPECT_THROW(apply_config_json({{"sigma", 1.0}}, RunConfig{}), ConfigError);
    EXPECT_THROW(apply_config_json({{"probe", {{"width", 1.0}}}}, RunConfig{}), ConfigError);
    EXPECT_THROW(apply_config_json({{"L", "six"}}, RunConfig{}), ConfigError);
    EXPECT_THROW(apply_config_json({{"grid", {{"nx", 2.5}}}}, RunConfig{}), ConfigError);
    EXPECT_THROW(apply_config_json({{"characteristic", {{"epsilon", {"1/2"}}}}}, RunConfig{}), ConfigError);
    EXPECT_THROW(apply_config_json({{"characteristic", {{"delta", {"a/b", 0}}}}}, RunConfig{}), ConfigError);
    EXPECT_THROW(apply_config_json(json::array(), RunConfig{}), ConfigError);
}

TEST(config, validate_reports_invalid_values) {
    auto invalid = [](auto mutate) {
        RunConfig cfg;
        mutate(cfg);
        EXPECT_THROW(cfg.validate(), ConfigError);
    };
    invalid([](RunConfig &c) { c.L = -1; });
    invalid([](RunConfig &c) { c.hbar = 0; });
    invalid([](RunConfig &c) { c.signal.sigma = 1e-4; });
    invalid([](RunConfig &c) { c.grid.nk = 0; });
    invalid([](RunConfig &c) { c.tolerance = 1.0; });
    invalid([](RunConfig &c) { c.resolution = 63; });
    invalid([](RunConfig &c) { c.scales = {2, 1}; });
    invalid([](RunConfig &c) { c.scales = {}; });
    invalid([](RunConfig &c) { c.quadrature.node_count = 1; });
}

TEST(config, file_loading) {
    std::string path = ::testing::TempDir() + "ggkp_cfg.json";
    {
        std::ofstream(path) << R"({"P": 4.0, "tolerance": 1e-12})";
    }
    RunConfig cfg = load_config_file(path, RunConfig{});
    EXPECT_EQ(cfg.P, 4.0);
    EXPECT_EQ(cfg.tolerance, 1e-12);
    {
        std::ofstream(path) << "{not json";
    }
    EXPECT_THROW(load_config_file(path, RunConfig{}), ConfigError);
    EXPECT_THROW(load_config_file(path + ".missing", RunConfig{}), ConfigError);
}

TEST(config, tolerance_from_environment) {
    ASSERT_EQ(setenv("GGKP_TOL", "1e-8", 1), 0);
    EXPECT_EQ(default_config().tolerance, 1e-8);
    ASSERT_EQ(setenv("GGKP_TOL", "tight", 1), 0);
    EXPECT_THROW(default_config(), ConfigError);
    unsetenv("GGKP_TOL");
    EXPECT_EQ(default_config().tolerance, kDefaultThetaTolerance);
}

TEST(config, characteristic_text) {
    ThetaCharacteristic ch = parse_characteristic("1/2,0;0,1/2");
    EXPECT_EQ(ch.epsilon[0], Rational(1, 2));
    EXPECT_EQ(ch.delta[1], Rational(1, 2));
    EXPECT_EQ(parse_characteristic("0,0;0,0"), ThetaCharacteristic::zero());
    EXPECT_THROW(parse_characteristic("0,0"), ConfigError);
    EXPECT_THROW(parse_characteristic("0;0,0"), ConfigError);
    EXPECT_THROW(parse_characteristic("x,0;0,0"), ConfigError);
}

TEST(emit, format_double_is_shortest_round_trip) {
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(-2.0), "-2");
    EXPECT_EQ(format_double(1e-300), "1e-300");
    EXPECT_EQ(format_double(12.566370614358137), "12.566370614358137");
}

TEST(emit, csv_round_trip_is_exact) {
    Sampler s(3);
    GridTable t;
    for (int i = 0; i < 200; i++) {
        t.rows.push_back({s.uniform(-1, 1), s.uniform(-1e5, 1e5), s.uniform(-1e-300, 1e-300), std::ldexp(s.uniform(0, 1), -1070), 0.0});
    }
    std::string csv = to_csv(t);
    GridTable back = parse_csv(csv);
    ASSERT_EQ(back.rows.size(), t.rows.size());
    for (size_t i = 0; i < t.rows.size(); i++) {
        for (size_t c = 0; c < 5; c++) {
            EXPECT_EQ(back.rows[i][c], t.rows[i][c]);
        }
    }
    EXPECT_EQ(to_csv(back), csv);
}

TEST(emit, csv_rejects_malformed_text) {
    EXPECT_THROW(parse_csv("x,k,re,im,abs"), ConfigError);
    EXPECT_THROW(parse_csv("x,k,re\n"), ConfigError);
    EXPECT_THROW(parse_csv("x,k,re,im,abs\n1,2,3,4\n"), ConfigError);
    EXPECT_THROW(parse_csv("x,k,re,im,abs\n1,2,3,4,five\n"), ConfigError);
}

TEST(emit, grid_walks_x_fastest) {
    GaussianState vac = GaussianState::vacuum();
    QZTDistribution d = qzt_assemble(vac, vac, TorusGeometry(kTwoPi, kTwoPi));
    GridSpec g;
    g.nx = 3;
    g.nk = 2;
    GridTable t = grid_table(evaluate_grid(d, g));
    ASSERT_EQ(t.rows.size(), 6u);
    EXPECT_EQ(t.rows[0][0], -0.5);
    EXPECT_EQ(t.rows[1][0], 0.0);
    EXPECT_EQ(t.rows[2][0], 0.5);
    EXPECT_EQ(t.rows[3][1], 0.5);
    for (const auto &row : t.rows) {
        EXPECT_EQ(row[4], std::abs(cplx(row[2], row[3])));
    }
}

TEST(emit, pgm_layout) {
    GridTable t;
    t.rows = {{0, 0, 0, 0, 1.0}, {0, 0, 0, 0, 3.0}, {0, 0, 0, 0, 2.0}, {0, 0, 0, 0, 1.0}};
    std::string pgm = to_pgm(t, 2, 2);
    const std::string header = "P5\n2 2\n65535\n";
    ASSERT_EQ(pgm.size(), header.size() + 8);
    EXPECT_EQ(pgm.substr(0, header.size()), header);
    auto level = [&](int i) {
        return (static_cast<unsigned char>(pgm[header.size() + 2 * i]) << 8) |
               static_cast<unsigned char>(pgm[header.size() + 2 * i + 1]);
    };
    EXPECT_EQ(level(0), 0);
    EXPECT_EQ(level(1), 65535);
    EXPECT_EQ(level(2), 32768);
    EXPECT_THROW(to_pgm(t, 3, 2), DomainError);
}

TEST(emit, json_carries_metadata) {
    GridTable t;
    t.rows = {{0.5, -0.25, 1.0, 0.0, 1.0}};
    json doc = json::parse(to_json(t, {{"seed", 7}}));
    EXPECT_EQ(doc["metadata"]["seed"], 7);
    EXPECT_EQ(doc["columns"], json({"x", "k", "re", "im", "abs"}));
    EXPECT_EQ(doc["rows"][0][1], -0.25);
}

TEST(verify, reports_are_deterministic) {
    VerifyReport a = run_verify("theta", 11);
    VerifyReport b = run_verify("theta", 11);
    EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
    EXPECT_TRUE(a.passed()) << a.summary();
    EXPECT_EQ(a.to_json()["seed"], 11);
}

TEST(verify, every_suite_passes) {
    for (const std::string &suite : verify_suites()) {
        VerifyReport r = run_verify(suite, 5);
        EXPECT_TRUE(r.passed()) << r.summary();
        EXPECT_FALSE(r.checks.empty());
    }
}

TEST(verify, unknown_suite_is_a_config_error) {
    EXPECT_THROW(run_verify("nonsense", 1), ConfigError);
}
