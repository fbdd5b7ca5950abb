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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

struct CliRun {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI through the shell; stderr is discarded unless requested.
CliRun ggkp(const std::string &args, bool keep_stderr = false) {
    std::string cmd = std::string("'") + GGKP_BINARY + "' " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null");
    CliRun r;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    std::array<char, 4096> buf{};
    size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), got);
    }
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string golden(const std::string &name) {
    return slurp(std::string(GGKP_GOLDEN_DIR) + "/" + name);
}

std::string temp_path(const std::string &name) {
    return ::testing::TempDir() + "ggkp_cli_" + name;
}

int count_lines(const std::string &text) {
    int n = 0;
    for (char c : text) {
        n += c == '\n';
    }
    return n;
}

}  // namespace

TEST(cli, usage_errors_exit_two) {
    EXPECT_EQ(ggkp("").exit_code, 2);
    EXPECT_EQ(ggkp("frobnicate").exit_code, 2);
    EXPECT_EQ(ggkp("grid --format png").exit_code, 2);
    EXPECT_EQ(ggkp("grid --L -3").exit_code, 2);
    EXPECT_EQ(ggkp("grid --config /nonexistent/cfg.json").exit_code, 2);
    EXPECT_EQ(ggkp("verify --suite nonsense").exit_code, 2);
    EXPECT_EQ(ggkp("limit-scan --scales 1,0,2").exit_code, 2);
    EXPECT_EQ(ggkp("overlap --resolution 7").exit_code, 2);
}

TEST(cli, help_and_version) {
    EXPECT_EQ(ggkp("--help").exit_code, 0);
    CliRun v = ggkp("--version");
    EXPECT_EQ(v.exit_code, 0);
    EXPECT_NE(v.out.find('.'), std::string::npos);
}

TEST(cli, small_grid_has_one_row_per_point) {
    CliRun r = ggkp("grid --nx 2 --nk 2");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "x,k,re,im,abs");
    EXPECT_EQ(count_lines(r.out), 5);
    EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(cli, grid_is_byte_identical_across_runs) {
    for (const char *format : {"csv", "json", "pgm"}) {
        std::string a = temp_path(std::string("a.") + format);
        std::string b = temp_path(std::string("b.") + format);
        ASSERT_EQ(ggkp(std::string("grid --format ") + format + " --out " + a).exit_code, 0);
        ASSERT_EQ(ggkp(std::string("grid --format ") + format + " --out " + b).exit_code, 0);
        EXPECT_EQ(slurp(a), slurp(b)) << format;
        EXPECT_FALSE(slurp(a).empty());
    }
}

TEST(cli, grid_matches_goldens) {
    EXPECT_EQ(ggkp("grid").out, golden("grid_default.csv"));
    EXPECT_EQ(ggkp("grid --format json --nx 3 --nk 3").out, golden("grid_3x3.json"));
    EXPECT_EQ(ggkp("grid --coords xi --nx 4 --nk 4 --char '1/2,1/2;1/2,1/2'").out, golden("grid_xi_logical1.csv"));
}

TEST(cli, odd_characteristic_vanishes_at_grid_centre) {
    CliRun r = ggkp("grid --char '1/2,1/2;1/2,1/2'");
    ASSERT_EQ(r.exit_code, 0);
    std::istringstream in(r.out);
    std::string line;
    bool found = false;
    while (std::getline(in, line)) {
        if (line.rfind("0,0,", 0) == 0) {
            double abs = std::stod(line.substr(line.rfind(',') + 1));
            EXPECT_LT(abs, 1e-12);
            found = true;
        }
    }
    EXPECT_TRUE(found);
}

TEST(cli, pgm_header_and_size) {
    std::string path = temp_path("heat.pgm");
    ASSERT_EQ(ggkp("grid --format pgm --nx 6 --nk 4 --out " + path).exit_code, 0);
    std::string pgm = slurp(path);
    const std::string header = "P5\n6 4\n65535\n";
    ASSERT_EQ(pgm.size(), header.size() + 2 * 24);
    EXPECT_EQ(pgm.substr(0, header.size()), header);
}

TEST(cli, config_file_and_flag_override) {
    std::string cfg = temp_path("cfg.json");
    {
        std::ofstream(cfg) << R"({"grid": {"nx": 3, "nk": 1}, "L": 5.0})";
    }
    CliRun r = ggkp("grid --config " + cfg);
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(count_lines(r.out), 4);
    EXPECT_NE(ggkp("grid --config " + cfg + " --L 7").out, r.out);
    {
        std::ofstream(cfg) << R"({"grid": {"rows": 3}})";
    }
    EXPECT_EQ(ggkp("grid --config " + cfg).exit_code, 2);
}

TEST(cli, element_reports) {
    CliRun r = ggkp("element --m 1 --n 0 --oracle");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("closed_form: 0.778800783071404"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("quadrature: 0.77880078307140"), std::string::npos) << r.out;
    CliRun id = ggkp("element --oracle");
    EXPECT_NE(id.out.find("closed_form: 1 0i"), std::string::npos) << id.out;
    EXPECT_NE(id.out.find("relative_difference: 0"), std::string::npos) << id.out;
    CliRun plain = ggkp("element --m 2 --n -1");
    EXPECT_EQ(plain.out.find("quadrature"), std::string::npos);
}

TEST(cli, element_quadrature_failure_gives_guidance) {
    std::string cfg = temp_path("quad.json");
    {
        std::ofstream(cfg) << R"({"quadrature": {"node_count": 64, "max_nodes": 128}})";
    }
    CliRun r = ggkp("element --n 400 --oracle --config " + cfg, true);
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_NE(r.out.find("max_nodes"), std::string::npos) << r.out;
}

TEST(cli, verify_is_deterministic_and_matches_golden) {
    CliRun a = ggkp("verify --suite theta --seed 7");
    CliRun b = ggkp("verify --suite theta --seed 7");
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, golden("verify_theta_seed7.json"));
    auto doc = nlohmann::json::parse(a.out);
    EXPECT_EQ(doc["seed"], 7);
    EXPECT_TRUE(doc["passed"].get<bool>());
}

TEST(cli, verify_zak_reports_oracle_error) {
    CliRun r = ggkp("verify --suite zak --seed 3");
    ASSERT_EQ(r.exit_code, 0);
    auto doc = nlohmann::json::parse(r.out);
    bool seen = false;
    for (const auto &c : doc["checks"]) {
        if (c["name"] == "oracle_equivalence") {
            EXPECT_LT(c["max_error"].get<double>(), 1e-8);
            seen = true;
        }
    }
    EXPECT_TRUE(seen);
}

TEST(cli, limit_scan) {
    CliRun r = ggkp("limit-scan --scales 1,2,4");
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_EQ(count_lines(r.out), 4);
    CliRun single = ggkp("limit-scan --scales 3");
    EXPECT_EQ(single.exit_code, 0);
    EXPECT_EQ(count_lines(single.out), 2);
    EXPECT_EQ(ggkp("limit-scan --scales -1").exit_code, 2);
    EXPECT_EQ(ggkp("limit-scan").out, golden("limit_scan.csv"));
}

TEST(cli, overlap_report) {
    CliRun r = ggkp("overlap --resolution 64");
    ASSERT_EQ(r.exit_code, 0);
    std::istringstream in(r.out);
    std::string key;
    double cross = 1, coarse = 1;
    std::string line;
    while (std::getline(in, line)) {
        auto colon = line.find(':');
        key = line.substr(0, colon);
        double v = std::stod(line.substr(colon + 1));
        if (key == "cross_overlap_normalized") cross = v;
        if (key == "cross_overlap_normalized_half_resolution") coarse = v;
    }
    EXPECT_LT(cross, 1e-10);
    EXPECT_LT(coarse, 1e-10);
}
