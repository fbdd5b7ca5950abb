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

#include "ggkp/verify.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "ggkp/errors.h"
#include "ggkp/gaussian.h"
#include "ggkp/sampling.h"
#include "ggkp/theta.h"
#include "ggkp/zak.h"

namespace ggkp {

namespace {

class Tracker {
   public:
    Tracker(std::string suite, std::string name, double threshold)
        : result_{std::move(suite), std::move(name), 0, 0.0, threshold, true} {
    }
    void record(double error) {
        result_.cases++;
        if (!(error <= result_.max_error)) {
            result_.max_error = std::isnan(error) ? INFINITY : error;
        }
    }
    CheckResult finish() {
        result_.passed = result_.max_error <= result_.threshold;
        return result_;
    }

   private:
    CheckResult result_;
};

double round3(double v) {
    if (v == 0.0 || !std::isfinite(v)) {
        return v;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2e", v);
    return std::strtod(buf, nullptr);
}

Vec2c random_xi(Sampler &s, double imag_spread) {
    return {cplx(s.uniform(-2, 2), s.uniform(-imag_spread, imag_spread)),
            cplx(s.uniform(-2, 2), s.uniform(-imag_spread, imag_spread))};
}

void theta_suite(uint64_t seed, std::vector<CheckResult> &out) {
    Sampler s(seed);
    const std::string suite = "theta";

    Tracker periodic(suite, "integer_periodicity", 1e-12);
    Tracker quasi(suite, "quasi_periodicity", 1e-10);
    Tracker even(suite, "evenness", 1e-12);
    Tracker certified(suite, "certified_tail_bound", 1.0);
    for (int t = 0; t < 20; t++) {
        PeriodMatrix om = sample_period_matrix(s);
        Vec2c xi = random_xi(s, 0.3);
        cplx base = riemann_theta(xi, om).value;
        for (int j = 0; j < 2; j++) {
            Vec2c shifted = xi;
            shifted[j] += 1.0;
            periodic.record(relative_error(riemann_theta(shifted, om).value, base));

            const SymMat2 &o = om.omega();
            Vec2c moved = xi;
            moved[0] += j == 0 ? o.a11 : o.a12;
            moved[1] += j == 0 ? o.a12 : o.a22;
            cplx ojj = j == 0 ? o.a11 : o.a22;
            cplx expected = std::exp(-kI * kPi * ojj - 2.0 * kPi * kI * xi[j]) * base;
            quasi.record(relative_error(riemann_theta(moved, om).value, expected));
        }
        even.record(relative_error(riemann_theta({-xi[0], -xi[1]}, om).value, base));

        ThetaValue tv = riemann_theta(xi, om);
        cplx wide = riemann_theta_box(xi, om, ThetaCharacteristic::zero(), tv.truncation_radius + 8);
        double envelope = tv.tail_bound / lattice_tail_bound(2, om.imag_min_eigenvalue(), tv.truncation_radius);
        certified.record(std::abs(tv.value - wide) / (tv.tail_bound + 1e-14 * envelope));
    }
    out.push_back(periodic.finish());
    out.push_back(quasi.finish());
    out.push_back(even.finish());
    out.push_back(certified.finish());

    Tracker inversion(suite, "modular_inversion", 1e-9);
    for (int t = 0; t < 20; t++) {
        cplx tau(s.uniform(-0.5, 0.5), s.uniform(0.02, 0.05));
        cplx z(s.uniform(-1, 1), s.uniform(-0.01, 0.01));
        // Relative error against a quad-precision direct sum. The floor is the
        // change that rounding z and tau to double alone can cause.
        ThetaReference reference = jacobi_theta3_reference(z, tau, 2000);
        double floor = kBackwardErrorUlps * kUnitRoundoff * reference.sensitivity;
        inversion.record(mixed_error(jacobi_theta3(z, tau, 1e-15).value, reference.value, 1e-9, floor));
    }
    out.push_back(inversion.finish());

    Tracker factor(suite, "diagonal_factorization", 1e-11);
    for (int t = 0; t < 20; t++) {
        PeriodMatrix om = PeriodMatrix::diagonal(cplx(s.uniform(-1, 1), s.uniform(0.06, 2.0)),
                                                 cplx(s.uniform(-1, 1), s.uniform(0.06, 2.0)));
        FactorizationCheck fc = diagonal_factorization_check(om, random_xi(s, 0.2));
        factor.record(relative_error(fc.genus2.value, fc.product.value));
    }
    out.push_back(factor.finish());
}

void matrix_suite(uint64_t seed, std::vector<CheckResult> &out) {
    Sampler s(seed + 1);
    const std::string suite = "matrix";

    Tracker oracle(suite, "oracle_equivalence", 1e-8);
    Tracker hermitian(suite, "hermiticity", 1e-10);
    Tracker norm(suite, "normalization", 1e-10);
    Tracker positive(suite, "gamma_positive_definite", 0.0);
    for (int t = 0; t < 30; t++) {
        ElementCase c = sample_element_case(s);
        ClosedFormParts parts = closed_form_parts(c.probe, c.signal, c.geom);
        for (int r = 0; r < 3; r++) {
            int64_t m = s.integer(-4, 4);
            int64_t n = s.integer(-4, 4);
            cplx quad = matrix_element_quadrature(c.probe, c.signal, c.geom, m, n);
            oracle.record(mixed_error(matrix_element_closed_form(parts, m, n), quad, 1e-8, 1e-12));
        }
        int64_t m = s.integer(-2, 2);
        int64_t n = s.integer(-2, 2);
        // D_{m,n}^dagger = D_{-m,-n}: swapping the states exchanges the widths
        // inside the closed form, so this is not a tautology.
        cplx fwd = matrix_element_closed_form(parts, m, n);
        cplx back = std::conj(matrix_element_closed_form(c.signal, c.probe, c.geom, -m, -n));
        hermitian.record(relative_error(fwd, back));
        norm.record(std::abs(matrix_element_quadrature(c.signal, c.signal, c.geom, 0, 0).real() - 1.0));
        bool pd = parts.gamma.a11.real() > 0 && parts.gamma.a22.real() > 0 &&
                  parts.gamma.a11.real() * parts.gamma.a22.real() - parts.gamma.a12.real() * parts.gamma.a12.real() > 0;
        positive.record(pd ? 0.0 : 1.0);
    }
    out.push_back(oracle.finish());
    out.push_back(hermitian.finish());
    out.push_back(norm.finish());
    out.push_back(positive.finish());

    Tracker twisted(suite, "twisted_multiplication", 1e-6);
    ElementCase c = sample_element_case(s);
    for (int64_t m1 = -1; m1 <= 1; m1++) {
        for (int64_t n1 = -1; n1 <= 1; n1++) {
            for (int64_t m2 = -1; m2 <= 1; m2++) {
                for (int64_t n2 = -1; n2 <= 1; n2++) {
                    cplx composed = composed_element_quadrature(c.probe, c.signal, c.geom, m1, n1, m2, n2);
                    cplx phase = std::polar(1.0, kPi * c.geom.theta0() * static_cast<double>(n1 * m2 - m1 * n2));
                    cplx single = matrix_element_quadrature(c.probe, c.signal, c.geom, m1 + m2, n1 + n2);
                    twisted.record(mixed_error(composed, phase * single, 1e-6, 1e-12));
                }
            }
        }
    }
    out.push_back(twisted.finish());
}

void zak_suite(uint64_t seed, std::vector<CheckResult> &out) {
    Sampler s(seed + 2);
    const std::string suite = "zak";

    Tracker oracle(suite, "oracle_equivalence", 1e-8);
    for (int t = 0; t < 2; t++) {
        ElementCase c = sample_zak_case(s);
        QZTDistribution dist = qzt_assemble(c.probe, c.signal, c.geom);
        LatticeElements elements = quadrature_elements(c.probe, c.signal, c.geom, 12);
        for (int p = 0; p < 5; p++) {
            double x = s.uniform(-1, 1);
            double k = s.uniform(-1, 1);
            oracle.record(relative_error(qzt_eval(dist, x, k), zak_lattice_sum(elements, c.geom, x, k)));
        }
    }
    out.push_back(oracle.finish());

    Tracker factor(suite, "factorized_consistency", 1e-11);
    Tracker periodic(suite, "phase_space_periodicity", 1e-10);
    Tracker uncertainty(suite, "lattice_uncertainty", 1e-15);
    for (int t = 0; t < 10; t++) {
        TorusGeometry geom(s.uniform(3, 8), s.uniform(3, 8), s.uniform(0.5, 1.5));
        double sigma = s.uniform(0.7, 1.3);
        GaussianState vac = GaussianState::vacuum(sigma);
        QZTDistribution dist = qzt_assemble(vac, vac, geom);
        double x = s.uniform(-1, 1);
        double k = s.uniform(-1, 1);
        // Errors are measured against the series scale: between comb peaks
        // the value is a cancellation far below the size of its terms.
        const double tight = 1e-15;
        cplx value = qzt_eval(dist, x, k, tight);
        double scale = dist.series_scale(x, k);
        Vec2c xi = dist.xi(x, k);
        cplx product = dist.prefactor() * jacobi_theta3(xi[0], dist.omega().omega().a11, tight).value *
                       jacobi_theta3(xi[1], dist.omega().omega().a22, tight).value;
        factor.record(std::abs(value - product) / scale);
        periodic.record(std::abs(qzt_eval(dist, x + 1.0 / geom.beta0(), k, tight) - value) / scale);
        periodic.record(std::abs(qzt_eval(dist, x, k + 1.0 / geom.alpha0(), tight) - value) / scale);
        double expected = 0.25 * geom.theta0() * geom.theta0();
        uncertainty.record(std::abs(lattice_uncertainty(geom, sigma) - expected) / expected);
    }
    out.push_back(factor.finish());
    out.push_back(periodic.finish());
    out.push_back(uncertainty.finish());
}

void logical_suite(uint64_t seed, std::vector<CheckResult> &out) {
    Sampler s(seed + 3);
    const std::string suite = "logical";

    Tracker ortho(suite, "orthogonality", 1e-10);
    Tracker self(suite, "self_overlap", 1e-12);
    Tracker zero(suite, "logical_one_vanishes_at_origin", 1e-10);
    for (int t = 0; t < 2; t++) {
        TorusGeometry geom(kTwoPi * s.uniform(0.8, 1.2), kTwoPi * s.uniform(0.8, 1.2));
        double sigma = s.uniform(0.8, 1.2);
        LogicalState zero_l = ggkp_logical(geom, sigma, 0);
        LogicalState one_l = ggkp_logical(geom, sigma, 1);
        ortho.record(overlap_report(zero_l, one_l, 128).normalized);
        self.record(std::abs(overlap_report(zero_l, zero_l, 64).normalized - 1.0));
        Vec2c origin{0.0, 0.0};
        zero.record(std::abs(one_l.distribution.theta_at(origin).value) /
                    std::abs(zero_l.distribution.theta_at(origin).value));
    }
    out.push_back(ortho.finish());
    out.push_back(self.finish());
    out.push_back(zero.finish());

    Tracker scan(suite, "flat_limit_sharpening", 0.0);
    const double scales[] = {1.0, 2.0, 4.0};
    auto points = flat_limit_scan(TorusGeometry(kTwoPi, kTwoPi), 1.0, scales);
    for (size_t k = 1; k < points.size(); k++) {
        scan.record(points[k].fwhm < points[k - 1].fwhm ? 0.0 : 1.0);
    }
    for (const auto &p : points) {
        scan.record(std::abs(p.center - std::round(p.center)) <= 1.0 / kScanSamples ? 0.0 : 1.0);
    }
    out.push_back(scan.finish());
}

}  // namespace

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json items = nlohmann::json::array();
    for (const auto &c : checks) {
        items.push_back({{"suite", c.suite},
                         {"name", c.name},
                         {"cases", c.cases},
                         {"max_error", round3(c.max_error)},
                         {"threshold", c.threshold},
                         {"passed", c.passed}});
    }
    return {{"suite", suite}, {"seed", seed}, {"passed", passed()}, {"checks", items}};
}

std::string VerifyReport::summary() const {
    std::string out;
    for (const auto &c : checks) {
        char line[256];
        std::snprintf(
            line, sizeof(line), "[%s] %s.%s  cases=%lld  max_error=%.2e  threshold=%.0e\n", c.passed ? "PASS" : "FAIL",
            c.suite.c_str(), c.name.c_str(), static_cast<long long>(c.cases), c.max_error, c.threshold);
        out += line;
    }
    out += passed() ? "verify: all checks passed\n" : "verify: FAILED\n";
    return out;
}

const std::vector<std::string> &verify_suites() {
    static const std::vector<std::string> names{"all", "theta", "matrix", "zak", "logical"};
    return names;
}

VerifyReport run_verify(std::string_view suite, uint64_t seed) {
    using Runner = std::function<void(uint64_t, std::vector<CheckResult> &)>;
    const std::vector<std::pair<std::string, Runner>> runners{
        {"theta", theta_suite}, {"matrix", matrix_suite}, {"zak", zak_suite}, {"logical", logical_suite}};
    VerifyReport report;
    report.suite = std::string(suite);
    report.seed = seed;
    bool known = suite == "all";
    for (const auto &[name, run] : runners) {
        if (suite == "all" || suite == name) {
            known = true;
            run(seed, report.checks);
        }
    }
    if (!known) {
        throw ConfigError("Unknown verify suite '" + std::string(suite) + "'.");
    }
    return report;
}

}  // namespace ggkp
