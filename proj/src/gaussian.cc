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

#include "ggkp/gaussian.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "ggkp/errors.h"

namespace ggkp {

GaussianState::GaussianState(double q_center, double p_center, double sigma)
    : q_(q_center), p_(p_center), sigma_(sigma) {
    if (!std::isfinite(q_center) || !std::isfinite(p_center) || !std::isfinite(sigma)) {
        throw DomainError("GaussianState parameters must be finite.");
    }
    if (sigma < kMinSigma) {
        throw DomainError("GaussianState width " + std::to_string(sigma) + " is below the minimum 1e-3.");
    }
}

GaussianState GaussianState::from_squeezing(double r, double hbar, double q_center, double p_center) {
    if (!(hbar > 0)) {
        throw DomainError("hbar must be positive.");
    }
    return GaussianState(q_center, p_center, std::sqrt(hbar) * std::exp(-r));
}

void QuadConfig::validate() const {
    if (node_count < 64) {
        throw DomainError("QuadConfig.node_count must be at least 64.");
    }
    if (!(half_width_sigmas >= 8.0)) {
        throw DomainError("QuadConfig.half_width_sigmas must be at least 8.");
    }
    if (max_nodes < node_count) {
        throw DomainError("QuadConfig.max_nodes must not be below node_count.");
    }
}

cplx ClosedFormParts::exponent(int64_t m, int64_t n) const {
    double dm = static_cast<double>(m);
    double dn = static_cast<double>(n);
    return log_prefactor - kPi * gamma.quad_form(dm, dn) + eta[0] * dm + eta[1] * dn;
}

cplx wavefunction(const GaussianState &state, double q, double hbar) {
    double s2 = state.sigma() * state.sigma();
    double d = q - state.q_center();
    double norm = std::pow(kPi * s2, -0.25);
    return norm * std::exp(cplx(-d * d / (2.0 * s2), state.p_center() * (q - 0.5 * state.q_center()) / hbar));
}

cplx displaced_wavefunction(const GaussianState &state, int64_t m, int64_t n, const TorusGeometry &geom, double q) {
    double hbar = geom.hbar();
    return apply_displacement([&](double x) { return wavefunction(state, x, hbar); }, m, n, geom, q);
}

namespace {

cplx trapezoid(const std::function<cplx(double)> &f, double lo, double hi, int64_t intervals) {
    double h = (hi - lo) / static_cast<double>(intervals);
    CompensatedSum sum;
    sum.add(0.5 * f(lo));
    sum.add(0.5 * f(hi));
    for (int64_t k = 1; k < intervals; k++) {
        sum.add(f(lo + h * static_cast<double>(k)));
    }
    return sum.value() * h;
}

constexpr double kRefineTolerance = 1e-10;

struct Window {
    double lo;
    double hi;
};

Window gaussian_window(double center_a, double center_b, double width, const QuadConfig &cfg) {
    double pad = cfg.half_width_sigmas * width;
    return {std::min(center_a, center_b) - pad, std::max(center_a, center_b) + pad};
}

}  // namespace

QuadResult integrate_window(
    const std::function<cplx(double)> &f, double lo, double hi, double max_frequency, const QuadConfig &cfg) {
    cfg.validate();
    if (!(hi > lo)) {
        throw DomainError("Integration window is empty.");
    }
    double omega = std::abs(max_frequency);
    bool have_previous = false;
    cplx previous{};
    for (int64_t nodes = cfg.node_count; nodes <= cfg.max_nodes; nodes *= 2) {
        int64_t intervals = nodes - 1;
        double spacing = (hi - lo) / static_cast<double>(intervals);
        // Nyquist: coarser grids alias the phase and are never trusted.
        if (spacing * omega >= kPi) {
            continue;
        }
        cplx current = trapezoid(f, lo, hi, intervals);
        if (have_previous && std::abs(current - previous) < kRefineTolerance) {
            return {current, nodes};
        }
        previous = current;
        have_previous = true;
    }
    throw ResolutionError(
        "Quadrature did not converge within " + std::to_string(cfg.max_nodes) +
        " nodes; the integrand oscillates too fast for the node budget. Increase the node cap.");
}

cplx matrix_element_quadrature(
    const GaussianState &probe,
    const GaussianState &signal,
    const TorusGeometry &geom,
    int64_t m,
    int64_t n,
    const QuadConfig &cfg) {
    double hbar = geom.hbar();
    double shift = static_cast<double>(m) * geom.alpha0();
    double kick = static_cast<double>(n) * geom.beta0();
    auto integrand = [&](double q) {
        return std::conj(wavefunction(probe, q, hbar)) * displaced_wavefunction(signal, m, n, geom, q);
    };
    Window w = gaussian_window(probe.q_center(), signal.q_center() + shift, std::max(probe.sigma(), signal.sigma()), cfg);
    double omega = (kick + signal.p_center() - probe.p_center()) / hbar;
    return integrate_window(integrand, w.lo, w.hi, omega, cfg).value;
}

cplx composed_element_quadrature(
    const GaussianState &probe,
    const GaussianState &signal,
    const TorusGeometry &geom,
    int64_t m1,
    int64_t n1,
    int64_t m2,
    int64_t n2,
    const QuadConfig &cfg) {
    double hbar = geom.hbar();
    auto inner = [&](double x) { return displaced_wavefunction(signal, m2, n2, geom, x); };
    auto integrand = [&](double q) {
        return std::conj(wavefunction(probe, q, hbar)) * apply_displacement(inner, m1, n1, geom, q);
    };
    double shift = static_cast<double>(m1 + m2) * geom.alpha0();
    double kick = static_cast<double>(n1 + n2) * geom.beta0();
    Window w = gaussian_window(probe.q_center(), signal.q_center() + shift, std::max(probe.sigma(), signal.sigma()), cfg);
    double omega = (kick + signal.p_center() - probe.p_center()) / hbar;
    return integrate_window(integrand, w.lo, w.hi, omega, cfg).value;
}

ClosedFormParts closed_form_parts(const GaussianState &probe, const GaussianState &signal, const TorusGeometry &geom) {
    const double hbar = geom.hbar();
    const double theta0 = geom.theta0();
    const double L = geom.L();
    const double P = geom.P();
    const double a2 = probe.sigma() * probe.sigma();
    const double b2 = signal.sigma() * signal.sigma();
    const double s2 = a2 + b2;
    const double qf = probe.q_center();
    const double pf = probe.p_center();
    const double qs = signal.q_center();
    const double ps = signal.p_center();
    const double dq = qs - qf;
    const double dp = ps - pf;

    ClosedFormParts parts;
    parts.gamma.a11 = theta0 * theta0 * L * L / (kTwoPi * s2);
    parts.gamma.a22 = theta0 * theta0 * P * P * a2 * b2 / (kTwoPi * hbar * hbar * s2);
    // Sign fixed by the e^{i beta (q - alpha/2)/hbar} ordering of the displacement.
    parts.gamma.a12 = kI * theta0 * (b2 - a2) / (2.0 * s2);

    parts.eta[0] = (kTwoPi / (P * s2)) * cplx(-hbar * dq, -(pf * a2 + ps * b2));
    parts.eta[1] = (kTwoPi / (L * s2)) * cplx(-a2 * b2 * dp / hbar, qf * b2 + qs * a2);

    // Completing the square at (m, n) = (0, 0).
    cplx c0(-qf * qf / (2.0 * a2) - qs * qs / (2.0 * b2), (pf * qf - ps * qs) / (2.0 * hbar));
    cplx b0(qf / a2 + qs / b2, dp / hbar);
    double a = -0.5 * (1.0 / a2 + 1.0 / b2);
    double log_norm = 0.5 * std::log(2.0 * probe.sigma() * signal.sigma() / s2);
    parts.log_prefactor = log_norm + c0 - b0 * b0 / (4.0 * a);
    return parts;
}

cplx matrix_element_closed_form(const ClosedFormParts &parts, int64_t m, int64_t n) {
    return std::exp(parts.exponent(m, n));
}

cplx matrix_element_closed_form(
    const GaussianState &probe, const GaussianState &signal, const TorusGeometry &geom, int64_t m, int64_t n) {
    return matrix_element_closed_form(closed_form_parts(probe, signal, geom), m, n);
}

}  // namespace ggkp
