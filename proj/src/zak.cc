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

#include "ggkp/zak.h"

#include <algorithm>
#include <cmath>

#include "ggkp/errors.h"

namespace ggkp {

namespace {

PeriodMatrix period_matrix_from(const ClosedFormParts &parts) {
    const SymMat2 &g = parts.gamma;
    return PeriodMatrix(kI * g.a11, kI * g.a12, kI * g.a22);
}

}  // namespace

QZTDistribution::QZTDistribution(const TorusGeometry &geom, const ClosedFormParts &parts, const ThetaCharacteristic &ch)
    : geom_(geom),
      parts_(parts),
      char_(ch),
      omega_(period_matrix_from(parts)),
      xi_offset_{parts.eta[0] / (kTwoPi * kI), parts.eta[1] / (kTwoPi * kI)} {
}

Vec2c QZTDistribution::xi(double x, double k) const {
    return {-geom_.alpha0() * k + xi_offset_[0], geom_.beta0() * x + xi_offset_[1]};
}

ThetaValue QZTDistribution::theta_at(const Vec2c &xi, double tol) const {
    return riemann_theta(xi, omega_, char_, tol);
}

double QZTDistribution::series_scale(double x, double k, double tol) const {
    // |exp(i pi v.Omega.v + 2 pi i v.(xi + delta))| = exp(-pi v.Y.v - 2 pi v.Im xi)
    // with v = m + eps, which is the general term of Theta[eps; 0](i Im xi | i Y).
    const Vec2c z = xi(x, k);
    const SymMat2 &o = omega_.omega();
    PeriodMatrix y(cplx(0.0, o.a11.imag()), cplx(0.0, o.a12.imag()), cplx(0.0, o.a22.imag()));
    ThetaCharacteristic moduli{char_.epsilon, {Rational(0), Rational(0)}};
    cplx sum = riemann_theta({cplx(0.0, z[0].imag()), cplx(0.0, z[1].imag())}, y, moduli, tol).value;
    return std::abs(prefactor()) * sum.real();
}

QZTDistribution qzt_assemble(
    const GaussianState &probe, const GaussianState &signal, const TorusGeometry &geom, const ThetaCharacteristic &ch) {
    return QZTDistribution(geom, closed_form_parts(probe, signal, geom), ch);
}

cplx qzt_eval(const QZTDistribution &dist, double x, double k, double tol) {
    return dist.prefactor() * dist.theta_at(dist.xi(x, k), tol).value;
}

LatticeElements quadrature_elements(
    const GaussianState &probe, const GaussianState &signal, const TorusGeometry &geom, int64_t radius, const QuadConfig &cfg) {
    if (radius < 0) {
        throw DomainError("Lattice radius must be non-negative.");
    }
    LatticeElements out;
    out.radius = radius;
    out.values.reserve(static_cast<size_t>((2 * radius + 1) * (2 * radius + 1)));
    for (int64_t m = -radius; m <= radius; m++) {
        for (int64_t n = -radius; n <= radius; n++) {
            out.values.push_back(matrix_element_quadrature(probe, signal, geom, m, n, cfg));
        }
    }
    return out;
}

cplx zak_lattice_sum(const LatticeElements &elements, const TorusGeometry &geom, double x, double k) {
    CompensatedSum sum;
    int64_t r = elements.radius;
    for (int64_t m = -r; m <= r; m++) {
        for (int64_t n = -r; n <= r; n++) {
            double angle = kTwoPi * (static_cast<double>(n) * geom.beta0() * x - static_cast<double>(m) * geom.alpha0() * k);
            sum.add(elements.at(m, n) * std::polar(1.0, angle));
        }
    }
    return sum.value();
}

cplx qzt_brute_force(
    const GaussianState &probe,
    const GaussianState &signal,
    const TorusGeometry &geom,
    double x,
    double k,
    int64_t radius,
    const QuadConfig &cfg) {
    return zak_lattice_sum(quadrature_elements(probe, signal, geom, radius, cfg), geom, x, k);
}

std::pair<cplx, cplx> squeezed_vacuum_tau(const TorusGeometry &geom, double sigma) {
    GaussianState vac = GaussianState::vacuum(sigma);
    ClosedFormParts parts = closed_form_parts(vac, vac, geom);
    return {kI * parts.gamma.a11, kI * parts.gamma.a22};
}

double lattice_uncertainty(const TorusGeometry &geom, double sigma) {
    auto [tau1, tau2] = squeezed_vacuum_tau(geom, sigma);
    return std::abs(tau1) * std::abs(tau2);
}

LogicalState ggkp_logical(const TorusGeometry &geom, double sigma, int bit) {
    if (bit != 0 && bit != 1) {
        throw DomainError("Logical bit must be 0 or 1.");
    }
    GaussianState vac = GaussianState::vacuum(sigma);
    ThetaCharacteristic ch = bit == 0 ? ThetaCharacteristic::zero() : ThetaCharacteristic::half();
    return LogicalState{bit, qzt_assemble(vac, vac, geom, ch)};
}

namespace {

std::vector<cplx> doubled_cell_samples(const LogicalState &s, int64_t resolution) {
    std::vector<cplx> out;
    out.reserve(static_cast<size_t>(resolution * resolution));
    double step = 2.0 / static_cast<double>(resolution);
    for (int64_t i = 0; i < resolution; i++) {
        for (int64_t j = 0; j < resolution; j++) {
            Vec2c xi{cplx(step * static_cast<double>(i), 0.0), cplx(step * static_cast<double>(j), 0.0)};
            out.push_back(s.distribution.theta_at(xi).value);
        }
    }
    return out;
}

cplx pair_samples(const std::vector<cplx> &a, const std::vector<cplx> &b, int64_t resolution) {
    CompensatedSum sum;
    for (size_t k = 0; k < a.size(); k++) {
        sum.add(std::conj(a[k]) * b[k]);
    }
    double step = 2.0 / static_cast<double>(resolution);
    return sum.value() * (step * step);
}

void check_overlap_args(const LogicalState &a, const LogicalState &b, int64_t resolution) {
    if (!(a.distribution.geometry() == b.distribution.geometry())) {
        throw DomainError("Overlap requires both logical states on the same torus.");
    }
    if (resolution < 2) {
        throw DomainError("Overlap resolution must be at least 2.");
    }
}

struct Pairings {
    cplx ab;
    double aa;
    double bb;
};

Pairings pairings(const LogicalState &a, const LogicalState &b, int64_t resolution) {
    auto sa = doubled_cell_samples(a, resolution);
    auto sb = doubled_cell_samples(b, resolution);
    return {pair_samples(sa, sb, resolution), pair_samples(sa, sa, resolution).real(), pair_samples(sb, sb, resolution).real()};
}

}  // namespace

cplx torus_overlap(const LogicalState &a, const LogicalState &b, int64_t resolution) {
    check_overlap_args(a, b, resolution);
    return pair_samples(doubled_cell_samples(a, resolution), doubled_cell_samples(b, resolution), resolution);
}

OverlapReport overlap_report(const LogicalState &a, const LogicalState &b, int64_t resolution) {
    check_overlap_args(a, b, resolution);
    if (resolution < 4 || resolution % 2 != 0) {
        throw DomainError("Overlap report needs an even resolution of at least 4.");
    }
    Pairings fine = pairings(a, b, resolution);
    Pairings coarse = pairings(a, b, resolution / 2);
    OverlapReport out;
    out.resolution = resolution;
    out.norm_a = std::sqrt(fine.aa);
    out.norm_b = std::sqrt(fine.bb);
    out.normalized = std::abs(fine.ab) / (out.norm_a * out.norm_b);
    out.normalized_coarse = std::abs(coarse.ab) / std::sqrt(coarse.aa * coarse.bb);
    return out;
}

namespace {

ScanPoint measure_peak(const LogicalState &s, double scale) {
    std::vector<double> mag(static_cast<size_t>(kScanSamples));
    auto coord = [](int64_t j) { return -0.5 + static_cast<double>(j) / static_cast<double>(kScanSamples); };
    for (int64_t j = 0; j < kScanSamples; j++) {
        Vec2c xi{cplx(0.0, 0.0), cplx(coord(j), 0.0)};
        mag[static_cast<size_t>(j)] = std::abs(s.distribution.theta_at(xi).value);
    }
    auto peak_it = std::max_element(mag.begin(), mag.end());
    int64_t peak = peak_it - mag.begin();
    double half = 0.5 * *peak_it;

    auto crossing = [&](int64_t dir) {
        for (int64_t j = peak + dir; j >= 0 && j < kScanSamples; j += dir) {
            double y = mag[static_cast<size_t>(j)];
            if (y < half) {
                double y_in = mag[static_cast<size_t>(j - dir)];
                double t = (y_in - half) / (y_in - y);
                return coord(j - dir) + dir * t / static_cast<double>(kScanSamples);
            }
        }
        throw ScanError("Distribution at scale " + std::to_string(scale) + " has no half-maximum crossing on the slice.");
    };
    double right = crossing(+1);
    double left = crossing(-1);
    return {scale, right - left, coord(peak)};
}

}  // namespace

std::vector<ScanPoint> flat_limit_scan(const TorusGeometry &base, double sigma, std::span<const double> scales) {
    std::vector<ScanPoint> out;
    double previous = 0.0;
    for (double c : scales) {
        if (!(c > 0.0) || !std::isfinite(c)) {
            throw DomainError("Scan scales must be positive.");
        }
        if (!(c > previous)) {
            throw DomainError("Scan scales must be strictly increasing.");
        }
        previous = c;
        out.push_back(measure_peak(ggkp_logical(base.scaled(c), sigma, 0), c));
    }
    return out;
}

void GridSpec::validate() const {
    if (!(x_max > x_min) || !(k_max > k_min)) {
        throw DomainError("Grid bounds must satisfy x_max > x_min and k_max > k_min.");
    }
    if (nx < 1 || nk < 1) {
        throw DomainError("Grid must have at least one point per axis.");
    }
    if (nx > 100000000 / nk) {
        throw DomainError("Grid exceeds 1e8 points.");
    }
}

double GridSpec::x_at(int64_t i) const {
    return nx == 1 ? x_min : x_min + (x_max - x_min) * static_cast<double>(i) / static_cast<double>(nx - 1);
}

double GridSpec::k_at(int64_t j) const {
    return nk == 1 ? k_min : k_min + (k_max - k_min) * static_cast<double>(j) / static_cast<double>(nk - 1);
}

std::vector<GridSample> evaluate_grid(const QZTDistribution &dist, const GridSpec &grid, double tol) {
    grid.validate();
    std::vector<GridSample> out;
    out.reserve(static_cast<size_t>(grid.nx * grid.nk));
    for (int64_t j = 0; j < grid.nk; j++) {
        for (int64_t i = 0; i < grid.nx; i++) {
            double x = grid.x_at(i);
            double k = grid.k_at(j);
            out.push_back({x, k, qzt_eval(dist, x, k, tol)});
        }
    }
    return out;
}

}  // namespace ggkp
