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

#ifndef GGKP_ZAK_H
#define GGKP_ZAK_H

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ggkp/gaussian.h"
#include "ggkp/numeric.h"
#include "ggkp/theta.h"
#include "ggkp/torus.h"

namespace ggkp {

/// Quantum Zak transform of a probe/signal pair of Gaussian states,
///
///   Z(x, k) = sum_{m,n} <phi|D(m alpha0, n beta0)|psi> e^{2 pi i (n beta0 x - m alpha0 k)}
///           = prefactor * Theta[char](xi(x, k) | Omega),
///
/// with Omega = i Gamma and xi(x, k) = (-alpha0 k, beta0 x) + eta / (2 pi i).
/// Only the zero characteristic reproduces the lattice sum; other
/// characteristics give the shifted theta functions used for logical states.
class QZTDistribution {
   public:
    /// Throws GeometryError if i*Gamma does not have a positive-definite imaginary part.
    QZTDistribution(const TorusGeometry &geom, const ClosedFormParts &parts, const ThetaCharacteristic &ch);

    const TorusGeometry &geometry() const {
        return geom_;
    }
    const ClosedFormParts &parts() const {
        return parts_;
    }
    const ThetaCharacteristic &characteristic() const {
        return char_;
    }
    const PeriodMatrix &omega() const {
        return omega_;
    }
    /// Constant part of xi, eta / (2 pi i).
    const Vec2c &xi_offset() const {
        return xi_offset_;
    }
    cplx prefactor() const {
        return std::exp(parts_.log_prefactor);
    }
    /// Coefficient of the identity element, i.e. the (0, 0) lattice term <phi|psi>.
    cplx canonical_trace() const {
        return prefactor();
    }

    /// Dimensionless theta argument at the phase-space point (x, k).
    Vec2c xi(double x, double k) const;
    /// Theta[char](xi | Omega) without the prefactor.
    ThetaValue theta_at(const Vec2c &xi, double tol = kDefaultThetaTolerance) const;
    /// Sum of the moduli of the series terms at (x, k), times |prefactor|.
    /// Rounding in any evaluation scales with this, not with the value, so it
    /// is the natural yardstick near zeros of the distribution.
    double series_scale(double x, double k, double tol = kDefaultThetaTolerance) const;

   private:
    TorusGeometry geom_;
    ClosedFormParts parts_;
    ThetaCharacteristic char_;
    PeriodMatrix omega_;
    Vec2c xi_offset_;
};

QZTDistribution qzt_assemble(
    const GaussianState &probe,
    const GaussianState &signal,
    const TorusGeometry &geom,
    const ThetaCharacteristic &ch = ThetaCharacteristic::zero());

cplx qzt_eval(const QZTDistribution &dist, double x, double k, double tol = kDefaultThetaTolerance);

/// Quadrature matrix elements for every (m, n) with max(|m|, |n|) <= radius.
struct LatticeElements {
    int64_t radius = 0;
    /// Row-major over m in [-radius, radius], then n in [-radius, radius].
    std::vector<cplx> values;

    cplx at(int64_t m, int64_t n) const {
        int64_t w = 2 * radius + 1;
        return values[static_cast<size_t>((m + radius) * w + (n + radius))];
    }
};

LatticeElements quadrature_elements(
    const GaussianState &probe,
    const GaussianState &signal,
    const TorusGeometry &geom,
    int64_t radius,
    const QuadConfig &cfg = {});

/// Direct lattice sum of precomputed elements against the torus characters.
cplx zak_lattice_sum(const LatticeElements &elements, const TorusGeometry &geom, double x, double k);

/// Zak transform as a truncated lattice sum of quadrature matrix elements.
/// Touches no theta-function code.
cplx qzt_brute_force(
    const GaussianState &probe,
    const GaussianState &signal,
    const TorusGeometry &geom,
    double x,
    double k,
    int64_t radius,
    const QuadConfig &cfg = {});

/// (tau1, tau2) of an equally squeezed vacuum pair, read off the diagonal of i*Gamma.
std::pair<cplx, cplx> squeezed_vacuum_tau(const TorusGeometry &geom, double sigma);

/// |tau1| |tau2|; equals (theta0 / 2)^2 for every sigma.
double lattice_uncertainty(const TorusGeometry &geom, double sigma);

struct LogicalState {
    int bit;
    QZTDistribution distribution;
};

/// Squeezed-vacuum distribution with characteristic [0;0] (bit 0) or
/// [1/2,1/2; 1/2,1/2] (bit 1).
LogicalState ggkp_logical(const TorusGeometry &geom, double sigma, int bit);

/// L2 pairing of the two theta distributions over the doubled cell xi in [0, 2)^2,
///   sum_{i,j} conj(Theta_a(xi_ij)) Theta_b(xi_ij) * (2 / resolution)^2.
/// The rectangle rule is exact on trigonometric polynomials of low enough
/// degree, so half-integer and integer Fourier supports pair to rounding error.
/// Prefactors are dropped. Throws DomainError on differing geometry.
cplx torus_overlap(const LogicalState &a, const LogicalState &b, int64_t resolution);

struct OverlapReport {
    int64_t resolution;
    /// |<a|b>| / (||a|| ||b||) at `resolution` and at resolution / 2.
    double normalized;
    double normalized_coarse;
    double norm_a;
    double norm_b;
};

OverlapReport overlap_report(const LogicalState &a, const LogicalState &b, int64_t resolution);

struct ScanPoint {
    double scale;
    double fwhm;
    double center;
};

/// Number of samples on the xi_2 slice used to measure peak widths.
inline constexpr int64_t kScanSamples = 4096;

/// Full width at half maximum of the central peak of |bit-0 distribution|
/// along xi_2 in [-1/2, 1/2), xi_1 = 0, for the torus (cL, cP) at each scale c.
/// Throws DomainError unless scales are positive and strictly increasing, and
/// ScanError if a peak has no half-maximum crossing on the slice.
std::vector<ScanPoint> flat_limit_scan(const TorusGeometry &base, double sigma, std::span<const double> scales);

struct GridSpec {
    double x_min = -0.5;
    double x_max = 0.5;
    double k_min = -0.5;
    double k_max = 0.5;
    int64_t nx = 5;
    int64_t nk = 5;

    void validate() const;
    double x_at(int64_t i) const;
    double k_at(int64_t j) const;
};

struct GridSample {
    double x;
    double k;
    cplx value;
};

/// Samples qzt_eval on the grid, x varying fastest.
std::vector<GridSample> evaluate_grid(const QZTDistribution &dist, const GridSpec &grid, double tol = kDefaultThetaTolerance);

}  // namespace ggkp

#endif
