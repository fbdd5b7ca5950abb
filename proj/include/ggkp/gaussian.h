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

#ifndef GGKP_GAUSSIAN_H
#define GGKP_GAUSSIAN_H

#include <cstdint>
#include <functional>

#include "ggkp/numeric.h"
#include "ggkp/torus.h"

namespace ggkp {

/// Displaced squeezed state with a real Gaussian width.
///
///   psi(q) = (pi sigma^2)^{-1/4} exp[-(q - q_c)^2 / (2 sigma^2) + (i/hbar) p_c (q - q_c/2)]
///
/// Probe states use the same representation; complex conjugation is applied
/// inside the matrix element, not stored in the state.
class GaussianState {
   public:
    static constexpr double kMinSigma = 1e-3;

    /// Throws DomainError for non-finite input or sigma < kMinSigma.
    GaussianState(double q_center, double p_center, double sigma);

    static GaussianState vacuum(double sigma = 1.0) {
        return GaussianState(0.0, 0.0, sigma);
    }
    /// Real squeezing magnitude r (zeta = r, unit mass and frequency): sigma = sqrt(hbar) e^{-r}.
    static GaussianState from_squeezing(double r, double hbar, double q_center = 0.0, double p_center = 0.0);

    double q_center() const {
        return q_;
    }
    double p_center() const {
        return p_;
    }
    double sigma() const {
        return sigma_;
    }
    bool operator==(const GaussianState &) const = default;

   private:
    double q_;
    double p_;
    double sigma_;
};

struct QuadConfig {
    /// Half window around the integrand's Gaussian centres, in units of the wider width.
    double half_width_sigmas = 12.0;
    /// Starting node count; doubled until converged.
    int64_t node_count = 256;
    /// Refinement cap. Exceeding it raises ResolutionError.
    int64_t max_nodes = int64_t{1} << 20;

    /// Throws DomainError unless node_count >= 64, half_width_sigmas >= 8 and max_nodes >= node_count.
    void validate() const;
};

/// Pieces of the closed form
///   <phi|D(m alpha0, n beta0)|psi> = exp(log_prefactor - pi v^T Gamma v + eta^T v),  v = (m, n).
struct ClosedFormParts {
    SymMat2 gamma;
    Vec2c eta;
    cplx log_prefactor;

    cplx exponent(int64_t m, int64_t n) const;
};

cplx wavefunction(const GaussianState &state, double q, double hbar);

/// Applies D(m alpha0, n beta0) to an arbitrary wavefunction, evaluated at q:
///   e^{i beta_n (q - alpha_m/2)/hbar} f(q - alpha_m).
template <typename F>
cplx apply_displacement(const F &f, int64_t m, int64_t n, const TorusGeometry &geom, double q) {
    double shift = static_cast<double>(m) * geom.alpha0();
    double kick = static_cast<double>(n) * geom.beta0();
    return std::polar(1.0, kick * (q - 0.5 * shift) / geom.hbar()) * f(q - shift);
}

cplx displaced_wavefunction(const GaussianState &state, int64_t m, int64_t n, const TorusGeometry &geom, double q);

struct QuadResult {
    cplx value;
    int64_t nodes;
};

/// Composite trapezoid rule on [lo, hi], doubling nodes until two successive
/// results differ by less than 1e-10.
///
/// `max_frequency` is the largest angular frequency of the integrand's phase;
/// a node spacing that cannot resolve it is never accepted. Throws
/// ResolutionError when the refinement cap is reached first.
QuadResult integrate_window(
    const std::function<cplx(double)> &f, double lo, double hi, double max_frequency, const QuadConfig &cfg);

/// <phi|D(m alpha0, n beta0)|psi> by direct quadrature of the position-space integral.
cplx matrix_element_quadrature(
    const GaussianState &probe,
    const GaussianState &signal,
    const TorusGeometry &geom,
    int64_t m,
    int64_t n,
    const QuadConfig &cfg = {});

/// <phi|D_{m1,n1} D_{m2,n2}|psi> by quadrature, applying the two displacements in sequence.
cplx composed_element_quadrature(
    const GaussianState &probe,
    const GaussianState &signal,
    const TorusGeometry &geom,
    int64_t m1,
    int64_t n1,
    int64_t m2,
    int64_t n2,
    const QuadConfig &cfg = {});

ClosedFormParts closed_form_parts(const GaussianState &probe, const GaussianState &signal, const TorusGeometry &geom);

cplx matrix_element_closed_form(const ClosedFormParts &parts, int64_t m, int64_t n);
cplx matrix_element_closed_form(
    const GaussianState &probe, const GaussianState &signal, const TorusGeometry &geom, int64_t m, int64_t n);

}  // namespace ggkp

#endif
