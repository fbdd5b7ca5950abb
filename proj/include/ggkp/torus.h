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

#ifndef GGKP_TORUS_H
#define GGKP_TORUS_H

#include <array>
#include <span>
#include <cstdint>
#include <string>
#include <string_view>

#include "ggkp/numeric.h"

namespace ggkp {

/// Periods of the phase-space torus together with the action unit.
///
/// Position translations by alpha0 = 2*pi*hbar/P and momentum translations by
/// beta0 = 2*pi*hbar/L generate the lattice of Weyl displacements; their
/// deformation parameter is theta0 = 2*pi*hbar/(L*P).
class TorusGeometry {
   public:
    /// Throws DomainError unless L, P and hbar are finite and positive.
    TorusGeometry(double L, double P, double hbar = 1.0);

    double L() const {
        return L_;
    }
    double P() const {
        return P_;
    }
    double hbar() const {
        return hbar_;
    }
    double theta0() const {
        return kTwoPi * hbar_ / (L_ * P_);
    }
    double alpha0() const {
        return kTwoPi * hbar_ / P_;
    }
    double beta0() const {
        return kTwoPi * hbar_ / L_;
    }

    /// Same torus with both periods multiplied by `c`.
    TorusGeometry scaled(double c) const;

    bool operator==(const TorusGeometry &) const = default;

   private:
    double L_;
    double P_;
    double hbar_;
};

double deformation_parameter(const TorusGeometry &geom);

/// e^{2 pi i theta0}: the phase picked up when commuting U past V.
cplx commutation_phase(const TorusGeometry &geom);

/// Plane-wave character chi_{m,n} on the torus carrying a unit phase.
struct TorusCharacter {
    int64_t m = 0;
    int64_t n = 0;
    cplx phase{1.0, 0.0};
};

/// Moyal star product of two characters.
///
/// Indices add; the phase gains e^{i pi theta0 (a.n*b.m - a.m*b.n)}, so that
/// chi_{0,n} * chi_{m,0} = e^{i pi theta0 m n} chi_{m,n}. This is the same
/// symplectic phase as in the composition D_{m,n} D_{m',n'}.
TorusCharacter character_star(const TorusCharacter &a, const TorusCharacter &b, const TorusGeometry &geom);

/// Exact rational number with positive denominator in lowest terms.
class Rational {
   public:
    constexpr Rational() = default;
    Rational(int64_t num, int64_t den = 1);

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    int64_t num() const {
        return num_;
    }
    int64_t den() const {
        return den_;
    }
    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }
    std::string str() const;

    Rational operator+(const Rational &o) const;
    Rational operator*(const Rational &o) const;
    bool operator==(const Rational &) const = default;

   private:
    int64_t num_ = 0;
    int64_t den_ = 1;
};

/// Theta characteristic [epsilon; delta] for a genus-2 theta function.
struct ThetaCharacteristic {
    std::array<Rational, 2> epsilon{};
    std::array<Rational, 2> delta{};

    static ThetaCharacteristic zero() {
        return {};
    }
    static ThetaCharacteristic half() {
        return {{Rational(1, 2), Rational(1, 2)}, {Rational(1, 2), Rational(1, 2)}};
    }
    bool operator==(const ThetaCharacteristic &) const = default;
};

enum class Parity { even, odd };

/// Parity of a half-integer characteristic: even iff 4 eps.delta is even.
///
/// Works for any genus given as parallel spans; throws DomainError if an entry
/// is not a half-integer.
Parity characteristic_parity(std::span<const Rational> epsilon, std::span<const Rational> delta);
Parity characteristic_parity(const ThetaCharacteristic &c);

}  // namespace ggkp

#endif
