/*
  Copyright 2026 the metricroom authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#ifndef METRICROOM_MODULAR_HPP
#define METRICROOM_MODULAR_HPP

#include <complex>

#include "metricroom/error.hpp"

// Closed-form hyperbolic density of the twice-punctured plane.
//
// The chain is classical: the modular lambda function lam(tau) =
// theta2(tau)^4 / theta3(tau)^4 is a universal covering map of the upper
// half-plane onto C \ {0,1}.  Pulling the curvature -1 half-plane metric
// |dtau| / Im(tau) through the covering gives
//
//     density(w) = 1 / (Im(tau) * |lam'(tau)|),   lam(tau) = w,
//
// with lam'(tau) = i*pi * lam * (1 - lam) * theta3(tau)^4.  The inverse is
// computed from the ratio of complete elliptic integrals,
// tau = i * K(1-w) / K(w), evaluated through the arithmetic-geometric mean.
// See docs/math_notes.md for branch handling and the covering conventions.

namespace metricroom::modular {

using Cplx = std::complex<double>;

/// Upper half-plane modulus. `reduced` marks membership in the standard
/// level-2 fundamental domain {|Re| <= 1, |2*tau-1| >= 1, |2*tau+1| >= 1}.
struct Tau {
  Cplx value;
  bool reduced = false;
};

/// Conformal density per unit Euclidean length, curvature -1 normalization.
struct DensityValue {
  double value = 0.0;
  static constexpr const char* convention = "curvature -1";
};

/// Arithmetic-geometric mean with the principal square-root chain: at each
/// step the sign of sqrt(a*b) is chosen so that |a' - b'| <= |a' + b'|
/// (ties resolved toward Im(b'/a') > 0).
Cplx agm(Cplx a, Cplx b);

/// Complete elliptic integral of the first kind, parameter convention
/// m = k^2: K(m) = pi / (2 * agm(1, sqrt(1-m))). Cut along m in [1, inf).
Cplx elliptic_K(Cplx m);

struct ThetaConstants {
  Cplx theta2;
  Cplx theta3;
  Cplx theta4;
};

/// Jacobi theta constants from the q-series with nome q = exp(i*pi*tau),
/// truncated when a term drops below 1e-17 in magnitude.
ThetaConstants theta_constants(const Tau& tau);

Cplx modular_lambda(const Tau& tau);

/// Inverse of the modular lambda function; the result is reduced to the
/// level-2 fundamental domain.
Tau inverse_lambda(Cplx w);

/// Reduce an upper half-plane point to the level-2 fundamental domain.
Tau reduce_to_fundamental_domain(Cplx tau);

/// Hyperbolic density of C \ {0,1} at w (curvature -1).
DensityValue density_C01(Cplx w);

/// Hyperbolic density of C \ {a,b} by affine reduction to C \ {0,1}.
DensityValue density_two_punctures(Cplx a, Cplx b, Cplx w);

/// Classical lower bound for the density of C \ {0,1}:
/// 1 / (2|z| * (|log|z|| + K)) with K = constant_K().
double hempel_lower_bound(Cplx z);

/// K = Gamma(1/4)^4 / (4*pi^2) = pi^2 / Gamma(3/4)^4 = 4.376879...
/// computed through this module's own special functions.
double constant_K();

/// Rounded figure quoted in several references for the same constant;
/// reported alongside the computed value (see docs/math_notes.md).
inline constexpr double constant_K_cited = 4.3859;

} // namespace metricroom::modular

#endif
