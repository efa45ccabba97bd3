// SPDX-License-Identifier: Apache-2.0
//
// sfdort: stepped-frequency DORT imaging for a single-antenna UWB radar
// in a mirror-wall multipath environment
// Copyright (C) 2026 the sfdort developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "sfdort/geometry.hpp"
#include "sfdort/waveform.hpp"

namespace sfdort {

/// The three round-trip propagation paths of the single-wall scene (P = 3):
/// direct Tx-P-Rx, one wall bounce in either order (the two orders are
/// inseparable and enter the total echo with weight 2), and Tx-W-P-W-Rx.
enum class PathId { direct, one_bounce, two_bounce };

inline constexpr std::array<PathId, 3> kAllPaths{PathId::direct, PathId::one_bounce,
                                                 PathId::two_bounce};

/// Which transmit-spectrum factor the synthesized samples carry.
/// `raw` is the plain Born echo omega^2 G^2 S_T; `matched` carries |S_T|^2,
/// i.e. the echo after the receive matched filter S_T^*.
enum class SpectrumConvention { raw, matched };

/// Received stepped-frequency samples S_1..S_N on a grid.
struct SpectrumVector {
    std::vector<std::complex<double>> values; // length N
    FrequencyGrid grid;
    SpectrumConvention convention{SpectrumConvention::raw};
};

/// 2-D scalar free-space Green function (j/4) H0(omega |a-b| / c).
/// Throws std::invalid_argument for coincident points.
std::complex<double> g0(double omega_rad_s, Point2 a, Point2 b, double speed = kSpeedOfLight);

/// Two-way Green factor of one path at a hypothetical point scatterer x.
/// With A = g0(omega, antenna, x) and B = rho * g0(omega, mirror(antenna), x):
/// direct -> A^2, one_bounce -> A*B, two_bounce -> B^2.
std::complex<double> path_green_sq(double omega_rad_s, const Scene& scene, PathId path,
                                   Point2 x);

/// (A + B)^2 = direct + 2*one_bounce + two_bounce; the weight 2 realizes the
/// two traversal orders of the one-bounce path.
std::complex<double> total_green_sq(double omega_rad_s, const Scene& scene, Point2 x);

/// One weighted point scatterer of the analytic forward model.
struct ScatterPoint {
    Point2 position;
    double weight;
};

/// Born scatter points of a target. A point target maps to itself; a
/// finite-radius target maps to max(8, ceil(2 pi r / (lambda_min/4))) equally
/// weighted points on the semicircle facing the antenna. The surrogate is
/// non-physical (no creeping waves, no shadowing); it reproduces the
/// radius-dependent spreading of the echoes, nothing more.
std::vector<ScatterPoint> scatter_points(const Scene& scene, const Target& target,
                                         const FrequencyGrid& grid);

/// Analytic Born echo synthesis:
/// S_n = sum over scatter points of w * omega_n^2 * (A+B)^2 * pulse factor,
/// with the pulse factor S_T(omega_n) (raw) or |S_T(omega_n)|^2 (matched).
SpectrumVector synthesize(const Scene& scene, const FrequencyGrid& grid, const Pulse& pulse,
                          SpectrumConvention convention = SpectrumConvention::raw);

/// Adds circular complex Gaussian noise with power signal_power/10^(snr/10).
/// An infinite snr returns the input unchanged. Deterministic for fixed seed.
SpectrumVector add_noise(const SpectrumVector& sv, double snr_db, std::uint64_t seed);

} // namespace sfdort
