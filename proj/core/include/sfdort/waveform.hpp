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

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace sfdort {

/// Stepped-frequency sampling grid: omega_n = omega0 + n * delta_omega for
/// n = 1..N, with N = L^2. Rows of the frequency-frequency matrix step by
/// L*delta_omega (coarse), columns by delta_omega (fine).
struct FrequencyGrid {
    double omega0{0.0};      // rad/s
    double delta_omega{0.0}; // rad/s
    int n_total{0};          // N
    int n_coarse{0};         // L
};

/// First violated grid invariant, or nullopt.
std::optional<std::string> grid_violation(const FrequencyGrid& grid);

/// Throws ValidationError if the grid invariants don't hold (N = L^2, L >= 2,
/// delta_omega > 0, all sample frequencies positive).
void validate_grid(const FrequencyGrid& grid);

/// omega_n for 1-based n; throws std::out_of_range outside 1..N.
double omega(const FrequencyGrid& grid, int n);

/// 1-based indices of the coarse subsampling: 1, L+1, 2L+1, ..., N-L+1.
std::vector<int> coarse_indices(const FrequencyGrid& grid);

/// 1-based indices of the fine subsampling: 1, 2, ..., L.
std::vector<int> fine_indices(const FrequencyGrid& grid);

/// Gaussian monocycle (first derivative of a Gaussian). tau is fixed by the
/// requirement that the spectral magnitude peaks at the centre frequency:
/// tau = 1 / (2 pi f_c).
struct Pulse {
    double center_freq_hz{4.0e9};
    double amplitude{1.0};

    double tau() const; // seconds
};

/// Transmit spectrum S_T(omega) = j A omega tau^2 exp(-omega^2 tau^2 / 2).
std::complex<double> pulse_spectrum(const Pulse& pulse, double omega_rad_s);

} // namespace sfdort
