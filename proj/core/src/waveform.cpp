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

#include "sfdort/waveform.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "sfdort/errors.hpp"

namespace sfdort {

namespace {
constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
}

std::optional<std::string> grid_violation(const FrequencyGrid& grid) {
    if (grid.n_coarse < 2) return "grid.n_coarse: L must be at least 2";
    if (grid.n_total != grid.n_coarse * grid.n_coarse)
        return "grid.n_total: N must equal L^2 (got N=" + std::to_string(grid.n_total) +
               ", L=" + std::to_string(grid.n_coarse) + ")";
    if (!(grid.delta_omega > 0.0)) return "grid.delta_omega: must be positive";
    if (!(grid.omega0 + grid.delta_omega > 0.0))
        return "grid.omega0: all sample frequencies must be positive";
    if (!std::isfinite(grid.omega0) || !std::isfinite(grid.delta_omega))
        return "grid: frequencies must be finite";
    return std::nullopt;
}

void validate_grid(const FrequencyGrid& grid) {
    if (auto v = grid_violation(grid)) throw ValidationError(*v);
}

double omega(const FrequencyGrid& grid, int n) {
    if (n < 1 || n > grid.n_total)
        throw std::out_of_range("frequency index " + std::to_string(n) + " outside 1.." +
                                std::to_string(grid.n_total));
    return grid.omega0 + n * grid.delta_omega;
}

std::vector<int> coarse_indices(const FrequencyGrid& grid) {
    std::vector<int> idx;
    idx.reserve(grid.n_coarse);
    for (int i = 0; i < grid.n_coarse; ++i) idx.push_back(i * grid.n_coarse + 1);
    return idx;
}

std::vector<int> fine_indices(const FrequencyGrid& grid) {
    std::vector<int> idx;
    idx.reserve(grid.n_coarse);
    for (int i = 1; i <= grid.n_coarse; ++i) idx.push_back(i);
    return idx;
}

double Pulse::tau() const { return 1.0 / (kTwoPi * center_freq_hz); }

std::complex<double> pulse_spectrum(const Pulse& pulse, double omega_rad_s) {
    const double t = pulse.tau();
    const double mag = pulse.amplitude * omega_rad_s * t * t *
                       std::exp(-0.5 * omega_rad_s * omega_rad_s * t * t);
    return {0.0, mag};
}

} // namespace sfdort
