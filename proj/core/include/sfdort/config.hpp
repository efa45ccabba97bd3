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

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "sfdort/imaging.hpp"

namespace sfdort {

enum class Method { tr, dort, both };

/// Additive receiver noise; snr_db = +inf disables it (the default — the
/// reference experiments are noiseless).
struct NoiseSpec {
    double snr_db{std::numeric_limits<double>::infinity()};
    std::uint64_t seed{0};
};

/// One experiment manifest: scene, sampling, raster, methods and outputs.
/// Serializes to a sectioned key-value text file so manifests can be checked
/// into a repository and reproduced byte-for-byte.
struct RunConfig {
    Scene scene;
    FrequencyGrid grid{2.0 * 3.14159265358979323846 * 1.5e9,
                       2.0 * 3.14159265358979323846 * 60.0e6, 100, 10};
    Pulse pulse;
    RasterSpec raster;

    Method methods{Method::both};
    int p_paths{3};
    int k_targets{1};
    SpectrumConvention convention{SpectrumConvention::raw};
    double min_range_mm{250.0};
    NoiseSpec noise;
    std::string output_dir{"out"};
    std::vector<double> sweep_radii;
};

bool operator==(const RunConfig& a, const RunConfig& b);

/// The exact reference experiment: L=10, N=100, omega0 = 2pi*1.5 GHz,
/// delta_omega = 2pi*60 MHz, 4 GHz monocycle, antenna (0, 600) mm, point
/// target at (600, 750) mm, rho = -1, noiseless.
RunConfig paper_default_config();

/// Parse a config from its text form; throws ValidationError with the
/// offending section/key on malformed input or violated invariants.
RunConfig parse_config(const std::string& text);

/// Inverse of parse_config: parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& config);

/// Load + parse; throws IoError if the file cannot be read.
RunConfig load_config(const std::string& path);

/// Full validation of every referenced module invariant.
void validate_config(const RunConfig& config);

} // namespace sfdort
