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

#include <string>
#include <vector>

#include "sfdort/imaging.hpp"
#include "sfdort/metrics.hpp"
#include "sfdort/subspace.hpp"

namespace sfdort {

// All writers format floating point with "%.17g" so that identical inputs
// produce byte-identical files and every value round-trips exactly.

/// Spectrum CSV: a grid header comment, a column header comment, then one row
/// per sample: n, omega_n, Re S_n, Im S_n.
void write_spectrum_csv(const std::string& path, const SpectrumVector& sv);
SpectrumVector read_spectrum_csv(const std::string& path);

/// Image CSV: header `# origin_x,origin_y,pixel_mm,width,height`, the metadata
/// row, then row-major intensities (one raster row per line).
void write_image_csv(const std::string& path, const ImageGrid& image);
ImageGrid read_image_csv(const std::string& path);

/// 16-bit binary PGM (P5, maxval 65535, big-endian), row 0 first.
void write_image_pgm(const std::string& path, const ImageGrid& image);

/// Debug dump of an SVD: sigma list, then U and V as Re/Im columns.
void write_svd_csv(const std::string& path, const SvdResult& svd_result);

/// Appends evaluation rows to a results table, creating it (with header
/// `method,r_mm,error_mm,h4,runtime_s`) when absent.
void append_results_csv(const std::string& path, const std::vector<EvalReport>& reports,
                        double radius_mm);

struct ResultRow {
    std::string method;
    double r_mm{0.0};
    double error_mm{0.0};
    double h4{0.0};
    double runtime_s{0.0};
};

std::vector<ResultRow> read_results_csv(const std::string& path);

} // namespace sfdort
