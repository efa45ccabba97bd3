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

#include <optional>
#include <string>
#include <vector>

#include "sfdort/config.hpp"
#include "sfdort/io.hpp"

namespace sfdort {

/// In-memory results of one end-to-end run.
struct RunResult {
    SpectrumVector spectrum;
    std::optional<ImageGrid> tr;
    std::optional<ImageGrid> left;
    std::optional<ImageGrid> right;
    std::optional<ImageGrid> dort;
    std::vector<EvalReport> reports;
    std::vector<double> singular_values;
};

/// Synthesize -> K_FF -> SVD -> noise subspace -> images -> metrics, without
/// touching the file system. The peak search is restricted to hypothesis
/// centres that a radius-r target could occupy (y > r).
RunResult run_pipeline(const RunConfig& config);

/// run_pipeline plus artifact emission: spectrum CSV, image CSV+PGM pairs and
/// appended rows in results.csv under config.output_dir. `tag` suffixes the
/// file stems (the radius sweep uses "_r<radius>"). Returns the reports.
std::vector<EvalReport> run_single(const RunConfig& config, const std::string& tag = "");

/// One run_single per sweep radius with the target radius substituted.
/// Per-radius failures are recorded and the sweep continues; throws
/// ValidationError only if the radius list is empty.
void run_sweep(const RunConfig& config);

/// Reshape a results table into per-figure plot data: error_vs_radius.csv and
/// sharpness_vs_radius.csv, one column per method, rows sorted by radius.
void emit_plots(const std::string& results_csv, const std::string& out_dir);

} // namespace sfdort
