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

#include "sfdort/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "sfdort/errors.hpp"
#include "text_format.hpp"

namespace sfdort {

namespace {

namespace fs = std::filesystem;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double max_target_radius(const Scene& scene) {
    double r = 0.0;
    for (const auto& t : scene.targets) r = std::max(r, t.radius);
    return r;
}

std::string radius_tag(double r) {
    // compact, filename-safe: 20 -> "20", 2.5 -> "2.5"
    std::string s = detail::fmt_double(r);
    std::replace(s.begin(), s.end(), '.', 'p');
    return s;
}

} // namespace

RunResult run_pipeline(const RunConfig& config) {
    validate_config(config);

    RunResult result;
    result.spectrum = synthesize(config.scene, config.grid, config.pulse, config.convention);
    if (!(std::isinf(config.noise.snr_db) && config.noise.snr_db > 0))
        result.spectrum = add_noise(result.spectrum, config.noise.snr_db, config.noise.seed);

    ImagingOptions options;
    options.min_range_mm = config.min_range_mm;
    options.min_clearance_mm = max_target_radius(config.scene);

    const bool want_tr = config.methods != Method::dort;
    const bool want_dort = config.methods != Method::tr;
    const double radius = max_target_radius(config.scene);
    const Point2 center = config.scene.targets.empty() ? Point2{0.0, 0.0}
                                                       : config.scene.targets.front().center;

    if (want_tr) {
        const auto t0 = std::chrono::steady_clock::now();
        result.tr = tr_image(result.spectrum, config.scene, config.pulse, config.raster, options);
        EvalReport rep;
        rep.method = "tr";
        rep.estimated_position = peak_position(*result.tr);
        rep.error_mm = position_error(rep.estimated_position, center, radius);
        rep.sharpness_h4 = mb_sharpness(*result.tr, 4.0);
        rep.runtime_s = seconds_since(t0);
        result.reports.push_back(rep);
    }

    if (want_dort) {
        const auto t0 = std::chrono::steady_clock::now();
        const KffMatrix kff = build_kff(result.spectrum);
        const SvdResult dec = svd(kff);
        result.singular_values = dec.singular_values;
        const NoiseSubspace ns = noise_subspace(dec, config.p_paths, config.k_targets);
        result.left = subspace_image(ns, SubspaceSide::left, config.scene, config.grid,
                                     config.pulse, config.raster, options);
        result.right = subspace_image(ns, SubspaceSide::right, config.scene, config.grid,
                                      config.pulse, config.raster, options);
        result.dort = dort_image(*result.left, *result.right);
        EvalReport rep;
        rep.method = "dort";
        rep.estimated_position = peak_position(*result.dort);
        rep.error_mm = position_error(rep.estimated_position, center, radius);
        rep.sharpness_h4 = mb_sharpness(*result.dort, 4.0);
        rep.runtime_s = seconds_since(t0);
        result.reports.push_back(rep);
    }
    return result;
}

std::vector<EvalReport> run_single(const RunConfig& config, const std::string& tag) {
    const RunResult result = run_pipeline(config);

    const fs::path dir(config.output_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory '" + config.output_dir + "'");

    auto stem = [&](const std::string& base) { return (dir / (base + tag)).string(); };

    write_spectrum_csv(stem("spectrum") + ".csv", result.spectrum);
    auto emit = [&](const std::optional<ImageGrid>& img, const std::string& base) {
        if (!img) return;
        write_image_csv(stem(base) + ".csv", *img);
        write_image_pgm(stem(base) + ".pgm", *img);
    };
    emit(result.tr, "i_tr");
    emit(result.left, "i_left");
    emit(result.right, "i_right");
    emit(result.dort, "i_dort");

    append_results_csv((dir / "results.csv").string(), result.reports,
                       max_target_radius(config.scene));
    return result.reports;
}

void run_sweep(const RunConfig& config) {
    if (config.sweep_radii.empty())
        throw ValidationError("sweep: [sweep].radii_mm must list at least one radius");
    if (config.scene.targets.empty())
        throw ValidationError("sweep: the scene needs a target to sweep");

    for (double r : config.sweep_radii) {
        RunConfig variant = config;
        variant.scene.targets.front().radius = r;
        try {
            run_single(variant, "_r" + radius_tag(r));
        } catch (const Error& e) {
            // record and continue with the remaining radii
            std::cerr << "sweep: radius " << detail::fmt_double(r) << " failed: " << e.what()
                      << "\n";
        }
    }
}

void emit_plots(const std::string& results_csv, const std::string& out_dir) {
    const auto rows = read_results_csv(results_csv);
    if (rows.empty()) throw ValidationError("plots: results table is empty");

    std::vector<std::string> methods;
    for (const auto& r : rows)
        if (std::find(methods.begin(), methods.end(), r.method) == methods.end())
            methods.push_back(r.method);
    std::sort(methods.begin(), methods.end());

    // last row wins if a (method, radius) pair was rerun
    std::map<double, std::map<std::string, const ResultRow*>> by_radius;
    for (const auto& r : rows) by_radius[r.r_mm][r.method] = &r;

    const fs::path dir(out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory '" + out_dir + "'");

    auto write_figure = [&](const std::string& name, const std::string& column,
                            auto value_of) {
        std::ofstream f(dir / name);
        if (!f) throw IoError("cannot open plot file '" + name + "'");
        f << "r_mm";
        for (const auto& m : methods) f << "," << m << "_" << column;
        f << "\n";
        for (const auto& [radius, per_method] : by_radius) {
            f << detail::fmt_double(radius);
            for (const auto& m : methods) {
                f << ",";
                const auto it = per_method.find(m);
                f << (it != per_method.end() ? detail::fmt_double(value_of(*it->second))
                                             : "nan");
            }
            f << "\n";
        }
    };
    write_figure("error_vs_radius.csv", "error_mm",
                 [](const ResultRow& r) { return r.error_mm; });
    write_figure("sharpness_vs_radius.csv", "h4", [](const ResultRow& r) { return r.h4; });
}

} // namespace sfdort
