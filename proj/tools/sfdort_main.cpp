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

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "sfdort/errors.hpp"
#include "sfdort/pipeline.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

sfdort::RunConfig load_with_overrides(const std::string& config_path,
                                      const std::string& out_dir_flag) {
    sfdort::RunConfig cfg = sfdort::load_config(config_path);
    if (!out_dir_flag.empty()) cfg.output_dir = out_dir_flag;
    if (const char* env = std::getenv("SFDORT_OUT_DIR"); env && *env) cfg.output_dir = env;
    return cfg;
}

void print_reports(const std::vector<sfdort::EvalReport>& reports) {
    for (const auto& r : reports)
        std::printf("%-5s peak (%.1f, %.1f) mm  error %.3f mm  h4 %.6e  %.2fs\n",
                    r.method.c_str(), r.estimated_position.x, r.estimated_position.y,
                    r.error_mm, r.sharpness_h4, r.runtime_s);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"single-antenna UWB radar imaging: conventional time reversal and "
                 "stepped-frequency DORT"};
    app.require_subcommand(1);

    std::string config_path, out_dir, spectrum_path, results_path, spectrum_out;

    auto add_config = [&](CLI::App* cmd) {
        cmd->add_option("-c,--config", config_path, "experiment manifest (.ini)")
            ->required()
            ->check(CLI::ExistingFile);
        cmd->add_option("-o,--out-dir", out_dir,
                        "override [run].output_dir (also via SFDORT_OUT_DIR)");
    };

    auto* simulate = app.add_subcommand("simulate", "synthesize the received spectrum only");
    add_config(simulate);
    simulate->add_option("--out", spectrum_out, "spectrum CSV path (default <out>/spectrum.csv)");

    auto* image = app.add_subcommand("image", "form images from a stored spectrum");
    add_config(image);
    image->add_option("-s,--spectrum", spectrum_path, "spectrum CSV from 'simulate'")
        ->required()
        ->check(CLI::ExistingFile);

    auto* run = app.add_subcommand("run", "synthesize, image and evaluate end-to-end");
    add_config(run);

    auto* sweep = app.add_subcommand("sweep", "run once per [sweep].radii_mm entry");
    add_config(sweep);

    auto* plots = app.add_subcommand("plots", "reshape results.csv into per-figure plot data");
    plots->add_option("-r,--results", results_path, "results.csv from 'run'/'sweep'")
        ->required()
        ->check(CLI::ExistingFile);
    plots->add_option("-o,--out-dir", out_dir, "plot-data directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (simulate->parsed()) {
            const auto cfg = load_with_overrides(config_path, out_dir);
            auto sv = sfdort::synthesize(cfg.scene, cfg.grid, cfg.pulse, cfg.convention);
            if (!(std::isinf(cfg.noise.snr_db) && cfg.noise.snr_db > 0))
                sv = sfdort::add_noise(sv, cfg.noise.snr_db, cfg.noise.seed);
            std::filesystem::create_directories(cfg.output_dir);
            const std::string path =
                spectrum_out.empty() ? cfg.output_dir + "/spectrum.csv" : spectrum_out;
            sfdort::write_spectrum_csv(path, sv);
            std::printf("wrote %s (%d samples)\n", path.c_str(), sv.grid.n_total);
        } else if (image->parsed()) {
            sfdort::RunConfig cfg = load_with_overrides(config_path, out_dir);
            const auto sv = sfdort::read_spectrum_csv(spectrum_path);
            if (sv.grid.n_coarse != cfg.grid.n_coarse)
                throw sfdort::ValidationError("spectrum grid (L=" +
                                              std::to_string(sv.grid.n_coarse) +
                                              ") does not match the config grid");
            // image the stored samples instead of re-synthesizing
            sfdort::RunResult result;
            {
                sfdort::ImagingOptions opt;
                opt.min_range_mm = cfg.min_range_mm;
                for (const auto& t : cfg.scene.targets)
                    opt.min_clearance_mm = std::max(opt.min_clearance_mm, t.radius);
                std::filesystem::create_directories(cfg.output_dir);
                if (cfg.methods != sfdort::Method::dort) {
                    const auto img =
                        sfdort::tr_image(sv, cfg.scene, cfg.pulse, cfg.raster, opt);
                    sfdort::write_image_csv(cfg.output_dir + "/i_tr.csv", img);
                    sfdort::write_image_pgm(cfg.output_dir + "/i_tr.pgm", img);
                }
                if (cfg.methods != sfdort::Method::tr) {
                    const auto dec = sfdort::svd(sfdort::build_kff(sv));
                    const auto ns = sfdort::noise_subspace(dec, cfg.p_paths, cfg.k_targets);
                    const auto left = sfdort::subspace_image(ns, sfdort::SubspaceSide::left,
                                                             cfg.scene, cfg.grid, cfg.pulse,
                                                             cfg.raster, opt);
                    const auto right = sfdort::subspace_image(ns, sfdort::SubspaceSide::right,
                                                              cfg.scene, cfg.grid, cfg.pulse,
                                                              cfg.raster, opt);
                    const auto dort = sfdort::dort_image(left, right);
                    sfdort::write_image_csv(cfg.output_dir + "/i_left.csv", left);
                    sfdort::write_image_pgm(cfg.output_dir + "/i_left.pgm", left);
                    sfdort::write_image_csv(cfg.output_dir + "/i_right.csv", right);
                    sfdort::write_image_pgm(cfg.output_dir + "/i_right.pgm", right);
                    sfdort::write_image_csv(cfg.output_dir + "/i_dort.csv", dort);
                    sfdort::write_image_pgm(cfg.output_dir + "/i_dort.pgm", dort);
                }
            }
            std::printf("images written to %s\n", cfg.output_dir.c_str());
        } else if (run->parsed()) {
            const auto cfg = load_with_overrides(config_path, out_dir);
            print_reports(sfdort::run_single(cfg));
        } else if (sweep->parsed()) {
            const auto cfg = load_with_overrides(config_path, out_dir);
            sfdort::run_sweep(cfg);
            sfdort::emit_plots(cfg.output_dir + "/results.csv", cfg.output_dir);
            std::printf("sweep results in %s\n", cfg.output_dir.c_str());
        } else if (plots->parsed()) {
            sfdort::emit_plots(results_path, out_dir);
            std::printf("plot data written to %s\n", out_dir.c_str());
        }
    } catch (const sfdort::ValidationError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const sfdort::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const sfdort::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return 0;
}
