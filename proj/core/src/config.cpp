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

#include "sfdort/config.hpp"

#include <fstream>
#include <sstream>

#include "sfdort/errors.hpp"
#include "text_format.hpp"

namespace sfdort {

namespace {

using detail::fmt_double;
using detail::parse_double;

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ValidationError("config " + where + ": " + what);
}

double need_double(const std::string& where, const std::string& value) {
    bool ok = false;
    const double v = parse_double(value, ok);
    if (!ok) fail(where, "expected a number, got '" + value + "'");
    return v;
}

long need_int(const std::string& where, const std::string& value) {
    char* end = nullptr;
    const long v = std::strtol(value.c_str(), &end, 10);
    if (end == value.c_str() || *end != '\0')
        fail(where, "expected an integer, got '" + value + "'");
    return v;
}

} // namespace

bool operator==(const RunConfig& a, const RunConfig& b) {
    auto target_eq = [](const Target& x, const Target& y) {
        return x.center == y.center && x.radius == y.radius && x.contrast == y.contrast;
    };
    if (a.scene.targets.size() != b.scene.targets.size()) return false;
    for (std::size_t i = 0; i < a.scene.targets.size(); ++i)
        if (!target_eq(a.scene.targets[i], b.scene.targets[i])) return false;
    return a.scene.antenna == b.scene.antenna && a.scene.reflection == b.scene.reflection &&
           a.scene.speed == b.scene.speed && a.grid.omega0 == b.grid.omega0 &&
           a.grid.delta_omega == b.grid.delta_omega && a.grid.n_total == b.grid.n_total &&
           a.grid.n_coarse == b.grid.n_coarse &&
           a.pulse.center_freq_hz == b.pulse.center_freq_hz &&
           a.pulse.amplitude == b.pulse.amplitude && a.raster == b.raster &&
           a.methods == b.methods && a.p_paths == b.p_paths && a.k_targets == b.k_targets &&
           a.convention == b.convention && a.min_range_mm == b.min_range_mm &&
           a.noise.snr_db == b.noise.snr_db && a.noise.seed == b.noise.seed &&
           a.output_dir == b.output_dir && a.sweep_radii == b.sweep_radii;
}

RunConfig paper_default_config() {
    RunConfig cfg;
    cfg.scene.antenna = {0.0, 600.0};
    cfg.scene.reflection = {-1.0, 0.0};
    cfg.scene.speed = kSpeedOfLight;
    cfg.scene.targets = {{{600.0, 750.0}, 0.0, 1.0}};
    const double two_pi = 2.0 * 3.14159265358979323846;
    cfg.grid = {two_pi * 1.5e9, two_pi * 60.0e6, 100, 10};
    cfg.pulse = {4.0e9, 1.0};
    cfg.raster = {};
    cfg.methods = Method::both;
    cfg.p_paths = 3;
    cfg.k_targets = 1;
    cfg.convention = SpectrumConvention::raw;
    cfg.min_range_mm = 250.0;
    cfg.output_dir = "out";
    cfg.sweep_radii = {1.0, 5.0, 20.0, 50.0};
    return cfg;
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg = paper_default_config();
    cfg.scene.targets.clear();
    cfg.sweep_radii.clear();

    std::istringstream is(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') fail("line " + std::to_string(lineno), "unterminated section");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            fail("line " + std::to_string(lineno), "expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        const std::string where = "[" + section + "]." + key;

        if (section == "scene") {
            if (key == "antenna_x_mm") cfg.scene.antenna.x = need_double(where, value);
            else if (key == "antenna_y_mm") cfg.scene.antenna.y = need_double(where, value);
            else if (key == "reflection_re")
                cfg.scene.reflection.real(need_double(where, value));
            else if (key == "reflection_im")
                cfg.scene.reflection.imag(need_double(where, value));
            else if (key == "speed_mm_s") cfg.scene.speed = need_double(where, value);
            else if (key == "target") {
                const auto toks = split_ws(value);
                if (toks.size() != 4)
                    fail(where, "expected 'x_mm y_mm radius_mm contrast'");
                Target t;
                t.center.x = need_double(where, toks[0]);
                t.center.y = need_double(where, toks[1]);
                t.radius = need_double(where, toks[2]);
                t.contrast = need_double(where, toks[3]);
                cfg.scene.targets.push_back(t);
            } else fail(where, "unknown key");
        } else if (section == "grid") {
            if (key == "omega0_rad_s") cfg.grid.omega0 = need_double(where, value);
            else if (key == "delta_omega_rad_s") cfg.grid.delta_omega = need_double(where, value);
            else if (key == "n_total") cfg.grid.n_total = static_cast<int>(need_int(where, value));
            else if (key == "n_coarse")
                cfg.grid.n_coarse = static_cast<int>(need_int(where, value));
            else fail(where, "unknown key");
        } else if (section == "pulse") {
            if (key == "center_freq_hz") cfg.pulse.center_freq_hz = need_double(where, value);
            else if (key == "amplitude") cfg.pulse.amplitude = need_double(where, value);
            else fail(where, "unknown key");
        } else if (section == "raster") {
            if (key == "origin_x_mm") cfg.raster.origin.x = need_double(where, value);
            else if (key == "origin_y_mm") cfg.raster.origin.y = need_double(where, value);
            else if (key == "pixel_mm") cfg.raster.pixel_mm = need_double(where, value);
            else if (key == "width") cfg.raster.width = static_cast<int>(need_int(where, value));
            else if (key == "height") cfg.raster.height = static_cast<int>(need_int(where, value));
            else fail(where, "unknown key");
        } else if (section == "run") {
            if (key == "methods") {
                if (value == "tr") cfg.methods = Method::tr;
                else if (value == "dort") cfg.methods = Method::dort;
                else if (value == "both") cfg.methods = Method::both;
                else fail(where, "expected tr | dort | both");
            } else if (key == "p_paths") cfg.p_paths = static_cast<int>(need_int(where, value));
            else if (key == "k_targets")
                cfg.k_targets = static_cast<int>(need_int(where, value));
            else if (key == "spectrum") {
                if (value == "raw") cfg.convention = SpectrumConvention::raw;
                else if (value == "matched") cfg.convention = SpectrumConvention::matched;
                else fail(where, "expected raw | matched");
            } else if (key == "min_range_mm") cfg.min_range_mm = need_double(where, value);
            else if (key == "output_dir") cfg.output_dir = value;
            else fail(where, "unknown key");
        } else if (section == "noise") {
            if (key == "snr_db") cfg.noise.snr_db = need_double(where, value);
            else if (key == "seed")
                cfg.noise.seed = static_cast<std::uint64_t>(need_int(where, value));
            else fail(where, "unknown key");
        } else if (section == "sweep") {
            if (key == "radii_mm") {
                for (const auto& tok : split_ws(value))
                    cfg.sweep_radii.push_back(need_double(where, tok));
            } else fail(where, "unknown key");
        } else {
            fail("[" + section + "]", "unknown section");
        }
    }
    validate_config(cfg);
    return cfg;
}

std::string serialize_config(const RunConfig& cfg) {
    std::ostringstream os;
    os << "# sfdort run configuration\n";
    os << "[scene]\n";
    os << "antenna_x_mm = " << fmt_double(cfg.scene.antenna.x) << "\n";
    os << "antenna_y_mm = " << fmt_double(cfg.scene.antenna.y) << "\n";
    os << "reflection_re = " << fmt_double(cfg.scene.reflection.real()) << "\n";
    os << "reflection_im = " << fmt_double(cfg.scene.reflection.imag()) << "\n";
    os << "speed_mm_s = " << fmt_double(cfg.scene.speed) << "\n";
    for (const Target& t : cfg.scene.targets)
        os << "target = " << fmt_double(t.center.x) << " " << fmt_double(t.center.y) << " "
           << fmt_double(t.radius) << " " << fmt_double(t.contrast) << "\n";
    os << "\n[grid]\n";
    os << "omega0_rad_s = " << fmt_double(cfg.grid.omega0) << "\n";
    os << "delta_omega_rad_s = " << fmt_double(cfg.grid.delta_omega) << "\n";
    os << "n_total = " << cfg.grid.n_total << "\n";
    os << "n_coarse = " << cfg.grid.n_coarse << "\n";
    os << "\n[pulse]\n";
    os << "center_freq_hz = " << fmt_double(cfg.pulse.center_freq_hz) << "\n";
    os << "amplitude = " << fmt_double(cfg.pulse.amplitude) << "\n";
    os << "\n[raster]\n";
    os << "origin_x_mm = " << fmt_double(cfg.raster.origin.x) << "\n";
    os << "origin_y_mm = " << fmt_double(cfg.raster.origin.y) << "\n";
    os << "pixel_mm = " << fmt_double(cfg.raster.pixel_mm) << "\n";
    os << "width = " << cfg.raster.width << "\n";
    os << "height = " << cfg.raster.height << "\n";
    os << "\n[run]\n";
    os << "methods = "
       << (cfg.methods == Method::tr ? "tr" : cfg.methods == Method::dort ? "dort" : "both")
       << "\n";
    os << "p_paths = " << cfg.p_paths << "\n";
    os << "k_targets = " << cfg.k_targets << "\n";
    os << "spectrum = " << (cfg.convention == SpectrumConvention::raw ? "raw" : "matched")
       << "\n";
    os << "min_range_mm = " << fmt_double(cfg.min_range_mm) << "\n";
    os << "output_dir = " << cfg.output_dir << "\n";
    os << "\n[noise]\n";
    os << "snr_db = " << fmt_double(cfg.noise.snr_db) << "\n";
    os << "seed = " << cfg.noise.seed << "\n";
    if (!cfg.sweep_radii.empty()) {
        os << "\n[sweep]\n";
        os << "radii_mm =";
        for (double r : cfg.sweep_radii) os << " " << fmt_double(r);
        os << "\n";
    }
    return os.str();
}

RunConfig load_config(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open config file '" + path + "'");
    std::ostringstream os;
    os << f.rdbuf();
    return parse_config(os.str());
}

void validate_config(const RunConfig& cfg) {
    validate_scene(cfg.scene);
    validate_grid(cfg.grid);
    if (cfg.raster.width < 1 || cfg.raster.height < 1)
        throw ValidationError("config [raster]: width and height must be positive");
    if (!(cfg.raster.pixel_mm > 0.0))
        throw ValidationError("config [raster].pixel_mm: must be positive");
    if (!(cfg.pulse.center_freq_hz > 0.0))
        throw ValidationError("config [pulse].center_freq_hz: must be positive");
    if (cfg.pulse.amplitude == 0.0 || !std::isfinite(cfg.pulse.amplitude))
        throw ValidationError("config [pulse].amplitude: must be finite and nonzero");
    if (cfg.p_paths < 1 || cfg.k_targets < 1)
        throw ValidationError("config [run]: p_paths and k_targets must be positive");
    if (cfg.p_paths * cfg.k_targets >= cfg.grid.n_coarse)
        throw ValidationError("config [run]: P*K must be smaller than L");
    if (cfg.p_paths != 3)
        throw ValidationError(
            "config [run].p_paths: only the single-wall path set (P = 3) is implemented");
    if (cfg.min_range_mm < 0.0)
        throw ValidationError("config [run].min_range_mm: must be >= 0");
    if (cfg.output_dir.empty())
        throw ValidationError("config [run].output_dir: must not be empty");
    for (double r : cfg.sweep_radii)
        if (!(r >= 0.0) || !std::isfinite(r))
            throw ValidationError("config [sweep].radii_mm: radii must be >= 0");
    if (std::isnan(cfg.noise.snr_db))
        throw ValidationError("config [noise].snr_db: must be a number or inf");
}

} // namespace sfdort
