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

#include "sfdort/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "sfdort/errors.hpp"
#include "text_format.hpp"

namespace sfdort {

namespace {

using detail::fmt_double;
using detail::parse_double;

std::ofstream open_out(const std::string& path, std::ios::openmode mode = std::ios::out) {
    std::ofstream f(path, mode);
    if (!f) throw IoError("cannot open '" + path + "' for writing");
    return f;
}

std::ifstream open_in(const std::string& path, std::ios::openmode mode = std::ios::in) {
    std::ifstream f(path, mode);
    if (!f) throw IoError("cannot open '" + path + "' for reading");
    return f;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

double to_double(const std::string& s, const std::string& path) {
    bool ok = false;
    const double v = parse_double(s, ok);
    if (!ok) throw IoError("malformed number '" + s + "' in " + path);
    return v;
}

} // namespace

void write_spectrum_csv(const std::string& path, const SpectrumVector& sv) {
    auto f = open_out(path);
    f << "# sfdort spectrum omega0=" << fmt_double(sv.grid.omega0)
      << " delta_omega=" << fmt_double(sv.grid.delta_omega) << " L=" << sv.grid.n_coarse
      << " convention=" << (sv.convention == SpectrumConvention::raw ? "raw" : "matched")
      << "\n";
    f << "# n,omega_rad_s,re,im\n";
    for (int n = 1; n <= sv.grid.n_total; ++n) {
        const auto v = sv.values[n - 1];
        f << n << "," << fmt_double(omega(sv.grid, n)) << "," << fmt_double(v.real()) << ","
          << fmt_double(v.imag()) << "\n";
    }
    if (!f) throw IoError("write failed for '" + path + "'");
}

SpectrumVector read_spectrum_csv(const std::string& path) {
    auto f = open_in(path);
    std::string line;
    if (!std::getline(f, line) || line.rfind("# sfdort spectrum ", 0) != 0)
        throw IoError("'" + path + "' is not a sfdort spectrum file");

    SpectrumVector sv;
    std::istringstream hdr(line.substr(std::string("# sfdort spectrum ").size()));
    std::string tok;
    while (hdr >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
        if (key == "omega0") sv.grid.omega0 = to_double(value, path);
        else if (key == "delta_omega") sv.grid.delta_omega = to_double(value, path);
        else if (key == "L") sv.grid.n_coarse = std::stoi(value);
        else if (key == "convention")
            sv.convention = value == "matched" ? SpectrumConvention::matched
                                               : SpectrumConvention::raw;
    }
    sv.grid.n_total = sv.grid.n_coarse * sv.grid.n_coarse;

    while (std::getline(f, line)) {
        if (line.empty() || line.front() == '#') continue;
        const auto cols = split(line, ',');
        if (cols.size() != 4) throw IoError("malformed spectrum row in '" + path + "'");
        sv.values.emplace_back(to_double(cols[2], path), to_double(cols[3], path));
    }
    if (static_cast<int>(sv.values.size()) != sv.grid.n_total)
        throw IoError("'" + path + "': expected " + std::to_string(sv.grid.n_total) +
                      " rows, found " + std::to_string(sv.values.size()));
    return sv;
}

void write_image_csv(const std::string& path, const ImageGrid& image) {
    auto f = open_out(path);
    f << "# origin_x,origin_y,pixel_mm,width,height\n";
    f << fmt_double(image.raster.origin.x) << "," << fmt_double(image.raster.origin.y) << ","
      << fmt_double(image.raster.pixel_mm) << "," << image.raster.width << ","
      << image.raster.height << "\n";
    for (int row = 0; row < image.raster.height; ++row) {
        for (int col = 0; col < image.raster.width; ++col) {
            if (col) f << ",";
            f << fmt_double(image.at(row, col));
        }
        f << "\n";
    }
    if (!f) throw IoError("write failed for '" + path + "'");
}

ImageGrid read_image_csv(const std::string& path) {
    auto f = open_in(path);
    std::string line;
    if (!std::getline(f, line) || line.rfind("# origin_x", 0) != 0)
        throw IoError("'" + path + "' is not a sfdort image file");
    if (!std::getline(f, line)) throw IoError("'" + path + "': missing metadata row");
    const auto meta = split(line, ',');
    if (meta.size() != 5) throw IoError("'" + path + "': malformed metadata row");

    ImageGrid image;
    image.raster.origin = {to_double(meta[0], path), to_double(meta[1], path)};
    image.raster.pixel_mm = to_double(meta[2], path);
    image.raster.width = std::stoi(meta[3]);
    image.raster.height = std::stoi(meta[4]);
    image.intensities.reserve(image.raster.pixel_count());
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        for (const auto& cell : split(line, ','))
            image.intensities.push_back(to_double(cell, path));
    }
    if (static_cast<int>(image.intensities.size()) != image.raster.pixel_count())
        throw IoError("'" + path + "': pixel count mismatch");
    double mx = 0.0;
    for (double v : image.intensities) mx = std::max(mx, v);
    image.normalized = mx > 0.0;
    return image;
}

void write_image_pgm(const std::string& path, const ImageGrid& image) {
    auto f = open_out(path, std::ios::out | std::ios::binary);
    f << "P5\n" << image.raster.width << " " << image.raster.height << "\n65535\n";
    std::vector<std::uint8_t> row(static_cast<std::size_t>(image.raster.width) * 2);
    for (int r = 0; r < image.raster.height; ++r) {
        for (int c = 0; c < image.raster.width; ++c) {
            const double v = std::clamp(image.at(r, c), 0.0, 1.0);
            const auto q = static_cast<std::uint16_t>(std::lround(v * 65535.0));
            row[2 * c] = static_cast<std::uint8_t>(q >> 8); // big-endian per netpbm
            row[2 * c + 1] = static_cast<std::uint8_t>(q & 0xff);
        }
        f.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
    }
    if (!f) throw IoError("write failed for '" + path + "'");
}

void write_svd_csv(const std::string& path, const SvdResult& svd_result) {
    auto f = open_out(path);
    const int l = svd_result.order;
    f << "# sigma\n";
    for (int i = 0; i < l; ++i) {
        if (i) f << ",";
        f << fmt_double(svd_result.singular_values[i]);
    }
    f << "\n# U re/im columns (u_1_re,u_1_im,...), one row per component\n";
    for (int r = 0; r < l; ++r) {
        for (int i = 0; i < l; ++i) {
            if (i) f << ",";
            f << fmt_double(svd_result.left[i][r].real()) << ","
              << fmt_double(svd_result.left[i][r].imag());
        }
        f << "\n";
    }
    f << "# V re/im columns\n";
    for (int r = 0; r < l; ++r) {
        for (int i = 0; i < l; ++i) {
            if (i) f << ",";
            f << fmt_double(svd_result.right[i][r].real()) << ","
              << fmt_double(svd_result.right[i][r].imag());
        }
        f << "\n";
    }
    if (!f) throw IoError("write failed for '" + path + "'");
}

void append_results_csv(const std::string& path, const std::vector<EvalReport>& reports,
                        double radius_mm) {
    const bool fresh = !std::ifstream(path).good();
    auto f = open_out(path, std::ios::out | std::ios::app);
    if (fresh) f << "method,r_mm,error_mm,h4,runtime_s\n";
    for (const auto& r : reports)
        f << r.method << "," << fmt_double(radius_mm) << "," << fmt_double(r.error_mm) << ","
          << fmt_double(r.sharpness_h4) << "," << fmt_double(r.runtime_s) << "\n";
    if (!f) throw IoError("write failed for '" + path + "'");
}

std::vector<ResultRow> read_results_csv(const std::string& path) {
    auto f = open_in(path);
    std::string line;
    std::vector<ResultRow> rows;
    bool first = true;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line.rfind("method,", 0) == 0) continue; // header
        }
        const auto cols = split(line, ',');
        if (cols.size() != 5) throw IoError("malformed results row in '" + path + "'");
        rows.push_back({cols[0], to_double(cols[1], path), to_double(cols[2], path),
                        to_double(cols[3], path), to_double(cols[4], path)});
    }
    return rows;
}

} // namespace sfdort
