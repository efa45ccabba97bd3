// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the sfdort developers

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>

#include "sfdort/errors.hpp"
#include "sfdort/imaging.hpp"
#include "sfdort/metrics.hpp"
#include "sfdort/pipeline.hpp"

using namespace sfdort;

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

Scene paper_scene() {
    Scene s;
    s.antenna = {0.0, 600.0};
    s.targets = {{{600.0, 750.0}, 0.0, 1.0}};
    return s;
}

FrequencyGrid paper_grid() { return {kTwoPi * 1.5e9, kTwoPi * 60.0e6, 100, 10}; }

// 25 mm raster window around the target: x in [350, 850], y in [500, 1000]
RasterSpec window_raster() { return {{337.5, 487.5}, 25.0, 21, 21}; }

// full-size default run, shared across test cases
const RunResult& reference_run() {
    static const RunResult r = [] {
        RunConfig cfg = paper_default_config();
        return run_pipeline(cfg);
    }();
    return r;
}

} // namespace

TEST_CASE("steering vector basics") {
    const Scene s = paper_scene();
    const auto grid = paper_grid();
    const Pulse pulse;

    const auto g = steering(s, grid, pulse, PathId::direct, {600.0, 750.0}, SteeringKind::coarse);
    CHECK(g.values.size() == 10);

    Scene no_wall = s;
    no_wall.reflection = {0.0, 0.0};
    const auto dead =
        steering(no_wall, grid, pulse, PathId::two_bounce, {600.0, 750.0}, SteeringKind::fine);
    for (const auto& v : dead.values) CHECK(v == std::complex<double>{0.0, 0.0});

    // at the target the coarse direct steering is collinear with the coarse
    // subsample of a wall-free synthesized spectrum
    const auto sv = synthesize(no_wall, grid, pulse, SpectrumConvention::raw);
    const auto gd =
        steering(no_wall, grid, pulse, PathId::direct, {600.0, 750.0}, SteeringKind::coarse);
    std::complex<double> dot{0.0, 0.0};
    double na = 0.0, nb = 0.0;
    const auto idx = coarse_indices(grid);
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const auto data = sv.values[idx[k] - 1];
        dot += std::conj(gd.values[k]) * data;
        na += std::norm(gd.values[k]);
        nb += std::norm(data);
    }
    CHECK(std::abs(dot) / std::sqrt(na * nb) > 0.999);
}

TEST_CASE("pixel validity rule") {
    const Scene s = paper_scene();
    ImagingOptions opt;
    CHECK(pixel_valid(s, {600.0, 750.0}, opt));
    CHECK(!pixel_valid(s, {600.0, 0.0}, opt));   // on the wall
    CHECK(!pixel_valid(s, {600.0, -5.0}, opt));  // below the wall
    CHECK(!pixel_valid(s, {0.0, 600.0}, opt));   // at the antenna
    CHECK(!pixel_valid(s, {0.0, 650.0}, opt));   // inside the near-field disc
    CHECK(pixel_valid(s, {0.0, 851.0}, opt));    // right outside it
    opt.min_clearance_mm = 20.0;
    CHECK(!pixel_valid(s, {600.0, 15.0}, opt)); // a radius-20 centre can't sit there
}

TEST_CASE("tr_image on the zero spectrum") {
    SpectrumVector sv;
    sv.grid = paper_grid();
    sv.values.assign(100, {0.0, 0.0});
    const auto img = tr_image(sv, paper_scene(), Pulse{}, window_raster());
    CHECK(!img.normalized);
    for (double v : img.intensities) CHECK(v == 0.0);
}

TEST_CASE("tr_image localizes on a small window") {
    const auto sv = synthesize(paper_scene(), paper_grid(), Pulse{});
    const auto img = tr_image(sv, paper_scene(), Pulse{}, window_raster());
    CHECK(img.normalized);
    const Point2 peak = peak_position(img);
    CHECK(distance(peak, {600.0, 750.0}) <= 10.0);
}

TEST_CASE("subspace images on a small window") {
    const auto sv = synthesize(paper_scene(), paper_grid(), Pulse{});
    const auto ns = noise_subspace(svd(build_kff(sv)), 3, 1);
    const Scene s = paper_scene();

    const auto left = subspace_image(ns, SubspaceSide::left, s, paper_grid(), Pulse{},
                                     window_raster());
    const auto right = subspace_image(ns, SubspaceSide::right, s, paper_grid(), Pulse{},
                                      window_raster());
    CHECK(distance(peak_position(left), {600.0, 750.0}) <= 10.0);

    const auto dort = dort_image(left, right);
    CHECK(distance(peak_position(dort), {600.0, 750.0}) <= 10.0);

    // rho = 0 with the full path set leaves no live pixel
    Scene no_wall = s;
    no_wall.reflection = {0.0, 0.0};
    const auto sv0 = synthesize(no_wall, paper_grid(), Pulse{});
    const auto ns0 = noise_subspace(svd(build_kff(sv0)), 3, 1);
    CHECK_THROWS_AS(subspace_image(ns0, SubspaceSide::left, no_wall, paper_grid(), Pulse{},
                                   window_raster()),
                    NumericalError);
}

TEST_CASE("per-path normalization makes path rescaling irrelevant") {
    // Building the denominator with g_2 scaled by 7 must not change it: the
    // |g_p|^2 division absorbs any per-path scale.
    const auto sv = synthesize(paper_scene(), paper_grid(), Pulse{});
    const auto ns = noise_subspace(svd(build_kff(sv)), 3, 1);
    const Scene s = paper_scene();
    const auto grid = paper_grid();

    auto denominator = [&](Point2 x, std::complex<double> path2_scale) {
        double den = 0.0;
        for (PathId p : kAllPaths) {
            auto g = steering(s, grid, Pulse{}, p, x, SteeringKind::coarse);
            if (p == PathId::one_bounce)
                for (auto& v : g.values) v *= path2_scale;
            double norm2 = 0.0;
            for (const auto& v : g.values) norm2 += std::norm(v);
            for (const auto& u : ns.left) {
                std::complex<double> dot{0.0, 0.0};
                for (std::size_t r = 0; r < u.size(); ++r)
                    dot += std::conj(u[r]) * g.values[r];
                den += std::norm(dot) / norm2;
            }
        }
        return den;
    };

    for (const Point2 x : {Point2{600.0, 750.0}, Point2{400.0, 900.0}, Point2{730.0, 310.0}}) {
        const double plain = denominator(x, {1.0, 0.0});
        const double scaled = denominator(x, {7.0, 0.0});
        CHECK(std::abs(plain - scaled) <= 1e-12 * plain);
    }
}

TEST_CASE("MUSIC null on a coarse raster (single path, exact separability)") {
    // rho = 0 and P = 1: the left-subspace denominator at the target is
    // smaller than anywhere farther than two pixels away inside a window that
    // excludes the coarse-sampling delay ambiguity
    Scene s = paper_scene();
    s.reflection = {0.0, 0.0};
    const auto sv = synthesize(s, paper_grid(), Pulse{});
    const auto ns = noise_subspace(svd(build_kff(sv)), 1, 1);
    CHECK(ns.left.size() == 9);

    ImagingOptions opt;
    opt.paths = {PathId::direct};
    const auto img = subspace_image(ns, SubspaceSide::left, s, paper_grid(), Pulse{},
                                    window_raster(), opt);

    // image = 1/denominator: the target pixel must be the strict maximum
    // among pixels farther than 2 px (50 mm)
    const Point2 target{600.0, 750.0};
    double at_target = 0.0, best_far = 0.0;
    for (int r = 0; r < img.raster.height; ++r)
        for (int c = 0; c < img.raster.width; ++c) {
            const Point2 x = img.raster.pixel_center(r, c);
            if (distance(x, target) < 1.0) at_target = img.at(r, c);
            else if (distance(x, target) > 2.0 * img.raster.pixel_mm)
                best_far = std::max(best_far, img.at(r, c));
        }
    CHECK(at_target > best_far);
}

TEST_CASE("dort_image algebra") {
    const auto sv = synthesize(paper_scene(), paper_grid(), Pulse{});
    const auto ns = noise_subspace(svd(build_kff(sv)), 3, 1);
    const auto left = subspace_image(ns, SubspaceSide::left, paper_scene(), paper_grid(),
                                     Pulse{}, window_raster());

    // product with itself squares every (normalized) pixel
    const auto sq = dort_image(left, left);
    const double mx2 = [&] {
        double m = 0.0;
        for (double v : left.intensities) m = std::max(m, v * v);
        return m;
    }();
    for (std::size_t i = 0; i < sq.intensities.size(); ++i)
        CHECK(sq.intensities[i] ==
              doctest::Approx(left.intensities[i] * left.intensities[i] / mx2).epsilon(1e-12));

    // uniform-1 factor reproduces the other factor
    ImageGrid ones = left;
    for (double& v : ones.intensities) v = 1.0;
    const auto same = dort_image(left, ones);
    for (std::size_t i = 0; i < same.intensities.size(); ++i)
        CHECK(same.intensities[i] == doctest::Approx(left.intensities[i]).epsilon(1e-12));

    ImageGrid other = left;
    other.raster.width += 1;
    CHECK_THROWS_AS(dort_image(left, other), ValidationError);
}

TEST_CASE("argmax is invariant under spectrum scaling") {
    RunConfig cfg = paper_default_config();
    cfg.raster = window_raster();

    auto sv = synthesize(cfg.scene, cfg.grid, cfg.pulse, cfg.convention);
    const auto ns = noise_subspace(svd(build_kff(sv)), 3, 1);
    const auto base_left = subspace_image(ns, SubspaceSide::left, cfg.scene, cfg.grid,
                                          cfg.pulse, cfg.raster);
    const auto base_tr = tr_image(sv, cfg.scene, cfg.pulse, cfg.raster);

    // complex constant for the subspace pipeline
    SpectrumVector scaled = sv;
    for (auto& v : scaled.values) v *= std::complex<double>{-2.5, 1.75};
    const auto ns2 = noise_subspace(svd(build_kff(scaled)), 3, 1);
    const auto left2 = subspace_image(ns2, SubspaceSide::left, cfg.scene, cfg.grid, cfg.pulse,
                                      cfg.raster);
    const auto right2 = subspace_image(ns2, SubspaceSide::right, cfg.scene, cfg.grid,
                                       cfg.pulse, cfg.raster);
    CHECK(peak_position(left2) == peak_position(base_left));

    // positive real constant for the time-reversal image (its t=0 field
    // selection is phase-sensitive by construction)
    SpectrumVector scaled_pos = sv;
    for (auto& v : scaled_pos.values) v *= 42.0;
    const auto tr2 = tr_image(scaled_pos, cfg.scene, cfg.pulse, cfg.raster);
    CHECK(peak_position(tr2) == peak_position(base_tr));
    for (std::size_t i = 0; i < tr2.intensities.size(); ++i)
        CHECK(tr2.intensities[i] == doctest::Approx(base_tr.intensities[i]).epsilon(1e-12));
}

TEST_CASE("images are nonnegative and peak-normalized") {
    const RunResult& run = reference_run();
    for (const auto* img : {&*run.tr, &*run.left, &*run.right, &*run.dort}) {
        CHECK(img->normalized);
        double mx = 0.0;
        for (double v : img->intensities) {
            CHECK(v >= 0.0);
            mx = std::max(mx, v);
        }
        CHECK(mx == 1.0);
    }
}

TEST_CASE("full-raster structure: replicas, suppression, lobe widths") {
    const RunResult& run = reference_run();
    REQUIRE(run.left);
    REQUIRE(run.right);
    REQUIRE(run.dort);

    const ImageGrid& left = *run.left;
    const ImageGrid& right = *run.right;

    // left image: global max at the target
    CHECK(distance(peak_position(left), {600.0, 750.0}) <= 10.0);

    // right main lobe is wider than the left one (half-max run through the
    // target row at y = 750)
    const int row = 150, col = 120;
    auto halfmax_width = [&](const ImageGrid& img) {
        int lo = col, hi = col;
        while (lo > 0 && img.at(row, lo - 1) >= 0.5) --lo;
        while (hi + 1 < img.raster.width && img.at(row, hi + 1) >= 0.5) ++hi;
        return (hi - lo + 1) * img.raster.pixel_mm;
    };
    CHECK(halfmax_width(right) > halfmax_width(left));

    // grating replicas of I_L sit at integer multiples of the coarse delay
    // period in at least one path-delay coordinate, and I_R stays low there
    const Scene s = paper_scene();
    const Point2 target{600.0, 750.0};
    const double period_mm = s.speed / (10.0 * 60.0e6); // c/(L df), two-way mm
    const auto offsets = [&](Point2 x) {
        const auto t = path_lengths(s, target);
        const auto p = path_lengths(s, x);
        return std::array<double, 3>{(2 * p.direct - 2 * t.direct) / period_mm,
                                     (p.direct + p.mirrored - t.direct - t.mirrored) / period_mm,
                                     (2 * p.mirrored - 2 * t.mirrored) / period_mm};
    };

    int replicas = 0;
    for (int r = 1; r + 1 < left.raster.height; ++r) {
        for (int c = 1; c + 1 < left.raster.width; ++c) {
            const double v = left.at(r, c);
            if (v < 0.3) continue;
            bool is_max = true;
            for (int dr = -1; dr <= 1 && is_max; ++dr)
                for (int dc = -1; dc <= 1; ++dc) {
                    if (!dr && !dc) continue;
                    if (left.at(r + dr, c + dc) > v) {
                        is_max = false;
                        break;
                    }
                }
            if (!is_max) continue;
            const Point2 x = left.raster.pixel_center(r, c);
            if (distance(x, target) <= 15.0) continue; // main peak
            double best_quant = 1e9;
            int best_k = 0;
            for (double o : offsets(x)) {
                const double q = std::abs(o - std::round(o));
                if (q < best_quant) {
                    best_quant = q;
                    best_k = static_cast<int>(std::round(o));
                }
            }
            CHECK(best_quant <= 0.1); // within 10% of the period grid
            if (best_k != 0) {
                ++replicas;
                CHECK(right.at(r, c) < 0.5); // the right image suppresses it
            }
        }
    }
    CHECK(replicas >= 3);
}
