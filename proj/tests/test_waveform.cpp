// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the sfdort developers

#include <doctest.h>

#include <cmath>

#include "sfdort/errors.hpp"
#include "sfdort/waveform.hpp"

using namespace sfdort;

namespace {
constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

FrequencyGrid paper_grid() { return {kTwoPi * 1.5e9, kTwoPi * 60.0e6, 100, 10}; }
} // namespace

TEST_CASE("grid invariants") {
    CHECK(!grid_violation(paper_grid()));
    CHECK(grid_violation({kTwoPi * 1.5e9, kTwoPi * 60.0e6, 99, 10}).has_value()); // N != L^2
    CHECK(grid_violation({kTwoPi * 1.5e9, kTwoPi * 60.0e6, 1, 1}).has_value());  // L < 2
    CHECK(grid_violation({kTwoPi * 1.5e9, -1.0, 100, 10}).has_value());
    CHECK(grid_violation({-kTwoPi * 1.0e9, kTwoPi * 60.0e6, 100, 10}).has_value());
    CHECK_THROWS_AS(validate_grid({0.0, 0.0, 100, 10}), ValidationError);
}

TEST_CASE("omega examples") {
    const auto g = paper_grid();
    CHECK(omega(g, 1) == doctest::Approx(kTwoPi * 1.56e9).epsilon(1e-12));
    CHECK(omega(g, 100) == doctest::Approx(kTwoPi * 7.5e9).epsilon(1e-12));
    CHECK_THROWS_AS(omega(g, 0), std::out_of_range);
    CHECK_THROWS_AS(omega(g, 101), std::out_of_range);

    // strictly increasing
    for (int n = 1; n < 100; ++n) CHECK(omega(g, n + 1) > omega(g, n));
}

TEST_CASE("coarse and fine index lists") {
    const auto g = paper_grid();
    const auto coarse = coarse_indices(g);
    const auto fine = fine_indices(g);
    REQUIRE(coarse.size() == 10);
    REQUIRE(fine.size() == 10);
    CHECK(coarse == std::vector<int>{1, 11, 21, 31, 41, 51, 61, 71, 81, 91});
    CHECK(fine == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    for (int i : coarse) CHECK((i >= 1 && i <= 100));

    const FrequencyGrid tiny{kTwoPi * 1.0e9, kTwoPi * 50.0e6, 4, 2};
    CHECK(coarse_indices(tiny) == std::vector<int>{1, 3});
    CHECK(fine_indices(tiny) == std::vector<int>{1, 2});
}

TEST_CASE("monocycle spectrum") {
    const Pulse p; // 4 GHz
    CHECK(p.tau() == doctest::Approx(39.789e-12).epsilon(1e-4));

    // the magnitude peaks at omega = 1/tau, i.e. at the centre frequency
    const double w_peak = 1.0 / p.tau();
    CHECK(w_peak == doctest::Approx(kTwoPi * 4.0e9).epsilon(1e-12));
    const double peak = std::abs(pulse_spectrum(p, w_peak));
    for (double f = 0.2e9; f < 12.0e9; f += 0.1e9)
        CHECK(std::abs(pulse_spectrum(p, kTwoPi * f)) <= peak * (1 + 1e-12));

    // in-band edge ratio from the closed form u * exp((1-u^2)/2), u = f/f_c
    const double u = 1.56 / 4.0;
    const double expected = u * std::exp((1.0 - u * u) / 2.0);
    const double got =
        std::abs(pulse_spectrum(p, kTwoPi * 1.56e9)) / std::abs(pulse_spectrum(p, kTwoPi * 4.0e9));
    CHECK(got == doctest::Approx(expected).epsilon(1e-12));
    CHECK(got == doctest::Approx(0.595914).epsilon(1e-5));

    // monotone decay above the peak
    double prev = peak;
    for (double f = 4.1e9; f < 20.0e9; f += 0.1e9) {
        const double v = std::abs(pulse_spectrum(p, kTwoPi * f));
        CHECK(v <= prev);
        prev = v;
    }

    // pure positive-imaginary phase for positive omega
    const auto s = pulse_spectrum(p, kTwoPi * 2.0e9);
    CHECK(s.real() == 0.0);
    CHECK(s.imag() > 0.0);
}
