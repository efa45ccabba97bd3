// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 the sfdort developers

#pragma once

#include <cmath>

// Minimal double-double arithmetic (Dekker/Knuth error-free transforms) for
// the test oracles. ~31 significant digits; enough to run alternating series
// with 1e19 cancellation and still certify 1e-10 absolute accuracy.

namespace sfdort::testsupport {

struct DD {
    double hi{0.0};
    double lo{0.0};

    DD() = default;
    DD(double h) : hi(h) {}
    DD(double h, double l) : hi(h), lo(l) {}
};

inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) { // requires |a| >= |b|
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DD sub(DD a, DD b) { return add(a, {-b.hi, -b.lo}); }

inline DD mul(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline DD mul(DD a, double b) {
    DD p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline DD div(DD a, double b) {
    const double q1 = a.hi / b;
    DD r = sub(a, two_prod(q1, b));
    const double q2 = r.hi / b;
    r = sub(r, two_prod(q2, b));
    const double q3 = r.hi / b;
    DD q = quick_two_sum(q1, q2);
    q.lo += q3;
    return quick_two_sum(q.hi, q.lo);
}

inline double to_double(DD a) { return a.hi + a.lo; }

} // namespace sfdort::testsupport
