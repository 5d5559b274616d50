#pragma once

#include <complex>

namespace pslp {

// Kahan compensated accumulator.  All long sums in this project go through
// one of these two, in a fixed iteration order, so results are reproducible
// at the 1e6-term scale.
struct KahanSum {
    double s = 0.0;
    double c = 0.0;

    void add(double x) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    double value() const { return s; }
};

struct KahanComplex {
    KahanSum re, im;

    void add(std::complex<double> z) {
        re.add(z.real());
        im.add(z.imag());
    }
    std::complex<double> value() const { return {re.value(), im.value()}; }
};

} // namespace pslp
