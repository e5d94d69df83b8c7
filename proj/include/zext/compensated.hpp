// Compensated (error-free-transformation) accumulators for long sums.
// The Neumaier variant of Kahan summation: keeps a running correction that
// also captures the case where the incoming term is larger than the sum.
#pragma once

#include <complex>

namespace zext {

struct NeumaierSum {
    double s = 0.0;   // running sum
    double c = 0.0;   // running compensation

    void add(double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
    void reset() { s = 0.0; c = 0.0; }
};

struct ComplexSum {
    NeumaierSum re, im;

    void add(std::complex<double> z) {
        re.add(z.real());
        im.add(z.imag());
    }
    std::complex<double> value() const { return {re.value(), im.value()}; }
    void reset() { re.reset(); im.reset(); }
};

} // namespace zext
