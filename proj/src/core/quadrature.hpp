#ifndef BAZLAB_CORE_QUADRATURE_HPP
#define BAZLAB_CORE_QUADRATURE_HPP

#include <functional>

namespace bazlab {

struct QuadResult {
    double value;
    double error_estimate; // |I_K - I_{K/2}|, Richardson-style
};

// Composite trapezoid on [a, b] with K subintervals; the error estimate
// compares against the embedded K/2 rule (requires K even, else reported 0).
QuadResult trapezoid(const std::function<double(double)>& f, double a, double b, int K);

// Mean of K uniform samples f(k * 2pi / K), k = 0..K-1, times 2pi: the
// periodic trapezoid rule over a full period.
QuadResult trapezoid_periodic(const std::function<double(double)>& f, int K);

} // namespace bazlab

#endif
