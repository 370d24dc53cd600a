#include "quadrature.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "errors.hpp"

namespace bazlab {

QuadResult trapezoid(const std::function<double(double)>& f, double a, double b, int K) {
    if (K < 1)
        throw Error(ErrorKind::InvalidArgument, "trapezoid needs K >= 1 subintervals");
    if (!(b > a))
        throw Error(ErrorKind::InvalidArgument, "trapezoid needs b > a");
    const double h = (b - a) / K;
    std::vector<double> v(static_cast<size_t>(K + 1));
    for (int k = 0; k <= K; ++k) v[k] = f(a + h * k);

    double sum = 0.5 * (v[0] + v[K]);
    for (int k = 1; k < K; ++k) sum += v[k];
    const double full = h * sum;

    double err = 0.0;
    if (K % 2 == 0) {
        double half_sum = 0.5 * (v[0] + v[K]);
        for (int k = 2; k < K; k += 2) half_sum += v[k];
        err = std::abs(full - 2.0 * h * half_sum);
    }
    return {full, err};
}

QuadResult trapezoid_periodic(const std::function<double(double)>& f, int K) {
    if (K < 2)
        throw Error(ErrorKind::InvalidArgument, "periodic trapezoid needs K >= 2 points");
    const double step = 2.0 * std::numbers::pi / K;
    std::vector<double> v(static_cast<size_t>(K));
    for (int k = 0; k < K; ++k) v[k] = f(step * k);

    double sum = 0.0;
    for (double x : v) sum += x;
    const double full = step * sum;

    double err = 0.0;
    if (K % 2 == 0) {
        double half_sum = 0.0;
        for (int k = 0; k < K; k += 2) half_sum += v[k];
        err = std::abs(full - 2.0 * step * half_sum);
    }
    return {full, err};
}

} // namespace bazlab
