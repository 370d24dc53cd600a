#include "bazilevic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "parallel.hpp"

namespace bazlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// f = z * F given the unit series F: coefficient of z^k in f' is (k+1) F_k.
Series f_prime(const Series& unit) {
    const int n = unit.order();
    std::vector<Complex> c(static_cast<size_t>(n + 1));
    for (int k = 0; k <= n; ++k) c[k] = static_cast<double>(k + 1) * unit.coeff(k);
    return Series(std::move(c));
}

// z f'' for f = z * F: coefficient of z^k is (k+1) k F_k.
Series zf_double_prime(const Series& unit) {
    const int n = unit.order();
    std::vector<Complex> c(static_cast<size_t>(n + 1));
    for (int k = 1; k <= n; ++k) c[k] = static_cast<double>(k + 1) * k * unit.coeff(k);
    return Series(std::move(c));
}

} // namespace

double BazilevicSpec::alpha_total() const {
    double a = 0.0;
    for (double ai : alphas) a += ai;
    return a;
}

void BazilevicSpec::validate() const {
    if (beta != 0.0)
        throw Error(ErrorKind::BetaUnsupported,
                    "beta != 0 introduces z^{i beta} factors outside the Taylor carrier");
    if (alphas.empty())
        throw Error(ErrorKind::SpecInvalid, "need at least one exponent");
    for (double a : alphas)
        if (!(a > 0.0) || !std::isfinite(a))
            throw Error(ErrorKind::SpecInvalid, "exponents must be positive and finite");
    if (starlike_units.size() != alphas.size())
        throw Error(ErrorKind::SpecInvalid, "one starlike factor per exponent required");
    if (order < 1)
        throw Error(ErrorKind::SpecInvalid, "order must be at least 1");
    for (const Series& g : starlike_units) {
        if (g.order() < order)
            throw Error(ErrorKind::SpecInvalid, "starlike factor order below spec order");
        if (std::abs(g.coeff(0) - 1.0) > 1e-9)
            throw Error(ErrorKind::SpecInvalid, "starlike factors must be unit series g/z");
    }
    if (h.order() < order)
        throw Error(ErrorKind::SpecInvalid, "h order below spec order");
    if (std::abs(h.coeff(0) - 1.0) > 1e-9)
        throw Error(ErrorKind::SpecInvalid, "h must have constant term 1");
}

Series BazFunction::f() const {
    std::vector<Complex> c(static_cast<size_t>(unit.order() + 2));
    for (int k = 0; k <= unit.order(); ++k) c[k + 1] = unit.coeff(k);
    return Series(std::move(c));
}

Series integrand_unit(const BazilevicSpec& spec) {
    spec.validate();
    Series u = truncated(spec.h, spec.order);
    for (size_t i = 0; i < spec.alphas.size(); ++i)
        u = mul(u, pow_real(truncated(spec.starlike_units[i], spec.order), spec.alphas[i]));
    return u;
}

BazFunction construct(const BazilevicSpec& spec) {
    const Series u = integrand_unit(spec);
    const double alpha = spec.alpha_total();
    // alpha * int_0^z t^{alpha-1} u(t) dt = z^alpha * sum alpha/(alpha+n) u_n z^n;
    // the z^alpha factor is divided out symbolically, never materialized.
    std::vector<Complex> inner(static_cast<size_t>(spec.order + 1));
    for (int n = 0; n <= spec.order; ++n)
        inner[n] = (alpha / (alpha + n)) * u.coeff(n);
    return {pow_real(Series(std::move(inner)), 1.0 / alpha), alpha};
}

Series p_operator(const BazFunction& f, double alpha) {
    if (!(alpha > 0.0))
        throw Error(ErrorKind::InvalidArgument, "p_operator needs alpha > 0");
    const Series& F = f.unit;
    if (std::abs(F.coeff(0)) == 0.0)
        throw Error(ErrorKind::DivisionByVanishing, "f'(0) vanishes");
    const Series fp = f_prime(F);
    const Series curvature = div(zf_double_prime(F), fp); // z f''/f'
    const Series radial = div(fp, F);                     // z f'/f
    return add(add(Series::constant(1.0, F.order()), curvature), scale(radial, alpha - 1.0));
}

double necessary_condition(const BazFunction& f, double alpha, double r,
                           double theta1, double theta2, int K) {
    if (!(r > 0.0 && r <= kMaxEvalRadius))
        throw Error(ErrorKind::RadiusOutOfRange, "necessary-condition radius outside (0, r_max]");
    if (!(theta2 > theta1) || theta2 - theta1 > kTwoPi + 1e-12)
        throw Error(ErrorKind::InvalidArgument, "need theta1 < theta2 <= theta1 + 2pi");
    if (K < 64)
        throw Error(ErrorKind::InvalidArgument, "necessary-condition quadrature needs K >= 64");
    const Series P = p_operator(f, alpha);
    double sum = 0.0;
    const double h = (theta2 - theta1) / K;
    for (int k = 0; k <= K; ++k) {
        const double w = (k == 0 || k == K) ? 0.5 : 1.0;
        sum += w * eval(P, std::polar(r, theta1 + h * k)).real();
    }
    return h * sum;
}

NecessaryScan scan_necessary_condition(const BazFunction& f, double alpha,
                                       std::span<const double> radii,
                                       int n_theta1, int n_theta2, int K) {
    if (radii.empty() || n_theta1 < 1 || n_theta2 < 1)
        throw Error(ErrorKind::InvalidArgument, "empty necessary-condition scan grid");
    if (K < 64 || K % n_theta1 != 0 || K % n_theta2 != 0)
        throw Error(ErrorKind::InvalidArgument, "K must be >= 64 and divisible by both theta counts");
    for (double r : radii)
        if (!(r > 0.0 && r <= kMaxEvalRadius))
            throw Error(ErrorKind::RadiusOutOfRange, "scan radius outside (0, r_max]");
    const Series P = p_operator(f, alpha);
    const double h = kTwoPi / K;

    struct RadiusResult {
        double min_value;
        int at_i, at_j;
        double full_circle;
    };
    std::vector<RadiusResult> per_radius = parallel_map<RadiusResult>(
        radii.size(), [&](size_t ri) {
            const double r = radii[ri];
            std::vector<double> vals(static_cast<size_t>(K));
            for (int k = 0; k < K; ++k)
                vals[k] = eval(P, std::polar(r, h * k)).real();
            std::vector<double> prefix(static_cast<size_t>(K + 1));
            for (int k = 0; k < K; ++k) prefix[k + 1] = prefix[k] + vals[k];

            RadiusResult best{std::numeric_limits<double>::infinity(), 0, 0, 0.0};
            for (int i = 0; i < n_theta1; ++i) {
                const int a = i * (K / n_theta1);
                for (int j = 1; j <= n_theta2; ++j) {
                    const int w = j * (K / n_theta2); // window width in samples
                    const int b = a + w;
                    double s;
                    if (b < K) {
                        s = prefix[b + 1] - prefix[a];
                    } else {
                        s = (prefix[K] - prefix[a]) + prefix[b - K + 1];
                    }
                    s -= 0.5 * vals[a] + 0.5 * vals[b % K];
                    const double integral = h * s;
                    if (integral < best.min_value) {
                        best.min_value = integral;
                        best.at_i = i;
                        best.at_j = j;
                    }
                }
            }
            best.full_circle = h * prefix[K];
            return best;
        });

    NecessaryScan scan{std::numeric_limits<double>::infinity(), 0.0, 0.0, 0.0, 0.0, false};
    for (size_t ri = 0; ri < per_radius.size(); ++ri) {
        const RadiusResult& rr = per_radius[ri];
        if (rr.min_value < scan.min_value) {
            scan.min_value = rr.min_value;
            scan.at_radius = radii[ri];
            scan.at_theta1 = kTwoPi * rr.at_i / n_theta1;
            scan.at_theta2 = scan.at_theta1 + kTwoPi * rr.at_j / n_theta2;
        }
    }
    scan.full_circle_value = per_radius.front().full_circle;
    scan.exceeds_minus_pi = scan.min_value > -std::numbers::pi;
    return scan;
}

Series to_CI(const BazFunction& g, double alpha) {
    if (!(alpha > 1.0))
        throw Error(ErrorKind::AlphaOutOfRange, "correspondence needs alpha > 1");
    if (std::abs(alpha - g.alpha) > 1e-12)
        throw Error(ErrorKind::AlphaMismatch, "alpha differs from the one g was built with");
    const Series& F = g.unit;
    const Series integrand =
        mul(pow_real(F, 1.0 - 1.0 / alpha), pow_real(f_prime(F), 1.0 / alpha));
    return antideriv(integrand); // G(0) = 0, G'(0) = 1
}

BazFunction from_CI(const Series& F, double beta) {
    if (!(beta > 0.0 && beta < 1.0))
        throw Error(ErrorKind::InvalidArgument, "beta must lie in (0, 1)");
    if (F.order() < 2)
        throw Error(ErrorKind::NormalizationError, "F needs order >= 2");
    if (std::abs(F.coeff(0)) > 1e-9 || std::abs(F.coeff(1) - 1.0) > 1e-9)
        throw Error(ErrorKind::NormalizationError, "need F(0) = 0 and F'(0) = 1");
    const Series p = pow_real(deriv(F), 1.0 / beta);
    const double alpha = 1.0 / beta;
    std::vector<Complex> inner(static_cast<size_t>(p.order() + 1));
    for (int n = 0; n <= p.order(); ++n)
        inner[n] = p.coeff(n) / (1.0 + beta * n);
    return {pow_real(Series(std::move(inner)), beta), alpha};
}

} // namespace bazlab
