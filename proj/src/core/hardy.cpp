#include "hardy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "classes.hpp"
#include "parallel.hpp"

namespace bazlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kBoundedGate = 0.05;
constexpr double kPowerMenu[] = {0.25, 0.5, 1.0, 2.0};

struct LinearFit {
    double a, b, residual; // y ~ a + b x, residual = rms(y - yhat)
};

LinearFit least_squares(std::span<const double> x, std::span<const double> y) {
    const size_t n = x.size();
    double sx = 0, sy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    const double b = sxx > 0 ? sxy / sxx : 0.0;
    const double a = my - b * mx;
    double rss = 0;
    for (size_t i = 0; i < n; ++i) {
        const double e = y[i] - (a + b * x[i]);
        rss += e * e;
    }
    return {a, b, std::sqrt(rss / n)};
}

double rms(std::span<const double> y) {
    double s = 0;
    for (double v : y) s += v * v;
    return std::sqrt(s / y.size());
}

} // namespace

double integral_means(const Series& f, double p, double r, int K) {
    if (!(r > 0.0 && r <= kMaxEvalRadius))
        throw Error(ErrorKind::RadiusOutOfRange, "means radius outside (0, r_max]");
    if (K < 256)
        throw Error(ErrorKind::InvalidArgument, "integral means need K >= 256");
    const bool infinite = std::isinf(p);
    if (!infinite && !(p > 0.0))
        throw Error(ErrorKind::InvalidArgument, "exponent must be positive or infinity");
    const auto vals = eval_circle(f, r, K);
    if (infinite) {
        double m = 0.0;
        for (const Complex& v : vals) m = std::max(m, std::abs(v));
        return m;
    }
    double mean = 0.0;
    for (const Complex& v : vals) mean += std::pow(std::abs(v), p);
    mean /= K;
    return std::pow(mean, 1.0 / p);
}

const char* growth_model_name(GrowthModel m) {
    switch (m) {
    case GrowthModel::None: return "none";
    case GrowthModel::Bounded: return "bounded";
    case GrowthModel::LogDivergent: return "log-divergent";
    case GrowthModel::PowerDivergent: return "power-divergent";
    }
    return "none";
}

GrowthFit fit_growth(std::span<const double> radii, std::span<const double> y) {
    if (radii.size() != y.size())
        throw Error(ErrorKind::LengthMismatch, "radii and sample counts differ");
    GrowthFit fit;
    if (y.size() < 3) return fit; // single points carry no classification claim

    const double scale_rms = rms(y);
    double mean = 0.0;
    for (double v : y) mean += v;
    mean /= y.size();
    double crss = 0.0;
    for (double v : y) crss += (v - mean) * (v - mean);
    const double const_resid = std::sqrt(crss / y.size());
    fit.const_residual = scale_rms > 0 ? const_resid / scale_rms : 0.0;

    if (fit.const_residual < kBoundedGate) {
        fit.model = GrowthModel::Bounded;
        fit.intercept = mean;
        fit.rel_residual = fit.const_residual;
        return fit;
    }

    std::vector<double> lx(radii.size());
    for (size_t i = 0; i < radii.size(); ++i) lx[i] = std::log(1.0 / (1.0 - radii[i]));
    const LinearFit logfit = least_squares(lx, y);

    LinearFit best_pow{0, 0, std::numeric_limits<double>::infinity()};
    double best_s = kPowerMenu[0];
    for (double s : kPowerMenu) {
        std::vector<double> px(radii.size());
        for (size_t i = 0; i < radii.size(); ++i) px[i] = std::pow(1.0 - radii[i], -s);
        const LinearFit pf = least_squares(px, y);
        if (pf.residual < best_pow.residual) {
            best_pow = pf;
            best_s = s;
        }
    }

    if (logfit.residual <= best_pow.residual) {
        fit.model = GrowthModel::LogDivergent;
        fit.intercept = logfit.a;
        fit.slope = logfit.b;
        fit.rel_residual = scale_rms > 0 ? logfit.residual / scale_rms : 0.0;
    } else {
        fit.model = GrowthModel::PowerDivergent;
        fit.intercept = best_pow.a;
        fit.slope = best_pow.b;
        fit.power_exponent = best_s;
        fit.rel_residual = scale_rms > 0 ? best_pow.residual / scale_rms : 0.0;
    }
    return fit;
}

double truncation_tail(const Series& f, double r) {
    double growth = 0.0; // coefficient model |a_n| <= n * growth
    for (int n = 1; n <= f.order(); ++n)
        growth = std::max(growth, std::abs(f.coeff(n)) / n);
    const int N = f.order();
    // sum_{n > N} n r^n = r^{N+1} ((N+1) - N r) / (1-r)^2
    const double tail = std::pow(r, N + 1) * ((N + 1) - N * r) / ((1.0 - r) * (1.0 - r));
    return growth * tail;
}

double honest_max_radius(const Series& f, double budget) {
    if (!(budget > 0.0))
        throw Error(ErrorKind::InvalidArgument, "truncation budget must be positive");
    double lo = 0.0, hi = kMaxEvalRadius;
    if (truncation_tail(f, hi) <= budget) return hi;
    for (int iter = 0; iter < 80; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (truncation_tail(f, mid) <= budget ? lo : hi) = mid;
    }
    return lo;
}

MeansReport means_profile(const Series& f, double p, std::span<const double> radii, int K) {
    if (radii.empty())
        throw Error(ErrorKind::InvalidArgument, "means profile needs at least one radius");
    for (size_t i = 0; i + 1 < radii.size(); ++i)
        if (!(radii[i] < radii[i + 1]))
            throw Error(ErrorKind::InvalidArgument, "means profile radii must increase");

    MeansReport rep;
    rep.p = p;
    rep.radii.assign(radii.begin(), radii.end());
    rep.values = parallel_map<double>(radii.size(),
                                      [&](size_t i) { return integral_means(f, p, radii[i], K); });
    rep.truncation_error.resize(radii.size());
    for (size_t i = 0; i < radii.size(); ++i)
        rep.truncation_error[i] = truncation_tail(f, radii[i]);

    for (size_t i = 0; i + 1 < rep.values.size(); ++i)
        if (rep.values[i] > rep.values[i + 1] + 1e-9 * (1.0 + rep.values[i]))
            throw Error(ErrorKind::InvalidArgument,
                        "integral means decreased along the radius grid");

    // Growth regimes live in the p-th power mean (the Hardy integral itself);
    // fitting M_p directly would misread p < 1 profiles.
    std::vector<double> hardy_integral(rep.values.size());
    const bool infinite = std::isinf(p);
    for (size_t i = 0; i < rep.values.size(); ++i)
        hardy_integral[i] = infinite ? rep.values[i] : std::pow(rep.values[i], p);
    rep.fit = fit_growth(radii, hardy_integral);
    return rep;
}

KoebeWitnessReport koebe_divergence_witness(double theta, std::span<const double> radii,
                                            int order, int K) {
    if (radii.empty())
        throw Error(ErrorKind::InvalidArgument, "witness needs at least one radius");
    for (size_t i = 0; i + 1 < radii.size(); ++i)
        if (!(radii[i] < radii[i + 1]))
            throw Error(ErrorKind::InvalidArgument, "witness radii must increase");
    for (double r : radii)
        if (!(r > 0.0 && r <= kMaxEvalRadius))
            throw Error(ErrorKind::RadiusOutOfRange, "witness radius outside (0, r_max]");
    if (K < 256)
        throw Error(ErrorKind::InvalidArgument, "witness quadrature needs K >= 256");
    if (order < 1)
        throw Error(ErrorKind::InvalidArgument, "witness needs a positive series order");

    const Series k_series = koebe_type(theta, order);

    KoebeWitnessReport rep;
    rep.theta = theta;
    rep.rows = parallel_map<KoebeRadiusRecord>(radii.size(), [&](size_t i) {
        const double r = radii[i];
        KoebeRadiusRecord row{};
        row.r = r;
        // |k_theta(r e^{i t})|^{1/2} = r^{1/2} / |1 - r e^{i(t - theta)}|; a full-period
        // integral, so the rotation drops out of the quadrature exactly.
        const double step = kTwoPi / K;
        double sum = 0.0;
        for (int k = 0; k < K; ++k)
            sum += 1.0 / std::abs(1.0 - std::polar(r, step * k));
        row.lhs = std::sqrt(r) * step * sum;
        row.rhs = std::numbers::sqrt2 * std::sqrt(r) * std::log(1.0 / (1.0 - r));
        row.ratio = row.lhs / row.rhs;

        // Series route: | int |k_N|^{1/2} - int |k|^{1/2} | <= 2 pi sqrt(tail).
        const double tail =
            std::pow(r, order + 1) * ((order + 1) - order * r) / ((1.0 - r) * (1.0 - r));
        row.truncation_error = kTwoPi * std::sqrt(tail);
        row.series_checked = row.truncation_error <= 0.01 * row.rhs;
        if (row.series_checked) {
            double ssum = 0.0;
            for (const Complex& v : eval_circle(k_series, r, K))
                ssum += std::sqrt(std::abs(v));
            row.series_lhs = step * ssum;
        } else {
            row.series_lhs = std::numeric_limits<double>::quiet_NaN();
        }
        return row;
    });

    if (!rep.rows.front().series_checked)
        throw Error(ErrorKind::TruncationInsufficient,
                    "order too small for a series cross-check at the smallest radius");

    std::vector<double> lhs(rep.rows.size());
    for (size_t i = 0; i < rep.rows.size(); ++i) lhs[i] = rep.rows[i].lhs;
    rep.fit = fit_growth(radii, lhs);
    rep.divergence_confirmed = rep.fit.model == GrowthModel::LogDivergent;
    return rep;
}

} // namespace bazlab
