#ifndef BAZLAB_CORE_HARDY_HPP
#define BAZLAB_CORE_HARDY_HPP

#include <span>
#include <vector>

#include "series.hpp"

namespace bazlab {

// M_p(r, f): p-th integral mean on the circle |z| = r by K-point periodic
// trapezoid; p may be +infinity (sampled max modulus).
double integral_means(const Series& f, double p, double r, int K);

enum class GrowthModel { None, Bounded, LogDivergent, PowerDivergent };

const char* growth_model_name(GrowthModel m);

struct GrowthFit {
    GrowthModel model = GrowthModel::None;
    double intercept = 0.0;
    double slope = 0.0;
    double power_exponent = 0.0; // s of (1-r)^{-s}, power model only
    double rel_residual = 0.0;   // of the chosen model
    double const_residual = 0.0; // of the constant fit (the "bounded" gate)
};

// Least-squares growth classification of samples y(r) against the model menu
// {constant, a + b log(1/(1-r)), a + b (1-r)^{-s}}. "Bounded" means the
// constant fit has relative residual < 0.05; needs >= 3 samples to classify.
GrowthFit fit_growth(std::span<const double> radii, std::span<const double> y);

struct MeansReport {
    double p;
    std::vector<double> radii;
    std::vector<double> values;           // M_p(r)
    std::vector<double> truncation_error; // tail-model bound on |f - f_N| at r
    GrowthFit fit;                        // fitted on M_p^p (the Hardy integral)
};

MeansReport means_profile(const Series& f, double p, std::span<const double> radii,
                          int K = 4096);

// Tail bound sum_{n>N} n r^n * C with C = max_n |a_n| / n.
double truncation_tail(const Series& f, double r);

// Largest radius with truncation_tail <= budget.
double honest_max_radius(const Series& f, double budget);

struct KoebeRadiusRecord {
    double r;
    double lhs;              // int |k_theta|^{1/2} dtheta, closed-form kernel
    double rhs;              // sqrt(2) r^{1/2} log(1/(1-r))
    double ratio;            // lhs / rhs
    double series_lhs;       // truncated-series route; NaN when not checked
    bool series_checked;     // tail bound permitted the series cross-check
    double truncation_error; // bound on the series-route integral error
};

struct KoebeWitnessReport {
    double theta;
    std::vector<KoebeRadiusRecord> rows;
    GrowthFit fit; // on the lhs values
    bool divergence_confirmed;
};

// Divergence witness for k_theta: per-radius lower-bound comparison plus a
// growth fit. The kernel modulus r / |1 - r e^{it}|^2 is evaluated in closed
// form (exact in theta); the order-N series route cross-checks every radius
// whose tail bound stays below 1% of the displayed bound.
KoebeWitnessReport koebe_divergence_witness(double theta, std::span<const double> radii,
                                            int order, int K);

} // namespace bazlab

#endif
