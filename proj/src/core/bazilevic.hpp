#ifndef BAZLAB_CORE_BAZILEVIC_HPP
#define BAZLAB_CORE_BAZILEVIC_HPP

#include <span>
#include <vector>

#include "series.hpp"

namespace bazlab {

/// Recipe for the multi-factor integral representation with beta = 0:
/// f(z) = [ alpha * int_0^z g_1^{a1} ... g_m^{am} h(t) t^{-1} dt ]^{1/alpha}.
/// Starlike factors are carried as unit series g_i/z; h is a Caratheodory
/// series. The z^alpha factor of the integrand is handled symbolically.
struct BazilevicSpec {
    std::vector<double> alphas;          // m >= 1 positive exponents
    double beta = 0.0;                   // only 0 is representable here
    std::vector<Series> starlike_units;  // g_i / z, unit constant term
    Series h = Series(0);                // Caratheodory series, h(0) = 1
    int order = kDefaultOrder;

    double alpha_total() const;
    void validate() const;
};

struct BazFunction {
    Series unit;  // f/z with constant term 1
    double alpha; // sum of the spec exponents

    Series f() const; // z * unit, order unit.order() + 1
};

BazFunction construct(const BazilevicSpec& spec);

// The weighted integrand product u = prod (g_i/z)^{a_i} * h; the constructed
// f satisfies f' * (f/z)^{alpha-1} = u identically to truncation.
Series integrand_unit(const BazilevicSpec& spec);

// P[alpha, f] = 1 + z f''/f' + (alpha - 1) z f'/f as a series.
Series p_operator(const BazFunction& f, double alpha);

// Trapezoid value of int_{theta1}^{theta2} Re P[alpha,f](r e^{i t}) dt.
double necessary_condition(const BazFunction& f, double alpha, double r,
                           double theta1, double theta2, int K);

struct NecessaryScan {
    double min_value;
    double at_radius;
    double at_theta1;
    double at_theta2;
    double full_circle_value; // widest window at the first radius
    bool exceeds_minus_pi;
};

// Scans (r, theta1, theta2) over radii x n1 x n2 windows; theta grids are
// aligned to the K-point circle so each window reuses the cached samples.
NecessaryScan scan_necessary_condition(const BazFunction& f, double alpha,
                                       std::span<const double> radii,
                                       int n_theta1, int n_theta2, int K);

// G(z) = int_0^z (g/t)^{1-1/alpha} (g')^{1/alpha} dt; G' = h^{1/alpha}.
Series to_CI(const BazFunction& g, double alpha);

// Inverse construction from F with F' = p^beta: recovers the member of
// B_1(1/beta) whose correspondence image is F.
BazFunction from_CI(const Series& F, double beta);

inline constexpr int kDefaultQuadraturePoints = 4096;

} // namespace bazlab

#endif
