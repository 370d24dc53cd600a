#ifndef BAZLAB_CORE_CLASSES_HPP
#define BAZLAB_CORE_CLASSES_HPP

#include <span>
#include <vector>

#include "rng.hpp"
#include "series.hpp"

namespace bazlab {

struct HerglotzAtom {
    double angle;  // in [0, 2pi)
    double weight; // > 0
};

/// Finite atomic probability measure on the circle; generates Caratheodory
/// functions p(z) = sum_k w_k (1 + z e^{-it_k}) / (1 - z e^{-it_k}).
class HerglotzMeasure {
public:
    explicit HerglotzMeasure(std::vector<HerglotzAtom> atoms);

    static HerglotzMeasure single(double angle);
    static HerglotzMeasure random(Rng& rng, int min_atoms = 1, int max_atoms = 8);

    std::span<const HerglotzAtom> atoms() const { return atoms_; }

private:
    std::vector<HerglotzAtom> atoms_;
};

struct JanowskiParams {
    double A;
    double B;
    void validate() const; // -1 <= B < A <= 1, else InvalidJanowski
};

Series caratheodory(const HerglotzMeasure& mu, int order);

// (1 + Az) / (1 + Bz) as a series.
Series janowski_phi(JanowskiParams jp, int order);

// Unit series g/z of the starlike member with zg'/g = phi_{A,B}(omega(z)).
// omega must satisfy omega(0) = 0 and a sampled Schwarz bound at r = 0.999.
Series starlike_janowski(JanowskiParams jp, const Series& omega, int order);

// k_theta(z) = z (1 - e^{-i theta} z)^{-2}; coefficient n e^{-i(n-1)theta}.
Series koebe_type(double theta, int order);

struct PositivityReport {
    double min_real;
    double at_radius;
    double at_theta;
    bool violation; // min_real < -1e-9
};

PositivityReport check_positive_real_part(const Series& p, std::span<const double> radii, int K);

// Schwarz-function generators. JSON spec:
//   {"kind":"z"} | {"kind":"power","k":n} |
//   {"kind":"blaschke","c":[re,im],"scale":s} | {"kind":"series","coeffs":[[re,im],...]}
Series omega_identity(int order);
Series omega_power(int k, int order);
Series omega_blaschke(Complex c, double scale_factor, int order);
Series random_omega(Rng& rng, int order);

} // namespace bazlab

#endif
