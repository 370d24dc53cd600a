#include "classes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace bazlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSchwarzCheckRadius = 0.999;
constexpr double kSchwarzMargin = 1e-6;
constexpr int kSchwarzSamples = 512;
constexpr double kPositivityTol = 1e-9;

double reduce_angle(double t) {
    double r = std::fmod(t, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    return r;
}

} // namespace

HerglotzMeasure::HerglotzMeasure(std::vector<HerglotzAtom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty())
        throw Error(ErrorKind::InvalidMeasure, "measure needs at least one atom");
    double total = 0.0;
    for (HerglotzAtom& a : atoms_) {
        if (!(a.weight > 0.0) || !std::isfinite(a.weight) || !std::isfinite(a.angle))
            throw Error(ErrorKind::InvalidMeasure, "atom weights must be positive and finite");
        a.angle = reduce_angle(a.angle);
        total += a.weight;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw Error(ErrorKind::InvalidMeasure, "atom weights must sum to 1");
}

HerglotzMeasure HerglotzMeasure::single(double angle) {
    return HerglotzMeasure({{angle, 1.0}});
}

HerglotzMeasure HerglotzMeasure::random(Rng& rng, int min_atoms, int max_atoms) {
    const int count = min_atoms + static_cast<int>(rng.uniform_int(max_atoms - min_atoms + 1));
    std::vector<double> raw(count);
    double total = 0.0;
    for (double& w : raw) {
        w = rng.exponential(); // Dirichlet(1,...,1) after normalization
        total += w;
    }
    std::vector<HerglotzAtom> atoms(count);
    for (int i = 0; i < count; ++i)
        atoms[i] = {rng.uniform(0.0, kTwoPi), raw[i] / total};
    return HerglotzMeasure(std::move(atoms));
}

void JanowskiParams::validate() const {
    if (!(B >= -1.0 && B < A && A <= 1.0))
        throw Error(ErrorKind::InvalidJanowski, "need -1 <= B < A <= 1");
}

Series caratheodory(const HerglotzMeasure& mu, int order) {
    std::vector<Complex> c(static_cast<size_t>(order + 1));
    double mass = 0.0;
    for (const HerglotzAtom& a : mu.atoms()) mass += a.weight;
    c[0] = mass; // = 1 by measure invariant
    for (int n = 1; n <= order; ++n) {
        Complex s = 0.0;
        for (const HerglotzAtom& a : mu.atoms())
            s += a.weight * std::polar(1.0, -n * a.angle);
        c[n] = 2.0 * s;
    }
    return Series(std::move(c));
}

Series janowski_phi(JanowskiParams jp, int order) {
    jp.validate();
    std::vector<Complex> c(static_cast<size_t>(order + 1));
    c[0] = 1.0;
    double t = jp.A - jp.B; // coefficient (A-B)(-B)^{n-1}
    for (int n = 1; n <= order; ++n) {
        c[n] = t;
        t *= -jp.B;
    }
    return Series(std::move(c));
}

Series starlike_janowski(JanowskiParams jp, const Series& omega, int order) {
    jp.validate();
    if (omega.order() < order)
        throw Error(ErrorKind::InvalidArgument, "omega order too small for requested order");
    if (std::abs(omega.coeff(0)) > 1e-12)
        throw Error(ErrorKind::OmegaNotSchwarz, "omega(0) != 0");
    double sup = 0.0;
    for (const Complex& v : eval_circle(omega, kSchwarzCheckRadius, kSchwarzSamples))
        sup = std::max(sup, std::abs(v));
    if (sup >= 1.0 - kSchwarzMargin)
        throw Error(ErrorKind::OmegaNotSchwarz, "sampled |omega| reaches 1 on the check circle");

    // g/z = exp( int_0^z (phi(omega(t)) - 1) / t dt ), computed termwise.
    const Series q = compose(janowski_phi(jp, order), omega);
    std::vector<Complex> logg(static_cast<size_t>(order + 1));
    for (int n = 1; n <= order; ++n) logg[n] = q.coeff(n) / static_cast<double>(n);
    return exp_series(Series(std::move(logg)));
}

Series koebe_type(double theta, int order) {
    std::vector<Complex> c(static_cast<size_t>(order + 1));
    for (int n = 1; n <= order; ++n)
        c[n] = std::polar(static_cast<double>(n), -(n - 1) * theta);
    return Series(std::move(c));
}

PositivityReport check_positive_real_part(const Series& p, std::span<const double> radii, int K) {
    if (radii.empty())
        throw Error(ErrorKind::InvalidArgument, "positivity check needs at least one radius");
    PositivityReport rep{std::numeric_limits<double>::infinity(), 0.0, 0.0, false};
    for (double r : radii) {
        if (!(r > 0.0 && r < 1.0))
            throw Error(ErrorKind::RadiusOutOfRange, "positivity grid radii must lie in (0,1)");
        const auto vals = eval_circle(p, r, K);
        for (int k = 0; k < K; ++k) {
            const double re = vals[k].real();
            if (re < rep.min_real) {
                rep.min_real = re;
                rep.at_radius = r;
                rep.at_theta = kTwoPi * k / K;
            }
        }
    }
    rep.violation = rep.min_real < -kPositivityTol;
    return rep;
}

Series omega_identity(int order) { return Series::identity(order); }

Series omega_power(int k, int order) {
    if (k < 1 || k > order)
        throw Error(ErrorKind::InvalidArgument, "omega power exponent out of range");
    std::vector<Complex> c(static_cast<size_t>(order + 1));
    c[static_cast<size_t>(k)] = 1.0;
    return Series(std::move(c));
}

Series omega_blaschke(Complex c, double scale_factor, int order) {
    if (!(std::abs(c) < 1.0))
        throw Error(ErrorKind::InvalidArgument, "blaschke parameter needs |c| < 1");
    if (!(scale_factor > 0.0 && scale_factor <= 1.0))
        throw Error(ErrorKind::InvalidArgument, "blaschke scale must lie in (0, 1]");
    // z (z + c) / (1 + conj(c) z), a degree-2 Blaschke product when |c| < 1.
    std::vector<Complex> num(static_cast<size_t>(order + 1));
    num[1] = c;
    if (order >= 2) num[2] = 1.0;
    std::vector<Complex> den(static_cast<size_t>(order + 1));
    den[0] = 1.0;
    den[1] = std::conj(c);
    return scale(div(Series(std::move(num)), Series(std::move(den))), scale_factor);
}

Series random_omega(Rng& rng, int order) {
    const int parts = 1 + static_cast<int>(rng.uniform_int(3));
    std::vector<double> w(parts);
    double total = 0.0;
    for (double& x : w) {
        x = rng.exponential();
        total += x;
    }
    Series acc(order);
    for (int i = 0; i < parts; ++i) {
        Series part(order);
        switch (rng.uniform_int(3)) {
        case 0: part = omega_identity(order); break;
        case 1: part = omega_power(std::min(order, 2 + static_cast<int>(rng.uniform_int(4))), order); break;
        default: {
            const Complex c = std::polar(rng.uniform(0.0, 0.5), rng.uniform(0.0, kTwoPi));
            part = omega_blaschke(c, 1.0, order);
            break;
        }
        }
        acc = add(acc, scale(part, w[i] / total));
    }
    // convex combinations of Schwarz functions stay Schwarz; shrink a bit anyway
    return scale(acc, rng.uniform(0.5, 0.95));
}

} // namespace bazlab
