#include "coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "parallel.hpp"

namespace bazlab {

namespace {

// Bounds indexed by degree n = 2..order.
std::vector<double> conjecture_bounds(int which, double alpha, int order) {
    if (which != 1 && which != 2)
        throw Error(ErrorKind::InvalidArgument, "conjecture selector must be 1 or 2");
    if (which == 1 && !(alpha > 0.0 && alpha <= 1.0))
        throw Error(ErrorKind::AlphaOutOfRange, "conjecture 1 needs 0 < alpha <= 1");
    if (which == 2 && !(alpha >= 1.0))
        throw Error(ErrorKind::AlphaOutOfRange, "conjecture 2 needs alpha >= 1");
    std::vector<double> bounds;
    bounds.reserve(static_cast<size_t>(std::max(0, order - 1)));
    if (which == 1) {
        const Series g = conjecture1_reference(alpha, order);
        for (int n = 2; n <= order; ++n) bounds.push_back(std::abs(g.coeff(n)));
    } else {
        for (int n = 2; n <= order; ++n) bounds.push_back(2.0 / (n - 1 + alpha));
    }
    return bounds;
}

std::vector<double> ratios_against(const std::vector<double>& bounds, double alpha,
                                   const Series& p, int order) {
    BazilevicSpec spec;
    spec.alphas = {alpha};
    spec.starlike_units = {Series::constant(1.0, order)}; // g = z
    spec.h = p;
    spec.order = order;
    const BazFunction f = construct(spec);
    std::vector<double> ratios(bounds.size());
    for (size_t i = 0; i < bounds.size(); ++i) {
        const int n = static_cast<int>(i) + 2;
        ratios[i] = std::abs(f.unit.coeff(n - 1)) / bounds[i];
    }
    return ratios;
}

} // namespace

PsiSeries psi_from_f(const BazFunction& f) {
    return {pow_real(f.unit, f.alpha), f.alpha};
}

double recurrence_check(const PsiSeries& psi, const Series& p) {
    if (psi.a.order() != p.order())
        throw Error(ErrorKind::LengthMismatch, "psi and p must share the truncation order");
    double worst = 0.0;
    for (int n = 1; n < psi.a.order(); ++n) {
        const Complex lhs = static_cast<double>(n + psi.alpha) * psi.a.coeff(n);
        const Complex rhs = psi.alpha * p.coeff(n);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

BoundReport bound_check(const PsiSeries& psi) {
    BoundReport rep;
    rep.max_ratio = 0.0;
    rep.witness_degree = 0;
    for (int n = 1; n <= psi.a.order(); ++n) {
        const double abs_A = std::abs(psi.a.coeff(n));
        const double bound = 2.0 * psi.alpha / (n + psi.alpha);
        const double ratio = abs_A / bound;
        rep.records.push_back({n, abs_A, bound, ratio});
        if (ratio > rep.max_ratio) {
            rep.max_ratio = ratio;
            rep.witness_degree = n;
        }
    }
    return rep;
}

PsiSeries extremal_G(double alpha, int order) {
    if (!(alpha > 0.0))
        throw Error(ErrorKind::AlphaOutOfRange, "extremal comparison needs alpha > 0");
    std::vector<Complex> c(static_cast<size_t>(order + 1));
    c[0] = 1.0;
    for (int n = 1; n <= order; ++n) c[n] = 2.0 * alpha / (n + alpha);
    return {Series(std::move(c)), alpha};
}

DominationResult domination_check(const PsiSeries& psi) {
    double margin = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= psi.a.order(); ++n) {
        const double bound = 2.0 * psi.alpha / (n + psi.alpha);
        margin = std::min(margin, bound - std::abs(psi.a.coeff(n)));
    }
    return {margin >= -1e-10, margin};
}

Series conjecture1_reference(double alpha, int order) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw Error(ErrorKind::AlphaOutOfRange, "reference solution defined for 0 < alpha <= 1");
    BazilevicSpec spec;
    spec.alphas = {alpha};
    spec.starlike_units = {Series::constant(1.0, order)};
    spec.h = caratheodory(HerglotzMeasure::single(0.0), order); // (1+z)/(1-z)
    spec.order = order;
    return construct(spec).f();
}

std::vector<double> conjecture_ratios(int which, double alpha, const Series& p, int order) {
    return ratios_against(conjecture_bounds(which, alpha, order), alpha, p, order);
}

SweepReport conjecture_sweep(int which, double alpha, int trials, uint64_t seed, int order) {
    if (trials < 0)
        throw Error(ErrorKind::InvalidArgument, "trial count must be nonnegative");
    const std::vector<double> bounds = conjecture_bounds(which, alpha, order);

    SweepReport rep{which, alpha, trials, seed, order, 0.0, -1, 0, {}};
    if (trials == 0) return rep;

    struct TrialResult {
        double max_ratio;
        int argmax_n;
        std::vector<HerglotzAtom> atoms;
        std::vector<std::pair<int, double>> excesses; // (n, ratio) above tolerance
    };
    const std::vector<TrialResult> outcomes = parallel_map<TrialResult>(
        static_cast<size_t>(trials), [&](size_t t) {
            Rng rng = Rng::for_trial(seed, t);
            const HerglotzMeasure mu = HerglotzMeasure::random(rng);
            const Series p = caratheodory(mu, order);
            const std::vector<double> ratios = ratios_against(bounds, alpha, p, order);
            TrialResult res{0.0, 0, {mu.atoms().begin(), mu.atoms().end()}, {}};
            for (size_t i = 0; i < ratios.size(); ++i) {
                const int n = static_cast<int>(i) + 2;
                if (ratios[i] > res.max_ratio) {
                    res.max_ratio = ratios[i];
                    res.argmax_n = n;
                }
                if (ratios[i] > 1.0 + kCounterexampleTol) res.excesses.emplace_back(n, ratios[i]);
            }
            return res;
        });

    for (int t = 0; t < trials; ++t) {
        const TrialResult& res = outcomes[static_cast<size_t>(t)];
        if (res.max_ratio > rep.max_ratio) {
            rep.max_ratio = res.max_ratio;
            rep.argmax_trial = t;
            rep.argmax_n = res.argmax_n;
        }
        for (const auto& [n, ratio] : res.excesses)
            rep.counterexamples.push_back({static_cast<uint64_t>(t), n, ratio, res.atoms});
    }
    if (rep.argmax_trial < 0 && trials > 0) {
        rep.argmax_trial = 0; // all ratios zero (e.g. h = 1 members)
        rep.argmax_n = 0;
    }
    return rep;
}

} // namespace bazlab
