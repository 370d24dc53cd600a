#ifndef BAZLAB_CORE_COEFFS_HPP
#define BAZLAB_CORE_COEFFS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "bazilevic.hpp"
#include "classes.hpp"
#include "series.hpp"

namespace bazlab {

/// psi(z) = (f(z)/z)^alpha = 1 + sum A_n z^n for a member f of B_1(alpha).
struct PsiSeries {
    Series a;     // A_0 = 1
    double alpha; // > 0
};

PsiSeries psi_from_f(const BazFunction& f);

// Max over 1 <= n <= N-1 of |(n+alpha) A_n - alpha p_n|; the identity
// z psi' + alpha psi = alpha p makes this a pure floating-point residual.
double recurrence_check(const PsiSeries& psi, const Series& p);

struct BoundRecord {
    int n;
    double abs_A;
    double bound; // 2 alpha / (n + alpha)
    double ratio; // abs_A / bound
};

struct BoundReport {
    std::vector<BoundRecord> records; // n = 1..N
    double max_ratio;
    int witness_degree; // first degree attaining max_ratio
};

BoundReport bound_check(const PsiSeries& psi);

// The sharp comparison function: A_n = 2 alpha / (n + alpha) exactly.
PsiSeries extremal_G(double alpha, int order);

struct DominationResult {
    bool dominated;
    double margin; // min over n >= 1 of bound_n - |A_n|
};

DominationResult domination_check(const PsiSeries& psi);

// Coefficients b_n of the solution g of g'(z) (g(z)/z)^{alpha-1} = (1+z)/(1-z),
// returned as the full series g (b_1 = 1). Requires 0 < alpha <= 1.
Series conjecture1_reference(double alpha, int order);

// Per-degree ratios |a_n| / bound_n for the trial function built from p:
// conjecture 1 compares against |b_n|, conjecture 2 against 2/(n-1+alpha).
std::vector<double> conjecture_ratios(int which, double alpha, const Series& p, int order);

struct SweepCounterexample {
    uint64_t trial;
    int n;
    double ratio;
    std::vector<HerglotzAtom> atoms; // full replay spec
};

struct SweepReport {
    int which;
    double alpha;
    int trials;
    uint64_t seed;
    int order;
    double max_ratio;          // 0 when trials == 0
    int64_t argmax_trial;      // -1 when trials == 0
    int argmax_n;
    std::vector<SweepCounterexample> counterexamples; // ratio > 1 + 1e-6
};

SweepReport conjecture_sweep(int which, double alpha, int trials, uint64_t seed, int order);

inline constexpr double kCounterexampleTol = 1e-6;

} // namespace bazlab

#endif
