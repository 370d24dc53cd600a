#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "classes.hpp"
#include "testutil.hpp"

using namespace bazlab;
using testutil::thrown_kind;

namespace {

constexpr double kPi = std::numbers::pi;

// zg'/g = (F + zF')/F for the unit series F = g/z.
Series radial_quotient(const Series& F) {
    std::vector<Complex> num(static_cast<size_t>(F.order() + 1));
    for (int k = 0; k <= F.order(); ++k) num[k] = static_cast<double>(k + 1) * F.coeff(k);
    return div(Series(std::move(num)), F);
}

} // namespace

TEST_CASE("caratheodory: single atom gives (1+z)/(1-z)") {
    const Series p = caratheodory(HerglotzMeasure::single(0.0), 16);
    CHECK(std::abs(p.coeff(0) - 1.0) < 1e-15);
    for (int n = 1; n <= 16; ++n) CHECK(std::abs(p.coeff(n) - 2.0) < 1e-14);
}

TEST_CASE("caratheodory: symmetric pair gives (1+z^2)/(1-z^2)") {
    const HerglotzMeasure mu({{0.0, 0.5}, {kPi, 0.5}});
    const Series p = caratheodory(mu, 16);

    // independent oracle: series division of 1+z^2 by 1-z^2
    std::vector<Complex> num(17), den(17);
    num[0] = 1.0;
    num[2] = 1.0;
    den[0] = 1.0;
    den[2] = -1.0;
    const Series oracle = div(Series(std::move(num)), Series(std::move(den)));
    CHECK(max_abs_diff(p, oracle) < 1e-13);
}

TEST_CASE("caratheodory: unit constant term and the coefficient bound") {
    Rng rng(42);
    for (int rep = 0; rep < 50; ++rep) {
        const HerglotzMeasure mu = HerglotzMeasure::random(rng);
        const Series p = caratheodory(mu, 24);
        CHECK(std::abs(p.coeff(0) - 1.0) <= 1e-12);
        for (int n = 1; n <= 24; ++n) CHECK(std::abs(p.coeff(n)) <= 2.0 + 1e-12);
    }
}

TEST_CASE("measure validation") {
    CHECK(thrown_kind([] { HerglotzMeasure({{0.0, 0.4}, {1.0, 0.4}}); }) ==
          ErrorKind::InvalidMeasure);
    CHECK(thrown_kind([] { HerglotzMeasure({{0.0, -1.0}, {1.0, 2.0}}); }) ==
          ErrorKind::InvalidMeasure);
    CHECK(thrown_kind([] { HerglotzMeasure({}); }) == ErrorKind::InvalidMeasure);
    // angles land in [0, 2pi)
    const HerglotzMeasure mu({{-kPi, 1.0}});
    CHECK(mu.atoms()[0].angle == doctest::Approx(kPi));
}

TEST_CASE("janowski_phi: endpoints and the geometric midpoint") {
    const Series extreme = janowski_phi({1.0, -1.0}, 10);
    CHECK(std::abs(extreme.coeff(0) - 1.0) == 0.0);
    for (int n = 1; n <= 10; ++n) CHECK(std::abs(extreme.coeff(n) - 2.0) < 1e-15);

    const Series linear = janowski_phi({1.0, 0.0}, 10);
    CHECK(std::abs(linear.coeff(1) - 1.0) == 0.0);
    for (int n = 2; n <= 10; ++n) CHECK(std::abs(linear.coeff(n)) == 0.0);

    // (A,B) = (1/2, -1/2): oracle by direct series division of 1+Az by 1+Bz
    const Series mid = janowski_phi({0.5, -0.5}, 10);
    std::vector<Complex> num(11), den(11);
    num[0] = 1.0;
    num[1] = 0.5;
    den[0] = 1.0;
    den[1] = -0.5;
    CHECK(max_abs_diff(mid, div(Series(std::move(num)), Series(std::move(den)))) < 1e-14);
    for (int n = 1; n <= 10; ++n)
        CHECK(std::abs(mid.coeff(n) - std::pow(0.5, n - 1)) < 1e-14);
}

TEST_CASE("janowski parameter validation") {
    CHECK(thrown_kind([] { janowski_phi({0.0, 0.5}, 4); }) == ErrorKind::InvalidJanowski);
    CHECK(thrown_kind([] { janowski_phi({1.0, -1.5}, 4); }) == ErrorKind::InvalidJanowski);
    CHECK(thrown_kind([] { janowski_phi({1.5, 0.0}, 4); }) == ErrorKind::InvalidJanowski);
}

TEST_CASE("starlike_janowski: (1,-1) with omega = z reproduces the Koebe function") {
    const int n = 32;
    const Series unit = starlike_janowski({1.0, -1.0}, omega_identity(n), n);

    // oracle 1: exponentiate -2 log(1-z) termwise
    const Series one_minus = sub(Series::constant(1.0, n), Series::identity(n));
    const Series oracle = exp_series(scale(log_unit(one_minus), -2.0));
    CHECK(max_abs_diff(unit, oracle) < 1e-10);

    // oracle 2: classical expansion, coefficient n+1 at degree n, matches k_0
    const Series k0 = koebe_type(0.0, n);
    for (int k = 0; k < n; ++k) {
        CHECK(std::abs(unit.coeff(k) - (k + 1.0)) < 1e-10);
        CHECK(std::abs(unit.coeff(k) - k0.coeff(k + 1)) < 1e-10);
    }
}

TEST_CASE("starlike_janowski: (1,0) with omega = z gives z e^z") {
    const int n = 20;
    const Series unit = starlike_janowski({1.0, 0.0}, omega_identity(n), n);
    CHECK(max_abs_diff(unit, exp_series(Series::identity(n))) < 1e-13);
    double factorial = 1.0;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) factorial *= k;
        CHECK(std::abs(unit.coeff(k) - 1.0 / factorial) < 1e-13);
    }
}

TEST_CASE("starlike_janowski: omega = 0 gives g = z") {
    const Series unit = starlike_janowski({0.5, -0.5}, Series(16), 16);
    CHECK(max_abs_diff(unit, Series::constant(1.0, 16)) == 0.0);
}

TEST_CASE("starlike_janowski rejects non-Schwarz omega") {
    CHECK(thrown_kind([] {
        starlike_janowski({1.0, -1.0}, Series::constant(0.5, 8), 8);
    }) == ErrorKind::OmegaNotSchwarz);
    CHECK(thrown_kind([] {
        starlike_janowski({1.0, -1.0}, scale(omega_identity(8), 1.5), 8);
    }) == ErrorKind::OmegaNotSchwarz);
}

TEST_CASE("starlike output stays subordinate: |phi^{-1}(zg'/g)| < 1 on sample circles") {
    Rng rng(77);
    for (int rep = 0; rep < 20; ++rep) {
        const double A = rng.uniform(0.2, 1.0);
        const double B = rng.uniform(-1.0, A - 0.2);
        const JanowskiParams jp{A, B};
        const Series omega = random_omega(rng, 48);
        const Series unit = starlike_janowski(jp, omega, 48);
        const Series q = radial_quotient(unit);
        for (double r : {0.5, 0.9}) {
            for (const Complex& w : eval_circle(q, r, 64)) {
                const Complex pre = (w - 1.0) / (jp.A - jp.B * w);
                CHECK(std::abs(pre) < 1.0);
            }
        }
    }
}

TEST_CASE("koebe_type coefficients") {
    const Series k0 = koebe_type(0.0, 12);
    CHECK(std::abs(k0.coeff(0)) == 0.0);
    for (int n = 1; n <= 12; ++n) CHECK(std::abs(k0.coeff(n) - double(n)) == 0.0);

    const Series kpi = koebe_type(kPi, 12);
    for (int n = 1; n <= 12; ++n) {
        const double sign = (n % 2 == 1) ? 1.0 : -1.0;
        CHECK(std::abs(kpi.coeff(n) - sign * n) < 1e-12 * n);
    }

    Rng rng(5);
    for (int rep = 0; rep < 10; ++rep) {
        const Series k = koebe_type(rng.uniform(0.0, 2.0 * kPi), 12);
        for (int n = 1; n <= 12; ++n) CHECK(std::abs(std::abs(k.coeff(n)) - n) < 1e-12 * n);
    }
}

TEST_CASE("check_positive_real_part: constants, Poisson kernel, violation") {
    const std::vector<double> grid{0.5, 0.9};
    const auto const_rep = check_positive_real_part(Series::constant(1.0, 8), grid, 64);
    CHECK(const_rep.min_real == doctest::Approx(1.0));
    CHECK_FALSE(const_rep.violation);

    // p = (1+z)/(1-z): Re p(re^{i t}) = (1-r^2)/|1-re^{i t}|^2, minimized at t = pi
    const Series p = caratheodory(HerglotzMeasure::single(0.0), 256);
    const auto rep = check_positive_real_part(p, std::vector<double>{0.9}, 64);
    double oracle_min = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 64; ++k) {
        const double t = 2.0 * kPi * k / 64;
        const Complex den = 1.0 - std::polar(0.9, t);
        oracle_min = std::min(oracle_min, (1.0 - 0.81) / std::norm(den));
    }
    CHECK(rep.min_real == doctest::Approx(oracle_min).epsilon(1e-9));
    CHECK(rep.min_real > 0.0);
    CHECK_FALSE(rep.violation);

    std::vector<Complex> bad(9);
    bad[0] = 1.0;
    bad[1] = 3.0;
    const auto viol =
        check_positive_real_part(Series(std::move(bad)), std::vector<double>{0.9}, 64);
    CHECK(viol.violation);
    CHECK(viol.min_real == doctest::Approx(1.0 - 2.7).epsilon(1e-12));
}

TEST_CASE("omega generators are Schwarz and deterministic") {
    Rng a(123), b(123);
    const Series wa = random_omega(a, 32);
    const Series wb = random_omega(b, 32);
    CHECK(max_abs_diff(wa, wb) == 0.0);
    CHECK(std::abs(wa.coeff(0)) <= 1e-15);

    const Series bl = omega_blaschke(Complex(0.3, 0.2), 0.9, 32);
    CHECK(std::abs(bl.coeff(0)) == 0.0);
    double sup = 0.0;
    for (const Complex& v : eval_circle(bl, 0.999, 256)) sup = std::max(sup, std::abs(v));
    CHECK(sup < 1.0);
}
