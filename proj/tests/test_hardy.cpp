#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "bazilevic.hpp"
#include "classes.hpp"
#include "hardy.hpp"
#include "testutil.hpp"

using namespace bazlab;
using testutil::random_series;
using testutil::thrown_kind;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

double parseval(const Series& f, double r) {
    double s = 0.0;
    double rp = 1.0;
    for (int n = 0; n <= f.order(); ++n) {
        s += std::norm(f.coeff(n)) * rp * rp;
        rp *= r;
    }
    return std::sqrt(s);
}

double koebe_rhs(double r) {
    return std::numbers::sqrt2 * std::sqrt(r) * std::log(1.0 / (1.0 - r));
}

// bounded member of the (1,0)-starlike family: g = z e^z, h = 1 + z
Series bounded_member(int order) {
    BazilevicSpec spec;
    spec.alphas = {1.0};
    spec.starlike_units = {starlike_janowski({1.0, 0.0}, omega_identity(order), order)};
    spec.h = janowski_phi({1.0, 0.0}, order);
    spec.order = order;
    return construct(spec).f();
}

} // namespace

TEST_CASE("integral_means: the identity has M_p = r for every p") {
    const Series z = Series::identity(8);
    for (double p : {0.5, 1.0, 2.0, kInf}) {
        CHECK(integral_means(z, p, 0.5, 256) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(integral_means(z, p, 0.9, 256) == doctest::Approx(0.9).epsilon(1e-12));
    }
}

TEST_CASE("integral_means validates inputs") {
    const Series z = Series::identity(8);
    CHECK(thrown_kind([&] { integral_means(z, 2.0, 1.5, 256); }) == ErrorKind::RadiusOutOfRange);
    CHECK(thrown_kind([&] { integral_means(z, 2.0, 0.5, 64); }) == ErrorKind::InvalidArgument);
    CHECK(thrown_kind([&] { integral_means(z, -1.0, 0.5, 256); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("quadrature matches Parseval at p = 2") {
    Rng rng(808);
    for (int rep = 0; rep < 25; ++rep) {
        const Series f = random_series(rng, 128, 2.0);
        const double r = rng.uniform(0.3, 0.99);
        const double quad = integral_means(f, 2.0, r, 4096);
        const double exact = parseval(f, r);
        CHECK(std::abs(quad - exact) <= 1e-8 * std::max(1e-30, exact));
    }
}

TEST_CASE("means are nondecreasing in r and in p") {
    Rng rng(809);
    for (int rep = 0; rep < 10; ++rep) {
        const Series f = random_series(rng, 48, 2.0);
        const double radii[] = {0.3, 0.5, 0.7, 0.9};
        double prev = 0.0;
        for (double r : radii) {
            const double m = integral_means(f, 1.0, r, 2048);
            CHECK(m + 1e-9 >= prev);
            prev = m;
        }
        const double ps[] = {0.5, 1.0, 2.0, 4.0, kInf};
        double prev_p = 0.0;
        for (double p : ps) {
            const double m = integral_means(f, p, 0.8, 2048);
            CHECK(m + 1e-9 >= prev_p);
            prev_p = m;
        }
    }
}

TEST_CASE("rotation invariance of Koebe-type means") {
    for (double p : {0.5, 2.0}) {
        for (double r : {0.5, 0.9}) {
            const double base = integral_means(koebe_type(0.0, 256), p, r, 2048);
            for (double theta : {kPi / 3.0, 2.1}) {
                const double rot = integral_means(koebe_type(theta, 256), p, r, 2048);
                CHECK(std::abs(rot - base) <= 1e-9 * base);
            }
        }
    }
}

TEST_CASE("truncated Koebe function clears the displayed lower bound") {
    const Series k = koebe_type(0.0, 512);

    // honest radius: truncation negligible, the bound holds outright
    const double lhs_09 = 2.0 * kPi * std::sqrt(integral_means(k, 0.5, 0.9, 4096));
    CHECK(lhs_09 >= koebe_rhs(0.9));

    // r = 0.99 at N = 512: assert against the bound minus the honest slack
    const double lhs_099 = 2.0 * kPi * std::sqrt(integral_means(k, 0.5, 0.99, 4096));
    const double tail = truncation_tail(k, 0.99);
    CHECK(lhs_099 >= koebe_rhs(0.99) - 2.0 * kPi * std::sqrt(tail));
}

TEST_CASE("means_profile: identity classifies bounded with M = r") {
    const std::vector<double> radii{0.95, 0.96, 0.97, 0.98, 0.99};
    const MeansReport rep = means_profile(Series::identity(8), 2.0, radii, 1024);
    CHECK(rep.fit.model == GrowthModel::Bounded);
    for (size_t i = 0; i < radii.size(); ++i)
        CHECK(rep.values[i] == doctest::Approx(radii[i]).epsilon(1e-12));
}

TEST_CASE("means_profile: truncated Koebe at p = 1/2 classifies log-divergent") {
    const Series k = koebe_type(0.0, 1024);
    const std::vector<double> radii{0.9, 0.925, 0.95, 0.97, 0.98};
    const MeansReport rep = means_profile(k, 0.5, radii, 4096);
    CHECK(rep.fit.model == GrowthModel::LogDivergent);
    for (double te : rep.truncation_error) CHECK(te < 0.01);
}

TEST_CASE("means_profile: bounded construction classifies bounded") {
    const Series f = bounded_member(64);
    const std::vector<double> radii{0.9, 0.925, 0.95, 0.97, 0.99};
    const MeansReport rep = means_profile(f, 0.5, radii, 4096);
    CHECK(rep.fit.model == GrowthModel::Bounded);
}

TEST_CASE("means_profile: single radius carries no classification claim") {
    const MeansReport rep = means_profile(Series::identity(8), 0.5,
                                          std::vector<double>{0.5}, 512);
    CHECK(rep.fit.model == GrowthModel::None);
    CHECK(rep.values.size() == 1);
    CHECK(std::isfinite(rep.values[0]));
}

TEST_CASE("means_profile rejects non-increasing radius grids") {
    CHECK(thrown_kind([] {
        means_profile(Series::identity(8), 2.0, std::vector<double>{0.9, 0.5}, 512);
    }) == ErrorKind::InvalidArgument);
}

TEST_CASE("truncation tail machinery") {
    const Series k = koebe_type(0.0, 256);
    CHECK(truncation_tail(k, 0.5) < truncation_tail(k, 0.9));
    CHECK(truncation_tail(koebe_type(0.0, 512), 0.9) < truncation_tail(k, 0.9));

    const double rmax = honest_max_radius(k, 0.01);
    CHECK(truncation_tail(k, rmax) <= 0.01);
    CHECK(truncation_tail(k, std::min(kMaxEvalRadius, rmax + 0.01)) > 0.01);
}

TEST_CASE("koebe witness: criterion radii clear 98% of the bound and fit log growth") {
    const std::vector<double> radii{0.9, 0.99, 0.999};
    const KoebeWitnessReport rep = koebe_divergence_witness(0.0, radii, 1024, 8192);
    REQUIRE(rep.rows.size() == 3);
    for (const KoebeRadiusRecord& row : rep.rows) {
        CHECK(row.lhs >= 0.98 * row.rhs);
        CHECK(row.ratio >= 0.98);
    }
    CHECK(rep.fit.model == GrowthModel::LogDivergent);
    CHECK(rep.divergence_confirmed);

    // N = 1024 admits the series cross-check at r = 0.9 but not at 0.999
    CHECK(rep.rows[0].series_checked);
    CHECK_FALSE(rep.rows[2].series_checked);
    CHECK(std::abs(rep.rows[0].series_lhs - rep.rows[0].lhs) <= rep.rows[0].truncation_error + 1e-6);
}

TEST_CASE("koebe witness is rotation invariant") {
    const std::vector<double> radii{0.5, 0.9};
    const KoebeWitnessReport a = koebe_divergence_witness(0.0, radii, 1024, 4096);
    const KoebeWitnessReport b = koebe_divergence_witness(kPi / 3.0, radii, 1024, 4096);
    REQUIRE(a.rows.size() == b.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].lhs == b.rows[i].lhs); // the kernel route drops theta exactly
        CHECK(std::abs(a.rows[i].series_lhs - b.rows[i].series_lhs) <= 1e-9);
    }
}

TEST_CASE("koebe witness: single modest radius stays finite, no classification") {
    const KoebeWitnessReport rep =
        koebe_divergence_witness(0.0, std::vector<double>{0.5}, 256, 1024);
    CHECK(rep.rows.size() == 1);
    CHECK(std::isfinite(rep.rows[0].lhs));
    CHECK(rep.fit.model == GrowthModel::None);
    CHECK_FALSE(rep.divergence_confirmed);
}

TEST_CASE("koebe witness enforces the truncation precondition") {
    CHECK(thrown_kind([] {
        koebe_divergence_witness(0.0, std::vector<double>{0.99}, 16, 512);
    }) == ErrorKind::TruncationInsufficient);
}
